#include <gtest/gtest.h>

#include "mrange/errors.hpp"
#include "mrange/io.hpp"
#include "mrange/range.hpp"
#include "mrange/selftest.hpp"

using namespace mrange;
using io::Json;

namespace {

GaussianRational q(const char* s) { return GaussianRational::parse(s); }

template <class Fn>
std::string parse_error_of(Fn&& fn) {
  try {
    fn();
  } catch (const ParseError& e) {
    return e.what();
  }
  return "<no error>";
}

}  // namespace

TEST(Io, MatrixForms) {
  const MatrixQi expected(2, {q("1"), q("0+1i"), q("-1/2"), q("3")});
  EXPECT_EQ(io::matrix_from_json(io::parse_json(R"([["1","i"],["-1/2","3"]])")), expected);
  EXPECT_EQ(io::matrix_from_json(io::parse_json(R"({"n":2,"rows":[["1","i"],["-1/2","3"]]})")), expected);
  EXPECT_EQ(io::to_json(expected).dump(), R"({"n":2,"rows":[["1","0+1i"],["-1/2","3"]]})");
}

TEST(Io, MatrixErrorsCarryLocation) {
  EXPECT_NE(parse_error_of([] { io::matrix_from_json(io::parse_json(R"([["1","2"],["3"]])")); }).find("/1"), std::string::npos);
  EXPECT_THROW(io::matrix_from_json(io::parse_json(R"([["1","2"]])")), ParseError);
  EXPECT_THROW(io::matrix_from_json(io::parse_json(R"([])")), ParseError);
  EXPECT_THROW(io::matrix_from_json(io::parse_json(R"({"n":3,"rows":[["1"]]})")), ParseError);
  EXPECT_THROW(io::matrix_from_json(io::parse_json(R"({"rows":[["1"]],"extra":1})")), ParseError);
  EXPECT_THROW(io::matrix_from_json(io::parse_json(R"([[1]])")), ParseError);
  const std::string msg = parse_error_of([] { io::matrix_from_json(io::parse_json(R"([["1","2/0"],["3","4"]])")); });
  EXPECT_NE(msg.find("zero denominator"), std::string::npos) << msg;
  EXPECT_NE(msg.find("/0/1"), std::string::npos) << msg;
}

TEST(Io, JsonSyntaxErrors) {
  EXPECT_THROW(io::parse_json("[[\"1\""), ParseError);
  EXPECT_THROW(io::parse_json("{oops}"), ParseError);
}

TEST(Io, Functions) {
  EXPECT_EQ(io::function_from_json(io::parse_json(R"({"type":"polynomial","coeffs":["0","0","1"]})")),
            EntireFunction::polynomial(Poly::monomial(1, 2)));
  EXPECT_EQ(io::function_from_json(io::parse_json(R"({"type":"sin_family","a":"0","b":"1","c":"1","d":"0"})")),
            EntireFunction::sin_family(0, 1, 1, 0));
  EXPECT_EQ(io::function_from_json(io::parse_json(R"({"type":"exp_poly","v":"5","p_coeffs":["1"],"c":"1","d":"0"})")),
            EntireFunction::exp_poly(5, Poly{1}, 1, 0));
  EXPECT_THROW(io::function_from_json(io::parse_json(R"({"type":"cosh"})")), ParseError);
  EXPECT_THROW(io::function_from_json(io::parse_json(R"({"type":"polynomial","coeffs":["1"],"x":1})")), ParseError);
  EXPECT_THROW(io::function_from_json(io::parse_json(R"({"coeffs":["1","1"]})")), ParseError);
  EXPECT_THROW(io::function_from_json(io::parse_json(R"({"type":"polynomial","coeffs":["7"]})")), DomainError);
}

TEST(Io, VerdictAndProfileShapes) {
  const auto f = EntireFunction::polynomial(Poly::monomial(1, 2));
  EXPECT_EQ(io::to_json(decide_range(f, MatrixQi::jordan_block(2, 0))).dump(),
            R"({"solvable":false,"case":"III","blocking":{"value":"0","reason":"UncoverablePartition","partition":[2]}})");
  EXPECT_EQ(io::to_json(ramification_profile(f)).dump(),
            R"({"case":"III","omitted_values":[],"totally_ramified_values":[{"value":"0","multiplicities":[2],"root_multiplicities":[2],"infinitely_many_preimages":false}]})");
  const auto sine = EntireFunction::sin_family(0, 1, 1, 0);
  EXPECT_EQ(io::to_json(describe_range(sine, 2)).dump(),
            R"({"case":"IV","n":2,"omitted_values":[],"uncoverable":[{"value":"0","partitions":[[2]]},{"value":"1","partitions":[[2]]}]})");
}

TEST(Io, TextRendering) {
  const std::string text = io::render_text(io::to_json(decide_range(EntireFunction::polynomial(Poly::monomial(1, 2)),
                                                                     MatrixQi::jordan_block(2, 0))));
  EXPECT_NE(text.find("solvable: false"), std::string::npos) << text;
  EXPECT_NE(text.find("case: III"), std::string::npos) << text;
}

class IoFuzz : public ::testing::Test {
 protected:
  gen::Rng rng{97};
};

TEST_F(IoFuzz, ScalarMatrixAndFunctionRoundTrips) {
  int cases = 0;
  for (int trial = 0; trial < 1200; ++trial) {
    const int n = 1 + trial % 5;
    MatrixQi a(n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) a(r, c) = gen::gaussian_rational(rng, 50, 12);
    const std::string text = io::to_json(a).dump();
    EXPECT_EQ(io::matrix_from_json(io::parse_json(text)), a);
    EXPECT_EQ(io::to_json(io::matrix_from_json(io::parse_json(text))).dump(), text);

    const Poly p = gen::poly(rng, 1 + trial % 6, 9) * Poly::constant(gen::gaussian_rational(rng, 4, 5) + GaussianRational(100));
    const auto f = EntireFunction::polynomial(p);
    EXPECT_EQ(io::function_from_json(io::parse_json(io::to_json(f).dump())), f);

    const GaussianRational x = gen::gaussian_rational(rng, 1000, 1000);
    EXPECT_EQ(io::scalar_from_json(io::parse_json(io::to_json(x).dump())), x);
    ++cases;
  }
  EXPECT_GE(cases, 1000);
}
