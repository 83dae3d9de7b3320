#include "mrange/scalar.hpp"

#include <cctype>

#include "mrange/errors.hpp"

namespace mrange {

BigRational make_rational(const BigInt& num, const BigInt& den) {
  if (sgn(den) == 0) throw DivisionByZero();
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

std::string render_rational(const BigRational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  BigRational re = re_ * o.re_ - im_ * o.im_;
  BigRational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) throw DivisionByZero();
  // x / y = x * conj(y) / |y|^2
  const BigRational n = o.norm();
  BigRational re = (re_ * o.re_ + im_ * o.im_) / n;
  BigRational im = (im_ * o.re_ - re_ * o.im_) / n;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::strong_ordering operator<=>(const GaussianRational& a, const GaussianRational& b) {
  if (int c = cmp(a.re_, b.re_); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  int c = cmp(a.im_, b.im_);
  if (c == 0) return std::strong_ordering::equal;
  return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::string GaussianRational::to_string() const {
  std::string out = render_rational(re_);
  if (sgn(im_) == 0) return out;
  out += sgn(im_) < 0 ? '-' : '+';
  out += render_rational(abs(im_));
  out += 'i';
  return out;
}

namespace {

class ScalarParser {
 public:
  explicit ScalarParser(std::string_view text) : text_(text) {}

  GaussianRational run() {
    skip_ws();
    if (at_end()) fail("empty scalar");
    BigRational re(0), im(0);
    bool have_re = false, have_im = false;
    bool first = true;
    while (!at_end() && !std::isspace(static_cast<unsigned char>(peek()))) {
      const std::size_t term_start = pos_;
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-' between real and imaginary parts");
      }
      auto [value, imaginary] = term();
      if (sign < 0) value = -value;
      if (imaginary) {
        if (have_im) fail("duplicate imaginary part", term_start);
        im = value;
        have_im = true;
      } else {
        if (have_re || have_im) fail("real part must come first and only once", term_start);
        re = value;
        have_re = true;
      }
      first = false;
    }
    skip_ws();
    if (!at_end()) fail("unexpected trailing characters");
    return {re, im};
  }

 private:
  std::pair<BigRational, bool> term() {
    if (!at_end() && peek() == 'i') {
      ++pos_;
      return {BigRational(1), true};
    }
    BigInt num = digits();
    BigInt den(1);
    if (!at_end() && peek() == '/') {
      ++pos_;
      const std::size_t den_pos = pos_;
      den = digits();
      if (sgn(den) == 0) fail("zero denominator", den_pos);
    }
    bool imaginary = false;
    if (!at_end() && peek() == 'i') {
      ++pos_;
      imaginary = true;
    }
    return {make_rational(num, den), imaginary};
  }

  BigInt digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == start) fail("expected digits");
    return BigInt(std::string(text_.substr(start, pos_ - start)));
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  [[noreturn]] void fail(const std::string& what) const { fail(what, pos_); }
  [[noreturn]] void fail(const std::string& what, std::size_t at) const {
    throw ParseError("invalid scalar \"" + std::string(text_) + "\": " + what, at);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

GaussianRational GaussianRational::parse(std::string_view text) { return ScalarParser(text).run(); }

BigRational norm(const GaussianRational& x) { return x.norm(); }

std::ostream& operator<<(std::ostream& os, const GaussianRational& x) { return os << x.to_string(); }

}  // namespace mrange
