#include "bgnf/rational.hpp"

#include "bgnf/error.hpp"

namespace bgnf {

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw argument_error("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  mpq_class q;
  if (s.empty() || q.set_str(s, 10) != 0) throw argument_error("not a rational number: '" + s + "'");
  if (q.get_den() == 0) throw argument_error("rational with zero denominator: '" + s + "'");
  return Rational(q);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw argument_error("division by zero");
  value_ /= o.value_;
  return *this;
}

Rational pow(const Rational& base, unsigned exponent) {
  Rational out(1);
  for (unsigned e = 0; e < exponent; ++e) out *= base;
  return out;
}

GaussianRational GaussianRational::inverse() const {
  Rational n = norm();
  if (n.is_zero()) throw argument_error("division by zero");
  return {re / n, -im / n};
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (im.is_zero() && o.im.is_zero()) {
    re *= o.re;
    return *this;
  }
  Rational r = re * o.re - im * o.im;
  Rational m = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(m);
  return *this;
}

std::string GaussianRational::str() const {
  if (im.is_zero()) return re.str();
  std::string imag = im.is_one() ? "i" : (im == Rational(-1) ? "-i" : im.str() + "*i");
  if (re.is_zero()) return imag;
  return "(" + re.str() + (im.sign() > 0 ? "+" : "") + imag + ")";
}

}  // namespace bgnf
