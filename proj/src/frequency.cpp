#include "bgnf/frequency.hpp"

#include <sstream>

#include "bgnf/error.hpp"

namespace bgnf {

FrequencyVector::FrequencyVector(std::vector<Rational> nu) : nu_(std::move(nu)) {
  if (nu_.empty() || static_cast<int>(nu_.size()) > kMaxDegreesOfFreedom)
    throw argument_error("frequency vector must have between 1 and " + std::to_string(kMaxDegreesOfFreedom) +
                         " entries");
  mpz_class lcm = 1;
  for (const auto& v : nu_) {
    if (v.is_zero()) throw argument_error("frequencies must be nonzero");
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.denominator().get_mpz_t());
  }
  for (const auto& v : nu_) {
    mpz_class w = v.numerator() * (lcm / v.denominator());
    if (!w.fits_slong_p()) throw argument_error("frequency too large");
    weights_.push_back(w.get_si());
  }
}

FrequencyVector::FrequencyVector(std::initializer_list<long> nu)
    : FrequencyVector(std::vector<Rational>(nu.begin(), nu.end())) {}

FrequencyVector FrequencyVector::parse(const std::string& text) {
  std::vector<Rational> nu;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto b = item.find_first_not_of(" \t");
    auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw argument_error("empty entry in frequency list '" + text + "'");
    nu.push_back(Rational::parse(item.substr(b, e - b + 1)));
  }
  return FrequencyVector(std::move(nu));
}

Rational FrequencyVector::eigenvalue_weight(const ExponentVector& e) const {
  Rational w;
  for (int j = 0; j < n(); ++j) w += nu_[static_cast<std::size_t>(j)] * Rational(e[j] - e[n() + j]);
  return w;
}

int FrequencyVector::eigenvalue_sign(const ExponentVector& e) const {
  if (e.size() != 2 * n()) throw argument_error("exponent vector does not match the frequency vector");
  long s = 0;
  for (int j = 0; j < n(); ++j) s += weights_[static_cast<std::size_t>(j)] * (e[j] - e[n() + j]);
  return (s > 0) - (s < 0);
}

bool FrequencyVector::is_resonant_monomial(const ExponentVector& e) const { return eigenvalue_sign(e) == 0; }

std::string FrequencyVector::str() const {
  std::string out;
  for (const auto& v : nu_) out += (out.empty() ? "" : ",") + v.str();
  return out;
}

PhasePolynomial quadratic_part(const FrequencyVector& nu, Basis basis) {
  const int n = nu.n();
  PhasePolynomial out(basis, n);
  for (int j = 0; j < n; ++j) {
    ParamScalar half_nu(nu[j] * Rational(1, 2));
    if (basis == Basis::Complex) {
      ExponentVector e(2 * n);
      e.set(j, 1);
      e.set(n + j, 1);
      out.add_term(e, half_nu);
    } else {
      ExponentVector a(2 * n);
      a.set(j, 2);
      ExponentVector b(2 * n);
      b.set(n + j, 2);
      out.add_term(a, half_nu);
      out.add_term(b, half_nu);
    }
  }
  return out;
}

}  // namespace bgnf
