#pragma once

#include <string>
#include <vector>

#include "bgnf/phase_polynomial.hpp"
#include "bgnf/rational.hpp"

namespace bgnf {

/// Oscillator frequencies (nu_1, ..., nu_n); every entry is a nonzero rational.
class FrequencyVector {
 public:
  FrequencyVector() = default;
  explicit FrequencyVector(std::vector<Rational> nu);
  FrequencyVector(std::initializer_list<long> nu);

  /// Parses a comma separated list such as "1,1" or "1/2,3".
  static FrequencyVector parse(const std::string& text);

  int n() const noexcept { return static_cast<int>(nu_.size()); }
  const Rational& operator[](int j) const { return nu_[static_cast<std::size_t>(j)]; }
  const std::vector<Rational>& values() const noexcept { return nu_; }

  /// nu scaled by the lcm of the denominators: integer weights with the same
  /// resonance relations.
  const std::vector<long>& integer_weights() const noexcept { return weights_; }

  /// sum_j nu_j (alpha_j - beta_j) for a complex-basis exponent vector.
  Rational eigenvalue_weight(const ExponentVector& e) const;
  /// Exact zero test of sum_j nu_j (alpha_j - beta_j) on cleared denominators.
  bool is_resonant_monomial(const ExponentVector& e) const;
  /// Sign of sum_j nu_j (alpha_j - beta_j).
  int eigenvalue_sign(const ExponentVector& e) const;

  std::string str() const;
  friend bool operator==(const FrequencyVector& a, const FrequencyVector& b) { return a.nu_ == b.nu_; }

 private:
  std::vector<Rational> nu_;
  std::vector<long> weights_;
};

/// sum_j nu_j/2 (q_j^2 + eta_j^2), written in the requested basis
/// (equal to sum_j nu_j/2 z_j zb_j in the complex basis).
PhasePolynomial quadratic_part(const FrequencyVector& nu, Basis basis);

}  // namespace bgnf
