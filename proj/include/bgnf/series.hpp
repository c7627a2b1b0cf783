#pragma once

#include <functional>
#include <map>

#include "bgnf/frequency.hpp"
#include "bgnf/phase_polynomial.hpp"

namespace bgnf {

/// Power series sum_j nu_j/2 (eta_j^2 + q_j^2) + sum_{k=3}^{rho} P_k truncated
/// at rho. The quadratic part is implied by a flag; pieces of degree >= 3 are
/// stored homogeneous and nonzero.
class GradedSeries {
 public:
  GradedSeries() = default;
  GradedSeries(Basis basis, int n, int truncation, bool quadratic = true);

  Basis basis() const noexcept { return basis_; }
  int n() const noexcept { return n_; }
  int truncation() const noexcept { return truncation_; }
  bool has_quadratic() const noexcept { return quadratic_; }
  const std::map<int, PhasePolynomial>& pieces() const noexcept { return pieces_; }

  /// Degree-k piece (zero polynomial when absent).
  PhasePolynomial piece(int k) const;
  /// Stores a homogeneous degree-k piece (3 <= k <= truncation); zero erases.
  void set_piece(int k, const PhasePolynomial& p);

  /// Quadratic part plus pieces of degree <= upto, as one polynomial.
  PhasePolynomial polynomial(const FrequencyVector& nu, int upto) const;
  PhasePolynomial polynomial(const FrequencyVector& nu) const { return polynomial(nu, truncation_); }

  GradedSeries in_basis(Basis basis) const;
  GradedSeries truncated(int rho) const;
  GradedSeries map_pieces(const std::function<PhasePolynomial(const PhasePolynomial&)>& f) const;

  /// Splits a polynomial by degree. The degree-2 part must equal the quadratic
  /// part for nu and degrees 0 and 1 must vanish.
  static GradedSeries from_polynomial(const PhasePolynomial& p, const FrequencyVector& nu, int truncation);

  friend bool operator==(const GradedSeries&, const GradedSeries&) = default;

 private:
  Basis basis_ = Basis::Real;
  int n_ = 0;
  int truncation_ = 0;
  bool quadratic_ = true;
  std::map<int, PhasePolynomial> pieces_;
};

/// Generating function with an implicit identity part:
///   second type  W(q, eta) =  sum q_j eta_j + sum_k W_k(q, eta)
///   third type   S(q, eta) = -sum q_j eta_j - sum_k S_k(q, eta)
/// Only the pieces W_k / S_k (k >= 3) are stored.
class GeneratingFunction {
 public:
  enum class Kind { SecondType, ThirdType };

  GeneratingFunction() = default;
  GeneratingFunction(Kind kind, Basis basis, int n, int truncation);

  Kind kind() const noexcept { return kind_; }
  Basis basis() const noexcept { return basis_; }
  int n() const noexcept { return n_; }
  int truncation() const noexcept { return truncation_; }
  const std::map<int, PhasePolynomial>& pieces() const noexcept { return pieces_; }

  PhasePolynomial piece(int k) const;
  void set_piece(int k, const PhasePolynomial& p);
  bool is_identity() const noexcept { return pieces_.empty(); }

  /// Identity part plus the pieces, with the kind's sign convention, in the
  /// real basis.
  PhasePolynomial full_real(int upto) const;

  GeneratingFunction in_basis(Basis basis) const;
  GeneratingFunction truncated(int rho) const;

  friend bool operator==(const GeneratingFunction&, const GeneratingFunction&) = default;

 private:
  Kind kind_ = Kind::ThirdType;
  Basis basis_ = Basis::Real;
  int n_ = 0;
  int truncation_ = 0;
  std::map<int, PhasePolynomial> pieces_;
};

}  // namespace bgnf
