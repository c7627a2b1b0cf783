#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bgnf/param_scalar.hpp"

namespace bgnf {

/// Which phase-space coordinates a polynomial is written in.
/// Real: slots (q_1..q_n, eta_1..eta_n). Complex: slots (z_1..z_n, zb_1..zb_n)
/// with z_j = q_j + i eta_j and zb_j = q_j - i eta_j.
enum class Basis { Real, Complex };

inline constexpr int kMaxDegreesOfFreedom = 4;

/// Exponents of the 2n phase variables. Ordered graded-lexicographically:
/// first by total degree, then by the exponent of slot 0, slot 1, ...
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(int slots);
  ExponentVector(std::initializer_list<int> exponents);

  int size() const noexcept { return size_; }
  int operator[](int slot) const { return exponents_[static_cast<std::size_t>(slot)]; }
  void set(int slot, int exponent);
  int degree() const noexcept { return degree_; }

  friend ExponentVector operator+(const ExponentVector& a, const ExponentVector& b);
  friend bool operator==(const ExponentVector& a, const ExponentVector& b) {
    return a.size_ == b.size_ && a.exponents_ == b.exponents_;
  }
  friend std::strong_ordering operator<=>(const ExponentVector& a, const ExponentVector& b);

 private:
  std::array<std::uint8_t, 2 * kMaxDegreesOfFreedom> exponents_{};
  std::uint8_t size_ = 0;
  std::uint16_t degree_ = 0;
};

/// Sparse polynomial in 2n phase variables with ParamScalar coefficients.
class PhasePolynomial {
 public:
  using Terms = std::map<ExponentVector, ParamScalar>;

  PhasePolynomial() = default;
  PhasePolynomial(Basis basis, int n);

  static PhasePolynomial constant(Basis basis, int n, const ParamScalar& c);
  static PhasePolynomial variable(Basis basis, int n, int slot);
  static PhasePolynomial monomial(Basis basis, int n, const ExponentVector& e, const ParamScalar& c = 1);

  Basis basis() const noexcept { return basis_; }
  int n() const noexcept { return n_; }
  int slots() const noexcept { return 2 * n_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  /// Highest total degree present; -1 for the zero polynomial.
  int degree() const;
  /// Lowest total degree present; -1 for the zero polynomial.
  int low_degree() const;
  bool is_homogeneous(int k) const;

  ParamScalar coefficient(const ExponentVector& e) const;
  /// Adds c * x^e in place.
  void add_term(const ExponentVector& e, const ParamScalar& c);

  PhasePolynomial homogeneous_part(int k) const;
  /// Drops every term of total degree above rho.
  PhasePolynomial truncated(int rho) const;

  PhasePolynomial operator-() const;
  PhasePolynomial& operator+=(const PhasePolynomial& o);
  PhasePolynomial& operator-=(const PhasePolynomial& o);
  PhasePolynomial& operator*=(const ParamScalar& c);

  friend PhasePolynomial operator+(PhasePolynomial a, const PhasePolynomial& b) { return a += b; }
  friend PhasePolynomial operator-(PhasePolynomial a, const PhasePolynomial& b) { return a -= b; }
  friend PhasePolynomial operator*(PhasePolynomial a, const ParamScalar& c) { return a *= c; }
  friend PhasePolynomial operator*(const ParamScalar& c, PhasePolynomial a) { return a *= c; }
  /// Untruncated product.
  friend PhasePolynomial operator*(const PhasePolynomial& a, const PhasePolynomial& b);

  friend bool operator==(const PhasePolynomial& a, const PhasePolynomial& b);

  /// Applies f to every coefficient, dropping zeros.
  template <class F>
  PhasePolynomial map_coefficients(F&& f) const {
    PhasePolynomial out(basis_, n_);
    for (const auto& [e, c] : terms_) out.add_term(e, f(c));
    return out;
  }

 private:
  Basis basis_ = Basis::Real;
  int n_ = 0;
  Terms terms_;
};

/// Throws unless a and b share basis and n.
void require_compatible(const PhasePolynomial& a, const PhasePolynomial& b);

PhasePolynomial add(const PhasePolynomial& a, const PhasePolynomial& b);
PhasePolynomial mul_truncated(const PhasePolynomial& a, const PhasePolynomial& b, int rho);
PhasePolynomial partial(const PhasePolynomial& p, int slot);

/// Composition p(images[0], ..., images[2n-1]) with terms above rho dropped.
/// Every image must have zero constant term. Images share one basis and n,
/// which may differ from p's.
PhasePolynomial substitute_truncated(const PhasePolynomial& p, const std::vector<PhasePolynomial>& images,
                                     int rho);

PhasePolynomial to_complex(const PhasePolynomial& p);
PhasePolynomial to_real(const PhasePolynomial& p);
PhasePolynomial in_basis(const PhasePolynomial& p, Basis basis);

/// Conjugates coefficients and symbols; in the complex basis also swaps z_j and zb_j.
PhasePolynomial conjugate(const PhasePolynomial& p);
inline bool is_real(const PhasePolynomial& p) { return conjugate(p) == p; }

/// Applies a coefficient-level substitution of parameter symbols.
PhasePolynomial substitute_parameters(const PhasePolynomial& p, const std::map<SymbolId, ParamScalar>& values);

/// Symbols used anywhere in the coefficients.
std::vector<SymbolId> parameters_used(const PhasePolynomial& p);

/// Name of a phase-variable slot: q1/eta1 or z1/zb1.
std::string slot_name(Basis basis, int n, int slot);

/// Canonical text form: terms in descending graded lexicographic order, one
/// term per +/- separated chunk, parameters and i folded into each chunk.
std::string to_string(const PhasePolynomial& p);

/// All exponent vectors of total degree k in `slots` variables, ascending.
std::vector<ExponentVector> monomials_of_degree(int slots, int k);

}  // namespace bgnf
