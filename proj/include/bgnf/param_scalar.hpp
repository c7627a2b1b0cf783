#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bgnf/rational.hpp"
#include "bgnf/symbols.hpp"

namespace bgnf {

/// Power product of parameter symbols, factors sorted by symbol id.
struct ParamMonomial {
  std::vector<std::pair<SymbolId, unsigned>> factors;

  bool is_one() const noexcept { return factors.empty(); }
  unsigned degree() const;
  unsigned exponent(SymbolId s) const;

  friend ParamMonomial operator*(const ParamMonomial& a, const ParamMonomial& b);
  friend bool operator==(const ParamMonomial&, const ParamMonomial&) = default;
  friend auto operator<=>(const ParamMonomial&, const ParamMonomial&) = default;
};

/// Exact coefficient: a polynomial in the parameter symbols over Q(i).
/// Terms are kept sorted by monomial with no zero coefficients.
class ParamScalar {
 public:
  using Term = std::pair<ParamMonomial, GaussianRational>;

  ParamScalar() = default;
  ParamScalar(GaussianRational c);                                      // NOLINT
  ParamScalar(Rational c) : ParamScalar(GaussianRational(std::move(c))) {}  // NOLINT
  ParamScalar(long c) : ParamScalar(GaussianRational(c)) {}              // NOLINT

  static ParamScalar symbol(SymbolId s, unsigned exponent = 1);
  static ParamScalar symbol(const std::string& name) { return symbol(symbols::intern(name)); }
  static ParamScalar imaginary_unit() { return ParamScalar(GaussianRational::i()); }

  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one()); }
  /// Value of a constant scalar; nullopt when parameters are present.
  std::optional<GaussianRational> constant_value() const;
  /// Coefficient of the parameter-free term.
  GaussianRational constant_term() const;

  ParamScalar operator-() const;
  ParamScalar& operator+=(const ParamScalar& o);
  ParamScalar& operator-=(const ParamScalar& o);
  ParamScalar& operator*=(const ParamScalar& o) { return *this = *this * o; }
  ParamScalar& operator*=(const GaussianRational& c);

  friend ParamScalar operator+(ParamScalar a, const ParamScalar& b) { return a += b; }
  friend ParamScalar operator-(ParamScalar a, const ParamScalar& b) { return a -= b; }
  friend ParamScalar operator*(const ParamScalar& a, const ParamScalar& b);
  friend ParamScalar operator*(ParamScalar a, const GaussianRational& c) { return a *= c; }
  friend ParamScalar operator*(const GaussianRational& c, ParamScalar a) { return a *= c; }

  friend bool operator==(const ParamScalar&, const ParamScalar&) = default;
  friend auto operator<=>(const ParamScalar&, const ParamScalar&) = default;

  /// Conjugates every numeric coefficient and maps each symbol to its partner.
  ParamScalar conj() const;

  /// Substitutes values for the listed symbols (others stay symbolic).
  ParamScalar substitute(const std::map<SymbolId, ParamScalar>& values) const;

  /// Symbols that occur with nonzero exponent, sorted by id.
  std::vector<SymbolId> symbols_used() const;

 private:
  friend class ParamScalarBuilder;
  std::vector<Term> terms_;
};

/// Quotient and remainder of multivariate division by a single divisor
/// (graded lexicographic order on symbol ids). The remainder is zero iff the
/// divisor divides the dividend.
struct DivisionResult {
  ParamScalar quotient;
  ParamScalar remainder;
};
DivisionResult divide(const ParamScalar& dividend, const ParamScalar& divisor);

/// Canonical textual form with terms sorted by symbol names (grlex).
std::string to_string(const ParamScalar& s);

/// Terms in canonical print order: graded lexicographic on symbol names.
std::vector<ParamScalar::Term> canonical_terms(const ParamScalar& s);
std::string monomial_string(const ParamMonomial& m);

}  // namespace bgnf
