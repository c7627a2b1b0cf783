#include "bgnf/series.hpp"

#include "bgnf/error.hpp"

namespace bgnf {

namespace {

void check_piece(const PhasePolynomial& p, Basis basis, int n, int k, int truncation) {
  if (k < 3) throw argument_error("series pieces start at degree 3, got " + std::to_string(k));
  if (k > truncation)
    throw argument_error("piece of degree " + std::to_string(k) + " exceeds truncation " +
                         std::to_string(truncation));
  if (p.is_zero()) return;
  if (p.basis() != basis || p.n() != n) throw argument_error("piece does not match the series basis/arity");
  if (!p.is_homogeneous(k)) throw argument_error("piece stored at degree " + std::to_string(k) + " is not homogeneous");
}

}  // namespace

GradedSeries::GradedSeries(Basis basis, int n, int truncation, bool quadratic)
    : basis_(basis), n_(n), truncation_(truncation), quadratic_(quadratic) {
  if (n < 1 || n > kMaxDegreesOfFreedom) throw argument_error("unsupported number of degrees of freedom");
  if (truncation < 2) throw argument_error("series truncation must be at least 2");
}

PhasePolynomial GradedSeries::piece(int k) const {
  auto it = pieces_.find(k);
  return it == pieces_.end() ? PhasePolynomial(basis_, n_) : it->second;
}

void GradedSeries::set_piece(int k, const PhasePolynomial& p) {
  check_piece(p, basis_, n_, k, truncation_);
  if (p.is_zero()) {
    pieces_.erase(k);
  } else {
    pieces_[k] = p;
  }
}

PhasePolynomial GradedSeries::polynomial(const FrequencyVector& nu, int upto) const {
  if (nu.n() != n_) throw argument_error("frequency vector does not match the series arity");
  PhasePolynomial out(basis_, n_);
  if (quadratic_ && upto >= 2) out += quadratic_part(nu, basis_);
  for (const auto& [k, p] : pieces_)
    if (k <= upto) out += p;
  return out;
}

GradedSeries GradedSeries::in_basis(Basis basis) const {
  if (basis == basis_) return *this;
  GradedSeries out(basis, n_, truncation_, quadratic_);
  for (const auto& [k, p] : pieces_) out.pieces_[k] = bgnf::in_basis(p, basis);
  return out;
}

GradedSeries GradedSeries::truncated(int rho) const {
  GradedSeries out(basis_, n_, rho, quadratic_);
  for (const auto& [k, p] : pieces_)
    if (k <= rho) out.pieces_[k] = p;
  return out;
}

GradedSeries GradedSeries::map_pieces(const std::function<PhasePolynomial(const PhasePolynomial&)>& f) const {
  GradedSeries out(basis_, n_, truncation_, quadratic_);
  for (const auto& [k, p] : pieces_) out.set_piece(k, f(p));
  return out;
}

GradedSeries GradedSeries::from_polynomial(const PhasePolynomial& p, const FrequencyVector& nu, int truncation) {
  if (nu.n() != p.n()) throw argument_error("frequency vector does not match the polynomial arity");
  if (p.degree() > truncation)
    throw argument_error("polynomial degree " + std::to_string(p.degree()) + " exceeds truncation " +
                         std::to_string(truncation));
  for (int k = 0; k < 2; ++k)
    if (!p.homogeneous_part(k).is_zero())
      throw Error(Error::Category::QuadraticPart,
                  "Hamiltonian has a nonzero degree-" + std::to_string(k) + " part");
  if (p.homogeneous_part(2) != quadratic_part(nu, p.basis()))
    throw Error(Error::Category::QuadraticPart,
                "quadratic part is not sum_j nu_j/2 (q_j^2 + eta_j^2) for nu = (" + nu.str() + "): got " +
                    to_string(p.homogeneous_part(2)));
  GradedSeries out(p.basis(), p.n(), truncation, true);
  for (int k = 3; k <= truncation; ++k) out.set_piece(k, p.homogeneous_part(k));
  return out;
}

GeneratingFunction::GeneratingFunction(Kind kind, Basis basis, int n, int truncation)
    : kind_(kind), basis_(basis), n_(n), truncation_(truncation) {
  if (n < 1 || n > kMaxDegreesOfFreedom) throw argument_error("unsupported number of degrees of freedom");
  if (truncation < 2) throw argument_error("generating function truncation must be at least 2");
}

PhasePolynomial GeneratingFunction::piece(int k) const {
  auto it = pieces_.find(k);
  return it == pieces_.end() ? PhasePolynomial(basis_, n_) : it->second;
}

void GeneratingFunction::set_piece(int k, const PhasePolynomial& p) {
  check_piece(p, basis_, n_, k, truncation_);
  if (p.is_zero()) {
    pieces_.erase(k);
  } else {
    pieces_[k] = p;
  }
}

PhasePolynomial GeneratingFunction::full_real(int upto) const {
  PhasePolynomial out(Basis::Real, n_);
  for (int j = 0; j < n_; ++j) {
    ExponentVector e(2 * n_);
    e.set(j, 1);
    e.set(n_ + j, 1);
    out.add_term(e, 1);
  }
  for (const auto& [k, p] : pieces_)
    if (k <= upto) out += bgnf::in_basis(p, Basis::Real);
  return kind_ == Kind::SecondType ? out : -out;
}

GeneratingFunction GeneratingFunction::in_basis(Basis basis) const {
  if (basis == basis_) return *this;
  GeneratingFunction out(kind_, basis, n_, truncation_);
  for (const auto& [k, p] : pieces_) out.pieces_[k] = bgnf::in_basis(p, basis);
  return out;
}

GeneratingFunction GeneratingFunction::truncated(int rho) const {
  GeneratingFunction out(kind_, basis_, n_, rho);
  for (const auto& [k, p] : pieces_)
    if (k <= rho) out.pieces_[k] = p;
  return out;
}

}  // namespace bgnf
