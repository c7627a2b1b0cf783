#pragma once

#include <vector>

#include "bgnf/phase_polynomial.hpp"

namespace bgnf {

/// Real-basis helpers for evaluating Hamiltonians along the canonical
/// transformations generated by F = sum q_j eta_j + (higher pieces).
/// `pieces` always means the sum of the pieces of degree >= 3 only.

/// The images (q, eta) of the identity substitution in the real basis.
std::vector<PhasePolynomial> identity_images(int n);

/// P(q, eta + dF/dq) truncated at rho.
PhasePolynomial shift_momenta(const PhasePolynomial& P, const PhasePolynomial& pieces, int rho);

/// P(q + dF/deta, eta) truncated at rho.
PhasePolynomial shift_positions(const PhasePolynomial& P, const PhasePolynomial& pieces, int rho);

/// Poisson bracket {a, b} = sum_j da/dq_j db/deta_j - da/deta_j db/dq_j.
PhasePolynomial poisson_bracket(const PhasePolynomial& a, const PhasePolynomial& b);

}  // namespace bgnf
