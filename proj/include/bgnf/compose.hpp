#pragma once

#include <map>
#include <vector>

#include "bgnf/frequency.hpp"
#include "bgnf/series.hpp"

namespace bgnf {

/// Generating function of sigma_2 o sigma_1 where f1 generates sigma_1 and f2
/// generates sigma_2 (both third type). The implicit intermediate coordinates
/// are solved as truncated power series by fixed-point iteration.
GeneratingFunction compose_pair(const GeneratingFunction& f1, const GeneratingFunction& f2, int rho);

/// Folds compose_pair over tau_3, tau_4, ..., tau_rho, where tau_h is
/// generated by -sum xi eta - S_h. Missing degrees are treated as zero.
GeneratingFunction compose_chain(const std::map<int, PhasePolynomial>& pieces, int n, int rho,
                                 Basis basis = Basis::Real);

/// The Hamiltonian H' in the new coordinates of the transformation generated
/// by S: H'(x, y + dS/dx) = H(x + dS/dy, y) through degree rho.
GradedSeries transform_hamiltonian(const GradedSeries& H, const GeneratingFunction& S, const FrequencyVector& nu,
                                   int rho);

/// Third-type generating function of the inverse transformation through
/// degree rho: compose_pair(S, inverse) is the identity.
GeneratingFunction inverse_generating_function(const GeneratingFunction& S, int rho);

/// New coordinates (x_1..x_n, y_1..y_n) of the transformation generated by S
/// as real-basis series in the old coordinates, exact through degree rho.
std::vector<PhasePolynomial> explicit_map(const GeneratingFunction& S, int rho);

/// True iff the map of S preserves {x_a, y_b} = delta_ab, {x_a, x_b} = 0 and
/// {y_a, y_b} = 0 through degree `through`.
bool preserves_brackets(const GeneratingFunction& S, int through);

}  // namespace bgnf
