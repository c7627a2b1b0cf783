#pragma once

#include <vector>

#include "bgnf/frequency.hpp"
#include "bgnf/phase_polynomial.hpp"

namespace bgnf {

/// D = sum_j nu_j (q_j d/deta_j - eta_j d/dq_j). In the complex basis D is
/// diagonal: z^a zb^b has eigenvalue i sum_j nu_j (a_j - b_j).
PhasePolynomial apply_D(const PhasePolynomial& p, const FrequencyVector& nu);

struct Decomposition {
  PhasePolynomial image_part;
  PhasePolynomial kernel_part;
};

/// Splits a homogeneous polynomial into its ker D and image D components,
/// both returned in p's basis.
Decomposition decompose(const PhasePolynomial& p, const FrequencyVector& nu);

/// The unique w in image D with D w = p. Throws if p has a kernel component.
PhasePolynomial invert_D_on_image(const PhasePolynomial& p, const FrequencyVector& nu);

/// True iff D p = 0.
bool in_kernel(const PhasePolynomial& p, const FrequencyVector& nu);

/// Complex-basis monomials of degree k with zero eigenvalue, ascending.
std::vector<ExponentVector> kernel_basis(int k, int n, const FrequencyVector& nu);

/// One complex-basis monomial from each conjugate pair spanning image D on
/// V_k: the member with positive eigenvalue. Ordered by the number of z
/// factors (descending), then the z exponents, then the zb exponents, both
/// lexicographically descending. For n = 2, k = 3 this reads
/// z1^3, z1^2 z2, z1 z2^2, z2^3, z1^2 zb1, z1^2 zb2, ...
std::vector<ExponentVector> image_representatives(int k, int n, const FrequencyVector& nu);

/// Swaps the z and zb halves of a complex-basis exponent vector.
ExponentVector conjugate_exponent(const ExponentVector& e);

}  // namespace bgnf
