#pragma once

#include <optional>
#include <string>

#include "bgnf/frequency.hpp"
#include "bgnf/series.hpp"

namespace bgnf {

struct NormalForm {
  GradedSeries G;
  GeneratingFunction W;  // second type
};

/// Degree-rho Birkhoff-Gustavson normalization of K. G and W are returned in
/// K's basis; W_k lies in image D for every k.
NormalForm normalize(const GradedSeries& K, const FrequencyVector& nu, int rho);

/// Degree-k part of K(q, eta + dW/dq) - G(q + dW/deta, eta) using the pieces
/// of K up to k and the pieces of G and W below k (real basis).
PhasePolynomial ordinary_residual(const GradedSeries& K, const GradedSeries& G, const GeneratingFunction& W,
                                  const FrequencyVector& nu, int k);

struct NormalFormViolation {
  int degree;
  std::string monomial;  // offending complex-basis term
};

/// First piece (lowest degree, then first term) with a nonzero image
/// component; nullopt when G is in normal form.
std::optional<NormalFormViolation> find_normal_form_violation(const GradedSeries& G, const FrequencyVector& nu);

bool check_normal_form(const GradedSeries& G, const FrequencyVector& nu);

/// True iff G(q + dW/deta, eta) - K(q, eta + dW/dq) vanishes through degree rho.
bool verify_defining_equation(const GradedSeries& K, const GradedSeries& G, const GeneratingFunction& W,
                              const FrequencyVector& nu, int rho);

}  // namespace bgnf
