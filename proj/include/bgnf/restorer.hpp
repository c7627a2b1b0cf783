#pragma once

#include <map>
#include <string>
#include <vector>

#include "bgnf/frequency.hpp"
#include "bgnf/series.hpp"

namespace bgnf {

/// How to pick the image component H_k^image at one degree.
struct RestoreChoice {
  enum class Kind { Zero, Fresh, Explicit };

  Kind kind = Kind::Zero;
  std::string prefix;             // Fresh
  PhasePolynomial explicit_image;  // Explicit

  static RestoreChoice zero() { return {}; }
  static RestoreChoice fresh(std::string prefix);
  static RestoreChoice explicit_polynomial(PhasePolynomial image);
};

/// Per-degree choices; degrees without an entry use the default (Zero unless
/// changed).
class RestoreChoices {
 public:
  RestoreChoices() = default;
  explicit RestoreChoices(RestoreChoice fallback) : fallback_(std::move(fallback)) {}

  /// Fresh parameters with prefixes[0] at degree 3, prefixes[1] at degree 4,
  /// and so on; the last prefix covers every higher degree.
  static RestoreChoices fresh(const std::vector<std::string>& prefixes);

  void set(int k, RestoreChoice choice) { by_degree_[k] = std::move(choice); }
  const RestoreChoice& at(int k) const;

 private:
  RestoreChoice fallback_;
  std::map<int, RestoreChoice> by_degree_;
};

/// Concrete image choices for k = 3..rho in the requested basis. Fresh
/// parameters are numbered per prefix in degree order: for each monomial m of
/// image_representatives the symbol <prefix><index> multiplies m and its
/// conjugate partner <prefix><index>c multiplies conj(m). Explicit choices
/// are validated (degree k, no kernel component).
std::map<int, PhasePolynomial> realize_choices(const RestoreChoices& choices, int n, const FrequencyVector& nu,
                                               int rho, Basis basis);

/// The fresh-parameter image polynomial for one degree; `next_index` is
/// advanced past the symbols used.
PhasePolynomial fresh_image_polynomial(int k, int n, const FrequencyVector& nu, const std::string& prefix,
                                       int& next_index);

struct InverseSolution {
  GradedSeries H;
  GeneratingFunction S;  // third type
};

/// Degree-k part of H(q, eta + dS/dq) - G(q + dS/deta, eta) using the pieces of
/// H, G and S below k (real basis). This is Psi_k.
PhasePolynomial inverse_residual(const GradedSeries& H, const GradedSeries& G, const GeneratingFunction& S,
                                 const FrequencyVector& nu, int k);

/// Solves the degree-rho inverse problem degree by degree.
InverseSolution restore_direct(const GradedSeries& G, const FrequencyVector& nu, int rho,
                               const RestoreChoices& choices);

struct StagedSolution {
  GradedSeries H;
  std::map<int, PhasePolynomial> S_pieces;  // S_r of the stage-r transformation
};

/// Solves the degree-rho inverse problem stage by stage through the chain of
/// transformations generated by the homogeneous pieces S_r.
StagedSolution restore_staged(const GradedSeries& G, const FrequencyVector& nu, int rho,
                              const RestoreChoices& choices);

/// Correction Theta^(r)_k: H^(r)_k = H^(r-1)_k + Theta^(r)_k for k > r.
/// H_prev holds H^(r-1); H_cur must hold H^(r) at every degree below k.
PhasePolynomial compute_theta(int r, int k, const PhasePolynomial& S_r, const GradedSeries& H_prev,
                              const GradedSeries& H_cur, const FrequencyVector& nu);

/// True iff H(q, eta + dS/dq) - G(q + dS/deta, eta) vanishes through degree rho.
bool verify_inverse_equation(const GradedSeries& H, const GradedSeries& G, const GeneratingFunction& S,
                             const FrequencyVector& nu, int rho);

}  // namespace bgnf
