#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "bgnf/phase_polynomial.hpp"
#include "bgnf/series.hpp"

namespace bgnf {

struct ParseOptions {
  /// Basis to use when the text names no phase variable; a mismatch with the
  /// variables actually used is an error.
  std::optional<Basis> basis;
  /// Degrees of freedom; inferred from the largest variable index when absent.
  std::optional<int> n;
  /// Accept p1..pn as aliases of eta1..etan.
  bool momentum_alias = false;
  /// Line number of the first line of `text`, for error positions.
  int first_line = 1;
};

/// Parses the polynomial expression grammar:
///   integers and a/b rationals, `i`, phase variables q1/eta1 or z1/zb1,
///   parameter identifiers (a7c is the conjugate of a7), + - * / ^ and
///   parentheses. Division is only by nonzero numeric constants.
PhasePolynomial parse_polynomial(std::string_view text, const ParseOptions& options = {});

/// Parses a coefficient expression that may not mention phase variables.
ParamScalar parse_scalar(std::string_view text);

/// Contents of a series/generating-function file.
///
///   # kind series|second|third
///   # basis real|complex
///   # n <dof>
///   # nu <comma list>            (optional)
///   # truncation <rho>
///   # quadratic                  (series only: implied quadratic part)
///   # degree k
///   <polynomial>
///
/// A file without `# degree` sections holds one expression which is split by
/// degree (its degree-2 part is then checked against nu).
struct SeriesDocument {
  enum class Kind { Series, SecondType, ThirdType };
  Kind kind = Kind::Series;
  Basis basis = Basis::Real;
  int n = 0;
  std::optional<int> truncation;
  std::optional<FrequencyVector> nu;
  bool quadratic = false;
  /// Explicit degree-2 section or degree-2 part of a plain expression.
  std::optional<PhasePolynomial> explicit_quadratic;
  std::map<int, PhasePolynomial> pieces;
};

SeriesDocument parse_series_document(std::string_view text, const ParseOptions& options = {});

std::string format_series(const GradedSeries& s, const std::optional<FrequencyVector>& nu = std::nullopt);
std::string format_generating_function(const GeneratingFunction& g,
                                       const std::optional<FrequencyVector>& nu = std::nullopt);

/// Builds a GradedSeries from a document, validating the quadratic part
/// against nu. Pieces above `truncation` are dropped.
GradedSeries series_from_document(const SeriesDocument& doc, const FrequencyVector& nu, int truncation);
GeneratingFunction generating_function_from_document(const SeriesDocument& doc, int truncation);

}  // namespace bgnf
