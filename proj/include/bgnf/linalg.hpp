#pragma once

#include <vector>

#include "bgnf/rational.hpp"

namespace bgnf {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Row-reduces in place to reduced row echelon form; returns pivot columns.
std::vector<int> row_reduce(RationalMatrix& m, int columns);

/// Basis of the right nullspace of an r x c matrix (vectors of length c).
/// The basis is the standard one read off the reduced echelon form, one
/// vector per free column in ascending column order.
std::vector<std::vector<Rational>> nullspace(RationalMatrix m, int columns);

int rank(RationalMatrix m, int columns);

}  // namespace bgnf
