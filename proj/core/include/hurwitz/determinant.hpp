#pragma once

#include "hurwitz/matrix.hpp"

#include <vector>

namespace hurwitz {

/// Fraction-free Bareiss determinant of an integer matrix.
Integer det_bareiss(DenseMatrix<Integer> m);

/// Exact determinant of a rational matrix: rows are scaled integral first,
/// then Bareiss runs on integers.
Rational det_exact(const ExactMatrix& m);

/// Gaussian elimination with partial pivoting.
double det_float(FloatMatrix m);

std::vector<Rational> leading_principal_minors(const ExactMatrix& m, int up_to);
std::vector<double> leading_principal_minors(const FloatMatrix& m, int up_to);

/// Exact rank by fraction-free elimination with full pivot search.
int rank_exact(const ExactMatrix& m);

/// Numerical rank: singular values above rel_tol * sigma_max.
int rank_float(const FloatMatrix& m, double rel_tol = 1e-10);

/// Row-wise integral scaling of a rational matrix. The scales are positive,
/// so every minor of the scaled matrix has the sign of the original minor;
/// the original value is recovered by dividing by the product of the scales
/// of the rows involved.
struct RowCleared {
    DenseMatrix<Integer> ints;
    std::vector<Integer> row_scale;
};

RowCleared clear_row_denominators(const ExactMatrix& m);

} // namespace hurwitz
