#ifndef CHIOS_LINALG_HPP
#define CHIOS_LINALG_HPP

#include "chios/rational.hpp"

#include <optional>
#include <vector>

namespace chios {

/// Dense matrix of exact rationals. Just enough linear algebra for the
/// library: rank, determinant, row echelon with recorded pivots, and
/// solving consistent systems.
class RatMatrix {
public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Rational& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    void swap_rows(int i, int j);

    /// Columns are the given vectors (all of equal length).
    static RatMatrix from_columns(const std::vector<std::vector<Rational>>& columns);

private:
    int rows_, cols_;
    std::vector<Rational> a_;
};

int matrix_rank(RatMatrix m);

/// Determinant of a square matrix by fraction-full Gaussian elimination.
Rational determinant(RatMatrix m);

/// Reduced row echelon form, eliminating left to right. Pivot columns
/// come back in elimination order (strictly increasing).
struct Echelon {
    RatMatrix mat;
    std::vector<int> pivot_cols;
};
Echelon reduced_row_echelon(RatMatrix m);

/// Unique solution of A·x = b when A has full column rank and the system
/// is consistent; nullopt when inconsistent or the solution is not unique.
std::optional<std::vector<Rational>> solve_unique(const RatMatrix& a, const std::vector<Rational>& b);

} // namespace chios

#endif
