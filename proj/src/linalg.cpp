#include "chios/linalg.hpp"

#include "chios/errors.hpp"

#include <utility>

namespace chios {

void RatMatrix::swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < cols_; ++c)
        std::swap(at(i, c), at(j, c));
}

RatMatrix RatMatrix::from_columns(const std::vector<std::vector<Rational>>& columns) {
    if (columns.empty()) return RatMatrix(0, 0);
    int rows = static_cast<int>(columns.front().size());
    int cols = static_cast<int>(columns.size());
    RatMatrix m(rows, cols);
    for (int j = 0; j < cols; ++j) {
        if (static_cast<int>(columns[static_cast<size_t>(j)].size()) != rows)
            fail(ErrorKind::SizeMismatch, "ragged column lengths");
        for (int i = 0; i < rows; ++i)
            m.at(i, j) = columns[static_cast<size_t>(j)][static_cast<size_t>(i)];
    }
    return m;
}

int matrix_rank(RatMatrix m) {
    return static_cast<int>(reduced_row_echelon(std::move(m)).pivot_cols.size());
}

Rational determinant(RatMatrix m) {
    if (m.rows() != m.cols())
        fail(ErrorKind::SizeMismatch, "determinant of non-square matrix");
    int n = m.rows();
    Rational det = 1;
    for (int k = 0; k < n; ++k) {
        int pivot = -1;
        for (int i = k; i < n; ++i)
            if (m.at(i, k) != 0) { pivot = i; break; }
        if (pivot < 0) return Rational(0);
        if (pivot != k) {
            m.swap_rows(pivot, k);
            det = -det;
        }
        det *= m.at(k, k);
        Rational inv = 1 / m.at(k, k);
        for (int i = k + 1; i < n; ++i) {
            if (m.at(i, k) == 0) continue;
            Rational f = m.at(i, k) * inv;
            for (int j = k; j < n; ++j)
                m.at(i, j) -= f * m.at(k, j);
        }
    }
    return det;
}

Echelon reduced_row_echelon(RatMatrix m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int pivot = -1;
        for (int i = row; i < m.rows(); ++i)
            if (m.at(i, col) != 0) { pivot = i; break; }
        if (pivot < 0) continue;
        m.swap_rows(pivot, row);
        Rational inv = 1 / m.at(row, col);
        for (int j = col; j < m.cols(); ++j)
            m.at(row, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col) == 0) continue;
            Rational f = m.at(i, col);
            for (int j = col; j < m.cols(); ++j)
                m.at(i, j) -= f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return Echelon{std::move(m), std::move(pivots)};
}

std::optional<std::vector<Rational>> solve_unique(const RatMatrix& a, const std::vector<Rational>& b) {
    if (static_cast<int>(b.size()) != a.rows())
        fail(ErrorKind::SizeMismatch, "right-hand side length mismatch");
    RatMatrix aug(a.rows(), a.cols() + 1);
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j)
            aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b[static_cast<size_t>(i)];
    }
    Echelon e = reduced_row_echelon(std::move(aug));
    // inconsistent when the augmented column is a pivot
    for (int p : e.pivot_cols)
        if (p == a.cols()) return std::nullopt;
    // unique only with full column rank
    if (static_cast<int>(e.pivot_cols.size()) != a.cols()) return std::nullopt;
    std::vector<Rational> x(static_cast<size_t>(a.cols()));
    for (size_t r = 0; r < e.pivot_cols.size(); ++r)
        x[static_cast<size_t>(e.pivot_cols[r])] = e.mat.at(static_cast<int>(r), a.cols());
    return x;
}

} // namespace chios
