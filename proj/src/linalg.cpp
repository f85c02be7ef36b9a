#include "qtl/linalg.hpp"

namespace qtl {

namespace {

// Row-echelon reduction in place; returns pivot columns.
std::vector<size_t> echelon(std::vector<std::vector<RatQ>>& m) {
    std::vector<size_t> pivots;
    if (m.empty()) return pivots;
    size_t rows = m.size(), cols = m[0].size();
    size_t row = 0;
    for (size_t col = 0; col < cols && row < rows; ++col) {
        size_t sel = row;
        while (sel < rows && m[sel][col].is_zero()) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[row]);
        RatQ inv = m[row][col].inverse();
        for (size_t j = col; j < cols; ++j) m[row][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == row || m[i][col].is_zero()) continue;
            RatQ f = m[i][col];
            for (size_t j = col; j < cols; ++j) m[i][j] -= f * m[row][j];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

size_t QMatrix::rank() const {
    auto m = a_;
    return echelon(m).size();
}

std::optional<std::vector<RatQ>> QMatrix::solve(const std::vector<RatQ>& b) const {
    auto m = a_;
    for (size_t i = 0; i < r_; ++i) m[i].push_back(b[i]);
    auto pivots = echelon(m);
    // Inconsistent iff the augmented column is a pivot.
    if (!pivots.empty() && pivots.back() == c_) return std::nullopt;
    std::vector<RatQ> x(c_);
    for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = m[i][c_];
    return x;
}

std::optional<QMatrix> QMatrix::inverse() const {
    if (r_ != c_) return std::nullopt;
    auto m = a_;
    for (size_t i = 0; i < r_; ++i) {
        for (size_t j = 0; j < r_; ++j) m[i].push_back(i == j ? RatQ(1) : RatQ(0));
    }
    auto pivots = echelon(m);
    if (pivots.size() != r_) return std::nullopt;
    QMatrix inv(r_, r_);
    for (size_t i = 0; i < r_; ++i)
        for (size_t j = 0; j < r_; ++j) inv.at(i, j) = m[i][r_ + j];
    return inv;
}

}  // namespace qtl
