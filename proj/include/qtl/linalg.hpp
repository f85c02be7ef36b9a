#pragma once

#include <optional>
#include <vector>

#include "qtl/ratq.hpp"

namespace qtl {

/// Dense matrix over the rational functions.  Only the small exact
/// computations this project needs: rank, solve, inverse.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(size_t rows, size_t cols) : r_(rows), c_(cols), a_(rows, std::vector<RatQ>(cols)) {}

    size_t rows() const { return r_; }
    size_t cols() const { return c_; }

    RatQ& at(size_t i, size_t j) { return a_[i][j]; }
    const RatQ& at(size_t i, size_t j) const { return a_[i][j]; }

    static QMatrix identity(size_t n) {
        QMatrix m(n, n);
        for (size_t i = 0; i < n; ++i) m.a_[i][i] = RatQ(1);
        return m;
    }

    friend QMatrix operator*(const QMatrix& x, const QMatrix& y) {
        QMatrix z(x.r_, y.c_);
        for (size_t i = 0; i < x.r_; ++i)
            for (size_t k = 0; k < x.c_; ++k) {
                if (x.a_[i][k].is_zero()) continue;
                for (size_t j = 0; j < y.c_; ++j)
                    z.a_[i][j] += x.a_[i][k] * y.a_[k][j];
            }
        return z;
    }

    friend bool operator==(const QMatrix& x, const QMatrix& y) {
        return x.r_ == y.r_ && x.c_ == y.c_ && x.a_ == y.a_;
    }

    size_t rank() const;

    /// Least solution of A x = b by Gaussian elimination; nullopt if
    /// inconsistent.  Free variables are set to zero.
    std::optional<std::vector<RatQ>> solve(const std::vector<RatQ>& b) const;

    /// Nullspace dimension of the homogeneous system.
    size_t nullity() const { return c_ - rank(); }

    std::optional<QMatrix> inverse() const;

private:
    size_t r_ = 0, c_ = 0;
    std::vector<std::vector<RatQ>> a_;
};

}  // namespace qtl
