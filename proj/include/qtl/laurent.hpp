#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <optional>
#include <string>

#include "qtl/comp.hpp"

namespace qtl {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Laurent polynomial in q with arbitrary-precision integer coefficients.
/// Canonical form: no stored zero coefficients, so equality is map equality.
class Laurent {
public:
    Laurent() = default;
    Laurent(long c) { if (c != 0) c_[0] = c; }          // NOLINT(google-explicit-constructor)
    Laurent(const Int& c) { if (c != 0) c_[0] = c; }    // NOLINT(google-explicit-constructor)

    static Laurent monomial(const Int& coeff, int exp) {
        Laurent p;
        if (coeff != 0) p.c_[exp] = coeff;
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_.begin()->first == 0 && c_.begin()->second == 1; }

    /// True if a single term c*q^e.
    bool is_monomial() const { return c_.size() == 1; }

    const std::map<int, Int>& coeffs() const { return c_; }

    Int coeff(int exp) const {
        auto it = c_.find(exp);
        return it == c_.end() ? Int(0) : it->second;
    }

    int min_exp() const { return c_.begin()->first; }   // pre: nonzero
    int max_exp() const { return c_.rbegin()->first; }  // pre: nonzero

    void add_term(int exp, const Int& coeff) {
        if (coeff == 0) return;
        auto [it, inserted] = c_.emplace(exp, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0) c_.erase(it);
        }
    }

    Laurent operator-() const {
        Laurent r;
        for (auto& [e, c] : c_) r.c_[e] = -c;
        return r;
    }

    Laurent& operator+=(const Laurent& o) {
        for (auto& [e, c] : o.c_) add_term(e, c);
        return *this;
    }
    Laurent& operator-=(const Laurent& o) {
        for (auto& [e, c] : o.c_) add_term(e, -c);
        return *this;
    }

    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }

    friend Laurent operator*(const Laurent& a, const Laurent& b) {
        Laurent r;
        for (auto& [ea, ca] : a.c_)
            for (auto& [eb, cb] : b.c_) r.add_term(ea + eb, ca * cb);
        return r;
    }
    Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

    friend bool operator==(const Laurent& a, const Laurent& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }
    friend bool operator<(const Laurent& a, const Laurent& b) { return a.c_ < b.c_; }

    /// Multiply by q^n.
    Laurent shifted(int n) const {
        Laurent r;
        for (auto& [e, c] : c_) r.c_[e + n] = c;
        return r;
    }

    /// The bar map q -> q^{-1}.
    Laurent bar() const {
        Laurent r;
        for (auto& [e, c] : c_) r.c_[-e] = c;
        return r;
    }

    /// Exact substitution q = v.  v must be nonzero if negative exponents occur.
    Rational eval(const Rational& v) const;

    /// Terms with exponent < 0 only.
    Laurent negative_part() const {
        Laurent r;
        for (auto& [e, c] : c_) {
            if (e >= 0) break;
            r.c_[e] = c;
        }
        return r;
    }

    /// All coefficients nonnegative.
    bool coeffs_nonnegative() const {
        for (auto& [e, c] : c_)
            if (c < 0) return false;
        return true;
    }

    /// gcd of coefficients (positive), 0 for the zero polynomial.
    Int content() const;

    std::string str() const;

private:
    std::map<int, Int> c_;
};

/// Exact quotient a/b; nullopt if b = 0 or the division has a remainder.
std::optional<Laurent> exact_div(const Laurent& a, const Laurent& b);

/// gcd in Z[q,q^{-1}], normalized primitive with positive leading coefficient
/// and nonzero constant term (monomial factors are units here).
Laurent laurent_gcd(const Laurent& a, const Laurent& b);

/// Quantum integer [k] = q^{-k+1} + q^{-k+3} + ... + q^{k-1}; [0] = 0.  k >= 0.
Laurent q_int(int k);

/// [k]! = [1][2]...[k].
Laurent q_factorial(int k);

/// [d]! / ([k]! [d-k]!), always a Laurent polynomial.  Requires 0 <= k <= d.
Laurent q_binomial(int d, int k);

/// Point count of {W subset D : profile of W against a fixed flag of type dd
/// is aa}, as a polynomial in q (the field has q^2 elements):
///   sum over 0/1-vectors b with box sums aa of q^{2 * #{j<i : b_i=1, b_j=0}}.
/// Specializes at q=1 to the product of binomials binom(dd_i, aa_i).
/// Requires 0 <= aa_i <= dd_i.
Laurent cell_count(const Comp& dd, const Comp& aa);

/// Order of GL_n over the field with q^2 elements, as a polynomial in q.
Laurent gl_order(int n);

}  // namespace qtl
