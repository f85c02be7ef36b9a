#pragma once

#include <string>

#include "qtl/laurent.hpp"

namespace qtl {

/// Rational function in q with integer coefficients, kept in a unique reduced
/// form: the denominator is a primitive polynomial with nonzero constant term
/// and positive leading coefficient, coprime to the numerator's polynomial
/// part, and the integer contents of numerator and denominator are coprime.
/// Equality is therefore plain field-by-field comparison.
class RatQ {
public:
    RatQ() = default;
    RatQ(long v) : num_(v) {}              // NOLINT(google-explicit-constructor)
    RatQ(const Laurent& p) : num_(p) {}    // NOLINT(google-explicit-constructor)
    RatQ(const Laurent& num, const Laurent& den) : num_(num), den_(den) { normalize(); }

    static RatQ monomial(const Int& c, int e) { return RatQ(Laurent::monomial(c, e)); }

    const Laurent& num() const { return num_; }
    const Laurent& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_laurent() const { return den_.is_one(); }

    /// The Laurent polynomial part; throws if the denominator is not 1.
    const Laurent& as_laurent() const {
        if (!den_.is_one()) throw std::domain_error("RatQ: not a Laurent polynomial: " + str());
        return num_;
    }

    RatQ operator-() const {
        RatQ r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    friend RatQ operator+(const RatQ& a, const RatQ& b) {
        return RatQ(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatQ operator-(const RatQ& a, const RatQ& b) {
        return RatQ(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatQ operator*(const RatQ& a, const RatQ& b) {
        return RatQ(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatQ operator/(const RatQ& a, const RatQ& b) {
        if (b.is_zero()) throw std::domain_error("RatQ: division by zero");
        return RatQ(a.num_ * b.den_, a.den_ * b.num_);
    }

    RatQ& operator+=(const RatQ& o) { return *this = *this + o; }
    RatQ& operator-=(const RatQ& o) { return *this = *this - o; }
    RatQ& operator*=(const RatQ& o) { return *this = *this * o; }
    RatQ& operator/=(const RatQ& o) { return *this = *this / o; }

    friend bool operator==(const RatQ& a, const RatQ& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatQ& a, const RatQ& b) { return !(a == b); }
    friend bool operator<(const RatQ& a, const RatQ& b) {
        if (a.num_ != b.num_) return a.num_ < b.num_;
        return a.den_ < b.den_;
    }

    RatQ inverse() const {
        if (is_zero()) throw std::domain_error("RatQ: inverse of zero");
        return RatQ(den_, num_);
    }

    /// q -> q^{-1}.
    RatQ bar() const { return RatQ(num_.bar(), den_.bar()); }

    /// Exact substitution q = v; throws on a pole.
    Rational eval(const Rational& v) const {
        Rational d = den_.eval(v);
        if (d == 0) throw std::domain_error("RatQ::eval: pole at the evaluation point");
        return num_.eval(v) / d;
    }

    std::string str() const {
        if (den_.is_one()) return num_.str();
        return "(" + num_.str() + ") / (" + den_.str() + ")";
    }

private:
    void normalize();

    Laurent num_ = Laurent(0);
    Laurent den_ = Laurent(1);
};

inline RatQ bar(const RatQ& x) { return x.bar(); }

}  // namespace qtl
