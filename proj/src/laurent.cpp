#include "qtl/laurent.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>

namespace qtl {

using boost::multiprecision::gcd;

Rational Laurent::eval(const Rational& v) const {
    if (c_.empty()) return Rational(0);
    if (v == 0 && min_exp() < 0)
        throw std::domain_error("Laurent::eval: negative exponent at v = 0");
    // Horner over the exponent range.
    int lo = min_exp(), hi = max_exp();
    Rational acc = 0;
    for (int e = hi; e >= lo; --e) {
        acc *= v;
        acc += Rational(coeff(e));
    }
    if (lo != 0) {
        Rational p = 1;
        for (int i = 0; i < (lo > 0 ? lo : -lo); ++i) p *= v;
        if (lo > 0) acc *= p;
        else acc /= p;
    }
    return acc;
}

Int Laurent::content() const {
    Int g = 0;
    for (auto& [e, c] : c_) g = gcd(g, c < 0 ? Int(-c) : c);
    return g;
}

std::string Laurent::str() const {
    if (c_.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto& [e, c] : c_) {
        Int a = c;
        if (first) {
            if (a < 0) { s += "-"; a = -a; }
        } else {
            s += (a < 0) ? " - " : " + ";
            if (a < 0) a = -a;
        }
        first = false;
        std::string coeff = a.str();
        if (e == 0) {
            s += coeff;
        } else {
            if (coeff != "1") s += coeff + "*";
            s += (e == 1) ? "q" : "q^" + std::to_string(e);
        }
    }
    return s;
}

std::optional<Laurent> exact_div(const Laurent& a, const Laurent& b) {
    if (b.is_zero()) return std::nullopt;
    if (a.is_zero()) return Laurent(0);
    // Shift both to ordinary polynomials; the monomial offset is a unit.
    Laurent rem = a.shifted(-a.min_exp());
    Laurent den = b.shifted(-b.min_exp());
    int shift = a.min_exp() - b.min_exp();
    Laurent quot;
    const Int lc = den.coeff(den.max_exp());
    const int db = den.max_exp();
    while (!rem.is_zero() && rem.max_exp() >= db) {
        Int c = rem.coeff(rem.max_exp());
        if (c % lc != 0) return std::nullopt;
        Laurent t = Laurent::monomial(c / lc, rem.max_exp() - db);
        quot += t;
        rem -= t * den;
    }
    if (!rem.is_zero()) return std::nullopt;
    return quot.shifted(shift);
}

namespace {

// Primitive part with positive leading coefficient; input already shifted to
// have nonzero constant term.
Laurent primitive(const Laurent& a) {
    if (a.is_zero()) return a;
    Int c = a.content();
    if (a.coeff(a.max_exp()) < 0) c = -c;
    auto q = exact_div(a, Laurent(c));
    return *q;
}

// Pseudo-remainder of a by b (both ordinary polynomials, b nonzero).
Laurent pseudo_rem(Laurent a, const Laurent& b) {
    const int db = b.max_exp();
    const Int lc = b.coeff(db);
    while (!a.is_zero() && a.max_exp() >= db) {
        Laurent t = Laurent::monomial(a.coeff(a.max_exp()), a.max_exp() - db);
        a = a * Laurent(lc) - t * b;
    }
    return a;
}

}  // namespace

Laurent laurent_gcd(const Laurent& a, const Laurent& b) {
    if (a.is_zero()) return b.is_zero() ? Laurent(0) : primitive(b.shifted(-b.min_exp()));
    if (b.is_zero()) return primitive(a.shifted(-a.min_exp()));
    Laurent r0 = primitive(a.shifted(-a.min_exp()));
    Laurent r1 = primitive(b.shifted(-b.min_exp()));
    if (r0.max_exp() < r1.max_exp()) std::swap(r0, r1);
    while (!r1.is_zero()) {
        Laurent r2 = pseudo_rem(r0, r1);
        r0 = r1;
        r1 = r2.is_zero() ? r2 : primitive(r2.shifted(-r2.min_exp()));
    }
    return r0;
}

Laurent q_int(int k) {
    if (k < 0) throw std::invalid_argument("q_int: negative argument");
    Laurent p;
    for (int e = -k + 1; e <= k - 1; e += 2) p.add_term(e, 1);
    return p;
}

Laurent q_factorial(int k) {
    if (k < 0) throw std::invalid_argument("q_factorial: negative argument");
    Laurent p(1);
    for (int i = 1; i <= k; ++i) p *= q_int(i);
    return p;
}

Laurent q_binomial(int d, int k) {
    if (k < 0 || d < 0 || k > d) throw std::invalid_argument("q_binomial: need 0 <= k <= d");
    auto q = exact_div(q_factorial(d), q_factorial(k) * q_factorial(d - k));
    if (!q) throw std::logic_error("q_binomial: division not exact");
    return *q;
}

Laurent cell_count(const Comp& dd, const Comp& aa) {
    if (dd.size() != aa.size()) throw std::invalid_argument("cell_count: shape mismatch");
    for (size_t i = 0; i < dd.size(); ++i)
        if (aa[i] < 0 || dd[i] < 0 || aa[i] > dd[i])
            throw std::invalid_argument("cell_count: need 0 <= aa <= dd");
    // Walk the d vertices left to right; a 1 at a vertex contributes
    // q^{2 * (#zeros so far)}.  Recursion is over (box, position in box,
    // ones still needed in this box, zeros so far, accumulated exponent).
    Laurent out;
    struct Walker {
        const Comp& dd;
        const Comp& aa;
        Laurent& out;
        void go(size_t box, int pos, int need, int zeros, int exp) {
            if (box == dd.size()) {
                out.add_term(exp, 1);
                return;
            }
            if (pos == dd[box]) {
                if (need == 0) go(box + 1, 0, box + 1 < dd.size() ? aa[box + 1] : 0, zeros, exp);
                return;
            }
            int left = dd[box] - pos;
            if (need > 0) go(box, pos + 1, need - 1, zeros, exp + 2 * zeros);  // b = 1
            if (left > need) go(box, pos + 1, need, zeros + 1, exp);           // b = 0
        }
    } w{dd, aa, out};
    w.go(0, 0, dd.empty() ? 0 : aa[0], 0, 0);
    return out;
}

Laurent gl_order(int n) {
    // prod_{i=0}^{n-1} (Q^n - Q^i) with Q = q^2.
    Laurent p(1);
    for (int i = 0; i < n; ++i)
        p *= Laurent::monomial(1, 2 * n) - Laurent::monomial(1, 2 * i);
    return p;
}

}  // namespace qtl
