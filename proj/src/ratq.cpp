#include "qtl/ratq.hpp"

#include <stdexcept>

namespace qtl {

using boost::multiprecision::gcd;

void RatQ::normalize() {
    if (den_.is_zero()) throw std::domain_error("RatQ: zero denominator");
    if (num_.is_zero()) {
        den_ = Laurent(1);
        return;
    }
    // Push the denominator's monomial factor into the numerator.
    int shift = den_.min_exp();
    den_ = den_.shifted(-shift);
    num_ = num_.shifted(-shift);
    // Cancel the polynomial gcd (computed on monomial-free parts).
    Laurent g = laurent_gcd(num_, den_);
    if (!g.is_one()) {
        num_ = *exact_div(num_, g);
        den_ = *exact_div(den_, g);
    }
    // Coprime integer contents, positive denominator leading coefficient.
    Int c = gcd(num_.content(), den_.content());
    if (den_.coeff(den_.max_exp()) < 0) c = -c;
    if (c != 1) {
        num_ = *exact_div(num_, Laurent(c));
        den_ = *exact_div(den_, Laurent(c));
    }
}

}  // namespace qtl
