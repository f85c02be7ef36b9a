#pragma once

#include <map>

#include "qtl/tensor.hpp"

namespace qtl {

/// The bar involution of a tensor product of irreducible modules, stored by
/// its images on the elementary basis.  It is conjugate-linear over the bar
/// on scalars, squares to the identity, fixes the highest elementary tensor
/// of every weight block (indeed every prefix-maximal one), and intertwines
/// Delta(x) with Delta(sigma(x)) for the generators.
struct BarOperator {
    Comp shape;
    std::map<Comp, TensorVector> image;

    TensorVector apply(const TensorVector& v) const {
        TensorVector out(shape);
        for (auto& [w, x] : v.c) out += image.at(w) * x.bar();
        return out;
    }
};

/// Constructs the bar involution.  A single factor is fixed pointwise.  For
/// k factors the first k-1 are treated as one based factor carrying the
/// already-built involution, the last is adjoined through an operator
/// Theta = sum_n a_n (F^n on the left block) x (E^n on the last factor)
/// with a_0 = 1, the remaining coefficients solved exactly from
/// Delta(x) Theta = Theta barDelta(x) for x in {E, F} on the finite module.
/// All invariants above are verified; violations throw std::logic_error.
BarOperator build_bar_operator(const Comp& shape);

/// The canonical basis of the tensor product: the unique bar-invariant family
///   (canonical basis vector at w) = (elementary at w)
///        + sum over a > w (prefix order, same total) of kappa[w][a] (elementary at a)
/// with kappa[w][a] in q^{-1} Z[q^{-1}].  Nonnegativity of the coefficients
/// is certified after construction and exposed as positive_certified.
struct CanonicalTable {
    Comp shape;
    std::map<Comp, TensorVector> expansion;            // elementary coordinates
    std::map<Comp, std::map<Comp, RatQ>> kappa_rows;   // kappa_rows[w][a]
    bool positive_certified = false;

    RatQ kappa(const Comp& w, const Comp& a) const {
        auto it = kappa_rows.find(w);
        if (it == kappa_rows.end()) return RatQ(0);
        auto jt = it->second.find(a);
        return jt == it->second.end() ? RatQ(0) : jt->second;
    }
};

CanonicalTable canonical_table(const Comp& shape);

/// Coefficients of the dual canonical basis in the reversed tensor product,
/// written on the dual elementary basis there; determined by biorthogonality
/// under pair_reversed against the canonical basis.
struct DualCanonicalTable {
    Comp shape;                                 // shape of the *unreversed* side
    std::map<Comp, TensorVector> expansion;     // index w -> vector over reversed(shape)
};

DualCanonicalTable dual_canonical_table(const CanonicalTable& table);

/// Shared cache of canonical tables, keyed by shape.
class CanonicalCache {
public:
    const CanonicalTable& get(const Comp& shape) {
        auto it = tables_.find(shape);
        if (it == tables_.end()) it = tables_.emplace(shape, canonical_table(shape)).first;
        return it->second;
    }

private:
    std::map<Comp, CanonicalTable> tables_;
};

}  // namespace qtl
