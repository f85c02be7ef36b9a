#pragma once

#include <optional>

#include "qtl/canbasis.hpp"
#include "qtl/matchings.hpp"
#include "qtl/strata.hpp"

namespace qtl {

/// One basis element with its certification data.
struct BasisElementReport {
    char basis = '?';  // 'e', 'c' or 's'
    Comp index;
    std::vector<StratumLabel> support;
    RatQ dense_value;
    bool certified = false;
    std::string note;  // first failed check, empty when certified
};

/// The elementary basis: one basic function per w <= d, supported on the
/// single stratum (w, 0, d).
std::vector<std::pair<Comp, InvariantFunction>> elementary_basis(const Comp& shape);

/// The canonical-extension basis: for each w the sum over lower matches
/// S <= M(d, w) of the pullback of the canonical basis vector at w - r^S in
/// the slice tensor product of shape n^S - r^S.
std::vector<std::pair<Comp, InvariantFunction>> canonical_extension_basis(const Comp& shape,
                                                                          CanonicalCache& cache);

/// The decomposition-adapted basis: the indicator of
/// Y_a = union over |w| = |a| and feasible r of the strata (w, r, n^{M(d,a)}).
std::vector<std::pair<Comp, InvariantFunction>> decomposition_basis(const Comp& shape);

/// Closed form of the generator action on the decomposition basis:
///   F 1_{Y_a} = [unmatched down arrows of a+] 1_{Y_{a+}},
///   E 1_{Y_a} = [unmatched up arrows of a-] 1_{Y_{a-}},
///   K 1_{Y_a} = q^{mu - 2 (unmatched down arrows of a)} 1_{Y_a};
/// nullopt when the toggled orientation does not exist (the image is zero).
std::optional<std::pair<RatQ, Comp>> act_decomposition_closed(Gen g, const Comp& shape,
                                                              const Comp& a);

/// Certifies each canonical-extension element against its irreducible
/// component: nonzero value on the dense stratum (w, r^M, n^M); every support
/// stratum of the closure form (a + r^S, r^S, n^S) with S <= M(d,w),
/// a + r^S >= w in prefix order and equal total; zero value on the dense
/// strata of all other components; and a rank-1 solution space for those
/// linear conditions inside the span of the basis.
std::vector<BasisElementReport> certify_canonical(const Comp& shape, CanonicalCache& cache);

/// Certifies each decomposition element: value one on the dense stratum of
/// its component, zero on every other component's dense stratum, pairwise
/// disjoint supports, and the rank-1 uniqueness inside the span.
std::vector<BasisElementReport> certify_decomposition(const Comp& shape);

}  // namespace qtl
