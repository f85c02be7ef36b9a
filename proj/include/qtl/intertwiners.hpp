#pragma once

#include "qtl/bases.hpp"
#include "qtl/canbasis.hpp"
#include "qtl/matchings.hpp"
#include "qtl/strata.hpp"

namespace qtl {

/// Point count of the t-stable flags with kernel profile n^b for a fixed
/// square-zero endomorphism of the right rank (the diagonal constant of the
/// intertwiner attached to b).  Product over the descending flag recursion of
/// two-block cell counts; nonzero, with positive value at q = 1.
Laurent flag_constant(const LowerMatch& b);

/// Independent q = 1 evaluation of the same constant by the plain
/// binomial-product recursion.
Int flag_constant_q1(const LowerMatch& b);

/// The intertwiner attached to a lower match b: restrict to the strata with
/// kernel profile n^b, then push forward along (D, W, t) -> (W, t); the value
/// at (dim W, rank t) collects value * flag_count over the contributing
/// labels.
QuiverFunction apply_intertwiner(const LowerMatch& b, const InvariantFunction& f);

/// Closed form for the image of the canonical-extension element at w under
/// the intertwiner of b <= M(d, w):
///   omega = sum_a kappa^{m^b, w - l^b}_a k_{a+l^b, l^b, l^b+m^b}
///                 flag_count(a + l^b, l^b, l^b + m^b).
RatQ omega_closed(const Comp& shape, const LowerMatch& b, const Comp& w, CanonicalCache& cache);

/// The isomorphism from the canonical-extension span onto the
/// decomposition span,
///   xi = sum_b (1/c_b) (T_b restricted to its own class)^{-1} T_b,
/// where the restricted inverse sends the indicator of the (s, r) piece back
/// to (1/c_b) times the indicator of Y_{a} with |a| = s.
InvariantFunction xi_map(const Comp& shape, const InvariantFunction& f);

/// The orientation of b carrying the given number of down arrows.
Comp orientation_with_downs(const LowerMatch& b, int downs);

}  // namespace qtl
