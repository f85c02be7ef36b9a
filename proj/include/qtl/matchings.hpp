#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qtl/comp.hpp"

namespace qtl {

/// Lower crossingless match on the |d| vertices of a shape d (unoriented).
/// Vertices are numbered 1..|d|; box i occupies the contiguous block after
/// boxes 1..i-1.  Invariants: arcs pairwise non-crossing, no arc inside a
/// single box, and no unmatched vertex under an arc (so the unmatched
/// vertices extend to middle curves of a full crossingless match).
struct LowerMatch {
    Comp shape;
    std::vector<std::pair<int, int>> arcs;  // (p, q) with p < q, sorted

    friend bool operator==(const LowerMatch& a, const LowerMatch& b) {
        return a.shape == b.shape && a.arcs == b.arcs;
    }
    friend bool operator<(const LowerMatch& a, const LowerMatch& b) { return a.arcs < b.arcs; }

    int vertex_count() const { return total(shape); }
    int arc_count() const { return static_cast<int>(arcs.size()); }
    int unmatched_count() const { return vertex_count() - 2 * arc_count(); }

    /// 1-based box index of a 1-based vertex.
    int box_of(int vertex) const;

    bool vertex_matched(int vertex) const;

    /// Unmatched vertices in increasing order.
    std::vector<int> unmatched() const;
};

/// Oriented lower crossingless match: arcs are oriented leftward (left
/// endpoint carries the down arrow, right endpoint the up arrow), and of the
/// unmatched vertices the first `unmatched_ups` are oriented up, the rest
/// down (down arrows are to the right of up arrows).
struct OrientedMatch {
    LowerMatch match;
    int unmatched_ups = 0;

    int unmatched_down_count() const { return match.unmatched_count() - unmatched_ups; }
    int unmatched_up_count() const { return unmatched_ups; }

    /// Down-arrow counts per box; the inverse of oriented_match.
    Comp down_counts() const;

    friend bool operator==(const OrientedMatch& a, const OrientedMatch& b) {
        return a.match == b.match && a.unmatched_ups == b.unmatched_ups;
    }
};

/// Validates the LowerMatch invariants.
bool valid_lower_match(const LowerMatch& m);

/// All lower crossingless matches of the shape.
std::vector<LowerMatch> enumerate_lcm(const Comp& shape);

/// All oriented lower crossingless matches; in bijection with
/// {a : 0 <= a_i <= d_i}, so the count is prod (d_i + 1).
std::vector<OrientedMatch> enumerate_olcm(const Comp& shape);

/// The match M(d, a): down arrows on the rightmost a_i vertices of box i,
/// then, sweeping right to left, each down arrow connects to the nearest
/// unmatched up arrow strictly to its right.
OrientedMatch oriented_match(const Comp& shape, const Comp& a);

/// r_i = number of left endpoints of arcs in box i;
/// n_i = d_i - number of right endpoints of arcs in box i.
struct RankProfile {
    Comp r, n;
};
RankProfile rank_profile(const LowerMatch& m);

/// l = left-endpoint counts (same as r); m = unmatched-vertex counts per box
/// (the middle-curve endpoints after completion).  n = l + m.
struct CurveProfile {
    Comp l, m;
};
CurveProfile curve_profile(const LowerMatch& m);

/// Order by inclusion of arc sets (same shape required).
bool leq_match(const LowerMatch& a, const LowerMatch& b);

/// Switch the rightmost unmatched up arrow of M(d, a) to down; nullopt if
/// every vertex is matched or oriented down.  |result| = |a| + 1.
std::optional<Comp> add_down_arrow(const Comp& shape, const Comp& a);

/// Switch the leftmost unmatched down arrow to up.  |result| = |a| - 1.
std::optional<Comp> remove_down_arrow(const Comp& shape, const Comp& a);

/// Two-line ASCII diagram: brackets delimit boxes, ^/v give orientations,
/// parentheses below the vertices draw the arcs, '.' marks middle curves.
std::string render_match(const OrientedMatch& om);
std::string render_match(const LowerMatch& m);

}  // namespace qtl
