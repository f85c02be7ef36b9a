#include "qtl/matchings.hpp"

#include <algorithm>
#include <stdexcept>

namespace qtl {

int LowerMatch::box_of(int vertex) const {
    int acc = 0;
    for (size_t i = 0; i < shape.size(); ++i) {
        acc += shape[i];
        if (vertex <= acc) return static_cast<int>(i) + 1;
    }
    throw std::invalid_argument("box_of: vertex out of range");
}

bool LowerMatch::vertex_matched(int vertex) const {
    for (auto& [p, q] : arcs)
        if (p == vertex || q == vertex) return true;
    return false;
}

std::vector<int> LowerMatch::unmatched() const {
    std::vector<int> out;
    for (int v = 1; v <= vertex_count(); ++v)
        if (!vertex_matched(v)) out.push_back(v);
    return out;
}

Comp OrientedMatch::down_counts() const {
    // Down arrows: left endpoints of arcs plus the trailing unmatched vertices.
    Comp a = zeros(match.shape.size());
    for (auto& [p, q] : match.arcs) a[match.box_of(p) - 1] += 1;
    auto um = match.unmatched();
    for (size_t i = unmatched_ups; i < um.size(); ++i) a[match.box_of(um[i]) - 1] += 1;
    return a;
}

bool valid_lower_match(const LowerMatch& m) {
    const int n = m.vertex_count();
    std::vector<int> deg(n + 1, 0);
    for (auto& [p, q] : m.arcs) {
        if (p < 1 || q > n || p >= q) return false;
        if (m.box_of(p) == m.box_of(q)) return false;  // no curve joins a box to itself
        deg[p]++;
        deg[q]++;
    }
    for (int v = 1; v <= n; ++v)
        if (deg[v] > 1) return false;
    // Non-crossing: no p < p' < q < q'.
    for (auto& [p, q] : m.arcs)
        for (auto& [p2, q2] : m.arcs)
            if (p < p2 && p2 < q && q < q2) return false;
    // Unmatched vertices lie under no arc.
    for (int v = 1; v <= n; ++v) {
        if (deg[v]) continue;
        for (auto& [p, q] : m.arcs)
            if (p < v && v < q) return false;
    }
    return true;
}

namespace {

// Recursive enumeration by the leftmost undecided vertex: it is either
// unmatched or arcs to some admissible later vertex.
void enumerate_rec(const Comp& shape, int vertex, int n,
                   std::vector<std::pair<int, int>>& acc, std::vector<int>& taken,
                   std::vector<LowerMatch>& out) {
    while (vertex <= n && taken[vertex]) ++vertex;
    if (vertex > n) {
        LowerMatch m{shape, acc};
        std::sort(m.arcs.begin(), m.arcs.end());
        out.push_back(std::move(m));
        return;
    }
    // Unmatched.
    taken[vertex] = 1;
    enumerate_rec(shape, vertex + 1, n, acc, taken, out);
    taken[vertex] = 0;
    // Arc (vertex, q).  Validity of the whole arc set is re-checked at the
    // leaves of the candidate tree via the cheap incremental filters below;
    // the global invariants are enforced once more by valid_lower_match in
    // debug runs and in the tests.
    for (int q = vertex + 1; q <= n; ++q) {
        if (taken[q]) continue;
        bool ok = true;
        // Vertices strictly between must still be free to pair among
        // themselves under this arc: they may not arc out of (vertex, q),
        // which the recursion guarantees, but everything inside must end up
        // matched.  Enforce by requiring an even number of free vertices
        // inside and no earlier-closed arc crossing.
        int freeInside = 0;
        for (int u = vertex + 1; u < q; ++u)
            if (!taken[u]) ++freeInside;
        if (freeInside % 2 != 0) ok = false;
        for (auto& [p2, q2] : acc)
            if ((p2 < vertex && vertex < q2 && q2 < q) || (vertex < p2 && p2 < q && q < q2))
                ok = false;
        if (!ok) continue;
        acc.emplace_back(vertex, q);
        taken[vertex] = taken[q] = 1;
        enumerate_rec(shape, vertex + 1, n, acc, taken, out);
        taken[vertex] = taken[q] = 0;
        acc.pop_back();
    }
}

}  // namespace

std::vector<LowerMatch> enumerate_lcm(const Comp& shape) {
    std::vector<LowerMatch> all;
    std::vector<std::pair<int, int>> acc;
    int n = total(shape);
    std::vector<int> taken(n + 2, 0);
    enumerate_rec(shape, 1, n, acc, taken, all);
    std::vector<LowerMatch> out;
    for (auto& m : all)
        if (valid_lower_match(m)) out.push_back(m);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<OrientedMatch> enumerate_olcm(const Comp& shape) {
    std::vector<OrientedMatch> out;
    for (auto& m : enumerate_lcm(shape)) {
        int u = m.unmatched_count();
        for (int ups = 0; ups <= u; ++ups) out.push_back(OrientedMatch{m, ups});
    }
    return out;
}

OrientedMatch oriented_match(const Comp& shape, const Comp& a) {
    if (a.size() != shape.size() || !nonnegative(a) || !leq_componentwise(a, shape))
        throw std::invalid_argument("oriented_match: need 0 <= a_i <= d_i");
    const int n = total(shape);
    // Down arrows on the rightmost a_i vertices of each box.
    std::vector<int> down(n + 1, 0);
    int base = 0;
    for (size_t i = 0; i < shape.size(); ++i) {
        for (int v = base + shape[i] - a[i] + 1; v <= base + shape[i]; ++v) down[v] = 1;
        base += shape[i];
    }
    std::vector<int> matched(n + 1, 0);
    std::vector<std::pair<int, int>> arcs;
    for (int v = n; v >= 1; --v) {
        if (!down[v]) continue;
        for (int u = v + 1; u <= n; ++u) {
            if (!down[u] && !matched[u]) {
                arcs.emplace_back(v, u);
                matched[v] = matched[u] = 1;
                break;
            }
        }
    }
    std::sort(arcs.begin(), arcs.end());
    LowerMatch m{shape, arcs};
    int ups = 0;
    for (int v = 1; v <= n; ++v)
        if (!matched[v] && !down[v]) ++ups;
    OrientedMatch om{std::move(m), ups};
    return om;
}

RankProfile rank_profile(const LowerMatch& m) {
    RankProfile p{zeros(m.shape.size()), m.shape};
    for (auto& [a, b] : m.arcs) {
        p.r[m.box_of(a) - 1] += 1;
        p.n[m.box_of(b) - 1] -= 1;
    }
    return p;
}

CurveProfile curve_profile(const LowerMatch& m) {
    CurveProfile p{zeros(m.shape.size()), zeros(m.shape.size())};
    for (auto& [a, b] : m.arcs) p.l[m.box_of(a) - 1] += 1;
    for (int v : m.unmatched()) p.m[m.box_of(v) - 1] += 1;
    return p;
}

bool leq_match(const LowerMatch& a, const LowerMatch& b) {
    if (a.shape != b.shape) throw std::invalid_argument("leq_match: shapes differ");
    return std::includes(b.arcs.begin(), b.arcs.end(), a.arcs.begin(), a.arcs.end());
}

std::optional<Comp> add_down_arrow(const Comp& shape, const Comp& a) {
    OrientedMatch om = oriented_match(shape, a);
    if (om.unmatched_ups == 0) return std::nullopt;
    auto um = om.match.unmatched();
    int v = um[om.unmatched_ups - 1];  // rightmost unmatched up arrow
    return add(a, unit(shape.size(), om.match.box_of(v) - 1));
}

std::optional<Comp> remove_down_arrow(const Comp& shape, const Comp& a) {
    OrientedMatch om = oriented_match(shape, a);
    if (om.unmatched_down_count() == 0) return std::nullopt;
    auto um = om.match.unmatched();
    int v = um[om.unmatched_ups];  // leftmost unmatched down arrow
    return sub(a, unit(shape.size(), om.match.box_of(v) - 1));
}

namespace {

std::string render_lines(const LowerMatch& m, const std::vector<char>& arrow) {
    const int n = m.vertex_count();
    std::vector<char> arcline(n + 1, ' ');
    for (auto& [p, q] : m.arcs) {
        arcline[p] = '(';
        arcline[q] = ')';
    }
    for (int v : m.unmatched()) arcline[v] = '.';
    std::string top, bot;
    int v = 1;
    for (size_t i = 0; i < m.shape.size(); ++i) {
        top += "[";
        bot += " ";
        for (int j = 0; j < m.shape[i]; ++j, ++v) {
            top += arrow[v];
            bot += arcline[v];
        }
        top += "]";
        bot += " ";
    }
    return top + "\n" + bot + "\n";
}

}  // namespace

std::string render_match(const OrientedMatch& om) {
    const LowerMatch& m = om.match;
    std::vector<char> arrow(m.vertex_count() + 1, '?');
    for (auto& [p, q] : m.arcs) {
        arrow[p] = 'v';
        arrow[q] = '^';
    }
    auto um = m.unmatched();
    for (size_t i = 0; i < um.size(); ++i)
        arrow[um[i]] = static_cast<int>(i) < om.unmatched_ups ? '^' : 'v';
    return render_lines(m, arrow);
}

std::string render_match(const LowerMatch& m) {
    std::vector<char> arrow(m.vertex_count() + 1, 'o');
    for (auto& [p, q] : m.arcs) {
        arrow[p] = 'v';
        arrow[q] = '^';
    }
    for (int v : m.unmatched()) arrow[v] = 'o';
    return render_lines(m, arrow);
}

}  // namespace qtl
