#include "qtl/intertwiners.hpp"

#include <stdexcept>

namespace qtl {

Laurent flag_constant(const LowerMatch& b) {
    auto [l, m] = curve_profile(b);
    Comp n = add(l, m);
    const Comp& d = b.shape;
    const size_t k = d.size();
    Laurent out(1);
    for (size_t j = 0; j + 1 < k; ++j) {
        int nj = prefix(n, static_cast<int>(j) + 1), nj1 = prefix(n, static_cast<int>(j) + 2);
        int dj = prefix(d, static_cast<int>(j) + 1), dj1 = prefix(d, static_cast<int>(j) + 2);
        out *= cell_count(Comp{2 * nj1 - dj1, dj1 - nj1}, Comp{nj + nj1 - dj1, dj - nj});
    }
    return out;
}

namespace {

Int binom(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Int r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

}  // namespace

Int flag_constant_q1(const LowerMatch& b) {
    auto [l, m] = curve_profile(b);
    Comp n = add(l, m);
    const Comp& d = b.shape;
    Int out = 1;
    for (size_t j = 0; j + 1 < d.size(); ++j) {
        int nj = prefix(n, static_cast<int>(j) + 1), nj1 = prefix(n, static_cast<int>(j) + 2);
        int dj = prefix(d, static_cast<int>(j) + 1), dj1 = prefix(d, static_cast<int>(j) + 2);
        out *= binom(2 * nj1 - dj1, nj1 + nj - dj1) * binom(dj1 - nj1, dj - nj);
    }
    return out;
}

QuiverFunction apply_intertwiner(const LowerMatch& b, const InvariantFunction& f) {
    auto [l, m] = curve_profile(b);
    Comp nb = add(l, m);
    QuiverFunction out(total(f.shape));
    for (auto& [label, value] : f.values) {
        if (label.n != nb) continue;
        out.add(total(label.w), total(label.r), value * RatQ(flag_count(f.shape, label)));
    }
    return out;
}

RatQ omega_closed(const Comp& shape, const LowerMatch& b, const Comp& w, CanonicalCache& cache) {
    OrientedMatch mw = oriented_match(shape, w);
    if (!leq_match(b, mw.match)) return RatQ(0);
    auto [l, m] = curve_profile(b);
    Comp nb = add(l, m);
    const CanonicalTable& table = cache.get(m);
    RatQ out;
    for (auto& a : all_indices(m)) {
        RatQ kap = table.kappa(sub(w, l), a);
        if (kap.is_zero()) continue;
        StratumLabel label{add(a, l), l, nb};
        out += kap * RatQ(k_factor(label)) * RatQ(flag_count(shape, label));
    }
    return out;
}

Comp orientation_with_downs(const LowerMatch& b, int downs) {
    int unmatched_downs = downs - b.arc_count();
    if (unmatched_downs < 0 || unmatched_downs > b.unmatched_count())
        throw std::invalid_argument("orientation_with_downs: count out of range");
    OrientedMatch om{b, b.unmatched_count() - unmatched_downs};
    return om.down_counts();
}

InvariantFunction xi_map(const Comp& shape, const InvariantFunction& f) {
    InvariantFunction out(shape);
    auto pairs = realizable_pairs(shape);
    for (auto& b : enumerate_lcm(shape)) {
        RatQ cb = RatQ(flag_constant(b));
        auto [l, m] = curve_profile(b);
        Comp nb = add(l, m);
        QuiverFunction img = apply_intertwiner(b, f);
        for (auto& [key, value] : img.values) {
            auto [s, r] = key;
            if (r != b.arc_count())
                throw std::logic_error("xi_map: image leaves the rank piece");
            // (1/c_b) * restricted inverse: the indicator of the (s, r) piece
            // pulls back to (1/c_b) 1_{Y_a} with |a| = s.
            RatQ coeff = value / (cb * cb);
            for (auto& pair : pairs) {
                const Comp& rr = pair.first;
                const Comp& nn = pair.second;
                if (nn != nb) continue;
                for_each_bounded_total(nn, s, [&](const Comp& ww) {
                    if (leq_componentwise(rr, ww)) out.add(StratumLabel{ww, rr, nn}, coeff);
                });
            }
        }
    }
    return out;
}

}  // namespace qtl
