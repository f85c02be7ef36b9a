#include "qtl/bases.hpp"

#include <algorithm>

#include "qtl/linalg.hpp"

namespace qtl {

std::vector<std::pair<Comp, InvariantFunction>> elementary_basis(const Comp& shape) {
    std::vector<std::pair<Comp, InvariantFunction>> out;
    for (auto& w : all_indices(shape)) {
        StratumLabel label{w, zeros(shape.size()), shape};
        out.emplace_back(w, basic_function(shape, label));
    }
    return out;
}

std::vector<std::pair<Comp, InvariantFunction>> canonical_extension_basis(const Comp& shape,
                                                                          CanonicalCache& cache) {
    auto lcm = enumerate_lcm(shape);
    std::vector<std::pair<Comp, InvariantFunction>> out;
    for (auto& w : all_indices(shape)) {
        OrientedMatch m = oriented_match(shape, w);
        InvariantFunction g(shape);
        for (auto& s : lcm) {
            if (!leq_match(s, m.match)) continue;
            auto [r, n] = rank_profile(s);
            Comp slice = sub(n, r);
            const CanonicalTable& table = cache.get(slice);
            auto it = table.expansion.find(sub(w, r));
            if (it == table.expansion.end())
                throw std::logic_error("canonical_extension_basis: missing slice index");
            g += tensor_to_strata(shape, r, n, it->second);
        }
        out.emplace_back(w, std::move(g));
    }
    return out;
}

std::vector<std::pair<Comp, InvariantFunction>> decomposition_basis(const Comp& shape) {
    auto pairs = realizable_pairs(shape);
    std::vector<std::pair<Comp, InvariantFunction>> out;
    for (auto& a : all_indices(shape)) {
        auto [rm, nm] = rank_profile(oriented_match(shape, a).match);
        InvariantFunction f(shape);
        for (auto& pair : pairs) {
            const Comp& r = pair.first;
            const Comp& n = pair.second;
            if (n != nm) continue;
            for_each_bounded_total(n, total(a), [&](const Comp& w) {
                if (leq_componentwise(r, w)) f.add(StratumLabel{w, r, n}, RatQ(1));
            });
        }
        out.emplace_back(a, std::move(f));
    }
    return out;
}

std::optional<std::pair<RatQ, Comp>> act_decomposition_closed(Gen g, const Comp& shape,
                                                              const Comp& a) {
    OrientedMatch cur = oriented_match(shape, a);
    int mu = cur.match.unmatched_count();
    switch (g) {
        case Gen::K:
            return std::make_pair(RatQ::monomial(1, mu - 2 * cur.unmatched_down_count()), a);
        case Gen::Kinv:
            return std::make_pair(RatQ::monomial(1, 2 * cur.unmatched_down_count() - mu), a);
        case Gen::F: {
            auto up = add_down_arrow(shape, a);
            if (!up) return std::nullopt;
            int downs = oriented_match(shape, *up).unmatched_down_count();
            return std::make_pair(RatQ(q_int(downs)), *up);
        }
        case Gen::E: {
            auto dn = remove_down_arrow(shape, a);
            if (!dn) return std::nullopt;
            int ups = oriented_match(shape, *dn).unmatched_up_count();
            return std::make_pair(RatQ(q_int(ups)), *dn);
        }
    }
    return std::nullopt;
}

namespace {

StratumLabel dense_label(const Comp& shape, const Comp& w) {
    auto [r, n] = rank_profile(oriented_match(shape, w).match);
    return StratumLabel{w, r, n};
}

// Nullity of the "vanishes on every other component's dense stratum" system
// over the given family; the certified situation is nullity one.
size_t dense_vanishing_nullity(const Comp& shape,
                               const std::vector<std::pair<Comp, InvariantFunction>>& family,
                               const Comp& keep) {
    std::vector<StratumLabel> rows;
    for (auto& [w, fn] : family)
        if (w != keep) rows.push_back(dense_label(shape, w));
    QMatrix m(rows.size(), family.size());
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < family.size(); ++j) m.at(i, j) = family[j].second.value(rows[i]);
    return m.nullity();
}

}  // namespace

std::vector<BasisElementReport> certify_canonical(const Comp& shape, CanonicalCache& cache) {
    auto family = canonical_extension_basis(shape, cache);
    auto lcm = enumerate_lcm(shape);
    std::vector<BasisElementReport> reports;
    for (auto& [w, g] : family) {
        BasisElementReport rep;
        rep.basis = 'c';
        rep.index = w;
        for (auto& [label, value] : g.values) rep.support.push_back(label);
        OrientedMatch m = oriented_match(shape, w);
        StratumLabel dense = dense_label(shape, w);
        rep.dense_value = g.value(dense);
        rep.certified = true;

        if (rep.dense_value.is_zero()) {
            rep.certified = false;
            rep.note = "vanishes on the dense stratum";
        }
        // Closure criterion: every support stratum is (a + r^S, r^S, n^S) for
        // a lower match S <= M with a + r^S >= w and equal total.
        for (auto& label : rep.support) {
            bool ok = false;
            for (auto& s : lcm) {
                auto [r, n] = rank_profile(s);
                if (r != label.r || n != label.n) continue;
                ok = leq_match(s, m.match) && prefix_leq(w, label.w) &&
                     total(label.w) == total(w);
                break;  // (r, n) determines S among lower matches
            }
            if (!ok) {
                rep.certified = false;
                rep.note = "support outside the closure criterion at " + label.str();
                break;
            }
        }
        // Vanishing on every other component's dense points.
        for (auto& [w2, g2] : family) {
            if (w2 == w) continue;
            if (!g.value(dense_label(shape, w2)).is_zero()) {
                rep.certified = false;
                rep.note = "nonzero on the dense stratum of " + qtl::to_string(w2);
                break;
            }
        }
        if (rep.certified && dense_vanishing_nullity(shape, family, w) != 1) {
            rep.certified = false;
            rep.note = "dense-vanishing conditions not rank one";
        }
        reports.push_back(std::move(rep));
    }
    return reports;
}

std::vector<BasisElementReport> certify_decomposition(const Comp& shape) {
    auto family = decomposition_basis(shape);
    std::vector<BasisElementReport> reports;
    for (auto& [a, f] : family) {
        BasisElementReport rep;
        rep.basis = 's';
        rep.index = a;
        for (auto& [label, value] : f.values) rep.support.push_back(label);
        StratumLabel dense = dense_label(shape, a);
        rep.dense_value = f.value(dense);
        rep.certified = true;
        if (!rep.dense_value.is_one()) {
            rep.certified = false;
            rep.note = "dense value differs from one";
        }
        for (auto& [a2, f2] : family) {
            if (a2 == a) continue;
            if (!f.value(dense_label(shape, a2)).is_zero()) {
                rep.certified = false;
                rep.note = "nonzero on the dense stratum of " + qtl::to_string(a2);
                break;
            }
            for (auto& [label, x] : f2.values) {
                if (!f.value(label).is_zero()) {
                    rep.certified = false;
                    rep.note = "support overlaps " + qtl::to_string(a2);
                    break;
                }
            }
            if (!rep.certified) break;
        }
        if (rep.certified && dense_vanishing_nullity(shape, family, a) != 1) {
            rep.certified = false;
            rep.note = "dense-vanishing conditions not rank one";
        }
        reports.push_back(std::move(rep));
    }
    return reports;
}

}  // namespace qtl
