#include "qtl/checks.hpp"

#include "qtl/bases.hpp"
#include "qtl/intertwiners.hpp"
#include "qtl/linalg.hpp"
#include "qtl/strata.hpp"
#include "qtl/uqsl2.hpp"

namespace qtl {

namespace {

RatQ qpow(int e) { return RatQ::monomial(1, e); }

CheckCase result(std::string suite, std::string name, bool pass, std::string detail = "") {
    return CheckCase{std::move(suite), std::move(name), pass, std::move(detail)};
}

// Expands a function lying in the canonical-extension span in that basis,
// through its restriction to the t = 0 slice (where the family restricts to
// the unitriangular canonical vectors).
std::map<Comp, RatQ> expand_in_canonical(const Comp& shape, const InvariantFunction& f,
                                         const CanonicalTable& table) {
    InvariantFunction rest(shape);
    for (auto& [label, x] : f.values)
        if (label.r == zeros(shape.size()) && label.n == shape) rest.add(label, x);
    TensorVector v = strata_to_tensor(zeros(shape.size()), shape, rest);
    std::map<Comp, RatQ> coeffs;
    TensorVector res = v;
    while (!res.is_zero()) {
        auto [a, x] = *res.c.begin();  // lex-minimal, hence prefix-minimal in support
        coeffs[a] = x;
        res = res - table.expansion.at(a) * x;
    }
    return coeffs;
}

}  // namespace

std::vector<Comp> shapes_of_total(int n, int max_parts) {
    std::vector<Comp> out;
    Comp cur;
    std::function<void(int)> rec = [&](int rest) {
        if (rest == 0) {
            if (!cur.empty()) out.push_back(cur);
            return;
        }
        if (max_parts >= 0 && static_cast<int>(cur.size()) >= max_parts) return;
        for (int part = 1; part <= rest; ++part) {
            cur.push_back(part);
            rec(rest - part);
            cur.pop_back();
        }
    };
    rec(n);
    return out;
}

std::vector<CheckCase> check_relations_irrep(int dmax) {
    std::vector<CheckCase> out;
    for (int d = 0; d <= dmax; ++d) {
        bool ok = true;
        for (int m = -d; m <= d && ok; m += 2) {
            IrrepVector v = IrrepVector::basis(d, m);
            if (act(Gen::K, act(Gen::Kinv, v)) != v) ok = false;
            if (act(Gen::K, act(Gen::E, v)) != act(Gen::E, act(Gen::K, v)) * qpow(2)) ok = false;
            if (act(Gen::K, act(Gen::F, v)) != act(Gen::F, act(Gen::K, v)) * qpow(-2)) ok = false;
            IrrepVector lhs = act(Gen::E, act(Gen::F, v));
            lhs += act(Gen::F, act(Gen::E, v)) * RatQ(-1);
            RatQ h = (qpow(m) - qpow(-m)) / (qpow(1) - qpow(-1));
            if (lhs != v * h) ok = false;
        }
        out.push_back(result("relations", "V_" + std::to_string(d), ok));
    }
    return out;
}

std::vector<CheckCase> check_relations_tensor(const Comp& shape) {
    bool ok = true;
    for (auto& w : all_indices(shape)) {
        TensorVector v = TensorVector::basis(shape, w);
        auto A = [&](Gen g, const TensorVector& x) { return act_tensor(g, x, Coproduct::Delta); };
        if (A(Gen::K, A(Gen::Kinv, v)) != v) ok = false;
        if (A(Gen::K, A(Gen::E, v)) != A(Gen::E, A(Gen::K, v)) * qpow(2)) ok = false;
        if (A(Gen::K, A(Gen::F, v)) != A(Gen::F, A(Gen::K, v)) * qpow(-2)) ok = false;
        TensorVector lhs = A(Gen::E, A(Gen::F, v));
        lhs += A(Gen::F, A(Gen::E, v)) * RatQ(-1);
        TensorVector rhs = (A(Gen::K, v) - A(Gen::Kinv, v)) * (qpow(1) - qpow(-1)).inverse();
        if (lhs != rhs) ok = false;
    }
    return {result("relations", "tensor " + to_string(shape), ok)};
}

std::vector<CheckCase> check_quiver_matrices(int dmax) {
    std::vector<CheckCase> out;
    for (int d = 0; d <= dmax; ++d) {
        bool ok = true;
        for (int r = 0; 2 * r <= d; ++r)
            for (int w = r; w <= d - r; ++w) {
                QuiverFunction f(d);
                f.add(w, r, RatQ(1));
                IrrepVector v = IrrepVector::basis(d - 2 * r, d - 2 * w);
                for (Gen g : {Gen::E, Gen::F, Gen::K, Gen::Kinv}) {
                    QuiverFunction expect(d);
                    for (auto& [m, x] : act(g, v).c) expect.add((d - m) / 2, r, x);
                    if (act_quiver(g, f) != expect) ok = false;
                }
            }
        out.push_back(result("quiver", "M^r(" + std::to_string(d) + ") = V_{d-2r}", ok));
    }
    return out;
}

std::vector<CheckCase> check_slice_isomorphism(const Comp& shape) {
    bool ok = true;
    std::string fail;
    for (auto& pair : realizable_pairs(shape)) {
        const Comp& r = pair.first;
        const Comp& n = pair.second;
        Comp slice = sub(n, r);
        for_each_bounded(slice, [&](const Comp& a) {
            InvariantFunction f = basic_function(shape, {add(a, r), r, n});
            for (Gen g : {Gen::E, Gen::F, Gen::K, Gen::Kinv}) {
                TensorVector lhs = strata_to_tensor(r, n, act_strata(g, f));
                TensorVector rhs = act_tensor(g, strata_to_tensor(r, n, f), Coproduct::Delta);
                if (lhs != rhs) {
                    ok = false;
                    fail = "slice r=" + to_string(r) + " n=" + to_string(n);
                }
            }
        });
    }
    return {result("slice_isom", "eta on " + to_string(shape), ok, fail)};
}

std::vector<CheckCase> check_cell_count_q1(const Comp& shape) {
    bool ok = true;
    for_each_bounded(shape, [&](const Comp& aa) {
        Int expect = 1;
        for (size_t i = 0; i < shape.size(); ++i) {
            Int b = 1;
            for (int t = 0; t < aa[i]; ++t) b = b * (shape[i] - t) / (t + 1);
            expect *= b;
        }
        if (cell_count(shape, aa).eval(1) != Rational(expect)) ok = false;
    });
    return {result("cell_q1", "binomial product on " + to_string(shape), ok)};
}

std::vector<CheckCase> check_canonical_table(const Comp& shape) {
    std::vector<CheckCase> out;
    try {
        BarOperator psi = build_bar_operator(shape);
        CanonicalTable t = canonical_table(shape);
        bool fixed = true, triangular = true;
        for (auto& [w, vec] : t.expansion) {
            if (psi.apply(vec) != vec) fixed = false;
            for (auto& [a, x] : vec.c) {
                if (total(a) != total(w)) triangular = false;
                if (a == w && !x.is_one()) triangular = false;
                if (a != w && (!prefix_lt(w, a) || x.as_laurent().max_exp() > -1))
                    triangular = false;
            }
        }
        out.push_back(result("canonical", "bar fixed " + to_string(shape), fixed));
        out.push_back(result("canonical", "unitriangular " + to_string(shape), triangular));
        out.push_back(result("canonical", "positive " + to_string(shape), t.positive_certified));
    } catch (const std::exception& e) {
        out.push_back(result("canonical", "construction " + to_string(shape), false, e.what()));
    }
    return out;
}

std::vector<CheckCase> check_canonical_certification(const Comp& shape, CanonicalCache& cache) {
    std::vector<CheckCase> out;
    bool all = true;
    std::string fail;
    for (auto& rep : certify_canonical(shape, cache))
        if (!rep.certified) {
            all = false;
            fail = to_string(rep.index) + ": " + rep.note;
        }
    out.push_back(result("canonical_cert", "component characterization " + to_string(shape), all, fail));
    // The map (canonical vector at w) -> g_w intertwines the actions.
    const CanonicalTable& table = cache.get(shape);
    auto bc = canonical_extension_basis(shape, cache);
    std::map<Comp, const InvariantFunction*> by_index;
    for (auto& [w, g] : bc) by_index[w] = &g;
    bool morphism = true;
    for (auto& [w, g] : bc) {
        for (Gen gen : {Gen::E, Gen::F, Gen::K}) {
            // Image of the canonical vector, re-expanded in canonical terms.
            TensorVector img = act_tensor(gen, table.expansion.at(w), Coproduct::Delta);
            std::map<Comp, RatQ> coeffs;
            TensorVector res = img;
            while (!res.is_zero()) {
                auto [a, x] = *res.c.begin();
                coeffs[a] = x;
                res = res - table.expansion.at(a) * x;
            }
            InvariantFunction expect(shape);
            for (auto& [a, x] : coeffs) expect += *by_index.at(a) * x;
            if (act_strata(gen, g) != expect) morphism = false;
        }
    }
    out.push_back(result("canonical_cert", "module isomorphism " + to_string(shape), morphism));
    return out;
}

std::vector<CheckCase> check_decomposition(const Comp& shape) {
    std::vector<CheckCase> out;
    auto bs = decomposition_basis(shape);
    std::map<Comp, const InvariantFunction*> by_index;
    for (auto& [a, f] : bs) by_index[a] = &f;

    bool action_ok = true, blocks_ok = true;
    for (auto& [a, f] : bs) {
        for (Gen g : {Gen::E, Gen::F, Gen::K, Gen::Kinv}) {
            InvariantFunction img = act_strata(g, *by_index.at(a));
            auto closed = act_decomposition_closed(g, shape, a);
            if (!closed ? !img.is_zero() : img != *by_index.at(closed->second) * closed->first)
                action_ok = false;
        }
        // Isotypic block: the orientation class of a carries V_mu.
        OrientedMatch om = oriented_match(shape, a);
        int mu = om.match.unmatched_count();
        int m = mu - 2 * om.unmatched_down_count();
        for (Gen g : {Gen::E, Gen::F, Gen::K}) {
            auto closed = act_decomposition_closed(g, shape, a);
            IrrepVector img = act(g, IrrepVector::basis(mu, m));
            if (!closed) {
                if (!img.is_zero()) blocks_ok = false;
            } else {
                if (img.c.size() != 1) {
                    blocks_ok = false;
                    continue;
                }
                auto [m2, coeff] = *img.c.begin();
                OrientedMatch om2 = oriented_match(shape, closed->second);
                if (om2.match != om.match || mu - 2 * om2.unmatched_down_count() != m2 ||
                    closed->first != coeff)
                    blocks_ok = false;
            }
        }
    }
    out.push_back(result("decomposition", "closed action " + to_string(shape), action_ok));
    out.push_back(result("decomposition", "isotypic blocks " + to_string(shape), blocks_ok));

    bool cert = true;
    std::string fail;
    for (auto& rep : certify_decomposition(shape))
        if (!rep.certified) {
            cert = false;
            fail = to_string(rep.index) + ": " + rep.note;
        }
    out.push_back(result("decomposition", "certification " + to_string(shape), cert, fail));
    return out;
}

std::vector<CheckCase> check_intertwiner_diagonal(const Comp& shape) {
    std::vector<CheckCase> out;
    auto bs = decomposition_basis(shape);
    bool diag = true, nonzero = true, classical = true;
    for (auto& b : enumerate_lcm(shape)) {
        Laurent cb = flag_constant(b);
        if (cb.is_zero()) nonzero = false;
        if (cb.eval(1) <= 0 || cb.eval(1) != Rational(flag_constant_q1(b))) classical = false;
        for (auto& [a, f] : bs) {
            QuiverFunction img = apply_intertwiner(b, f);
            if (oriented_match(shape, a).match == b) {
                QuiverFunction expect(total(shape));
                expect.add(total(a), b.arc_count(), RatQ(cb));
                if (img != expect) diag = false;
            } else if (!img.is_zero()) {
                diag = false;
            }
        }
    }
    out.push_back(result("intertwiner", "diagonal action " + to_string(shape), diag));
    out.push_back(result("intertwiner", "constants nonzero " + to_string(shape), nonzero));
    out.push_back(result("intertwiner", "classical recursion " + to_string(shape), classical));
    return out;
}

std::vector<CheckCase> check_omega(const Comp& shape, CanonicalCache& cache) {
    bool ok = true;
    auto bc = canonical_extension_basis(shape, cache);
    for (auto& b : enumerate_lcm(shape)) {
        for (auto& [w, g] : bc) {
            QuiverFunction img = apply_intertwiner(b, g);
            RatQ omega = omega_closed(shape, b, w, cache);
            if (!leq_match(b, oriented_match(shape, w).match)) {
                if (!img.is_zero() || !omega.is_zero()) ok = false;
            } else {
                QuiverFunction expect(total(shape));
                expect.add(total(w), b.arc_count(), omega);
                if (img != expect) ok = false;
            }
        }
    }
    return {result("intertwiner", "omega closed = direct " + to_string(shape), ok)};
}

std::vector<CheckCase> check_intertwiner_commute(const Comp& shape) {
    std::vector<CheckCase> out;
    auto lcm = enumerate_lcm(shape);
    bool commute = true;
    for (auto& b : lcm)
        for (auto& label : realizable_labels(shape)) {
            InvariantFunction f = basic_function(shape, label);
            for (Gen g : {Gen::E, Gen::F, Gen::K, Gen::Kinv})
                if (apply_intertwiner(b, act_strata(g, f)) !=
                    act_quiver(g, apply_intertwiner(b, f)))
                    commute = false;
        }
    out.push_back(result("intertwiner", "commutes with E,F,K " + to_string(shape), commute));

    auto bs = decomposition_basis(shape);
    std::map<std::pair<size_t, std::pair<int, int>>, size_t> colindex;
    for (size_t bi = 0; bi < lcm.size(); ++bi)
        for (size_t ai = 0; ai < bs.size(); ++ai)
            for (auto& [key, x] : apply_intertwiner(lcm[bi], bs[ai].second).values) {
                auto col = std::make_pair(ai, key);
                if (!colindex.count(col)) colindex[col] = colindex.size();
            }
    QMatrix m(lcm.size(), colindex.size());
    for (size_t bi = 0; bi < lcm.size(); ++bi)
        for (size_t ai = 0; ai < bs.size(); ++ai)
            for (auto& [key, x] : apply_intertwiner(lcm[bi], bs[ai].second).values)
                m.at(bi, colindex[{ai, key}]) = x;
    out.push_back(result("intertwiner",
                         "independent family of size " + std::to_string(lcm.size()) + " on " +
                             to_string(shape),
                         m.rank() == lcm.size()));
    return out;
}

std::vector<CheckCase> check_xi(const Comp& shape, CanonicalCache& cache) {
    std::vector<CheckCase> out;
    auto bc = canonical_extension_basis(shape, cache);
    auto bs = decomposition_basis(shape);
    const CanonicalTable& table = cache.get(shape);
    bool constant_on_classes = true;
    QMatrix phi(bs.size(), bc.size());
    for (size_t j = 0; j < bc.size(); ++j) {
        InvariantFunction img = xi_map(shape, bc[j].second);
        for (size_t i = 0; i < bs.size(); ++i) {
            RatQ val;
            bool first = true;
            for (auto& [label, one] : bs[i].second.values) {
                RatQ v = img.value(label);
                if (first) {
                    val = v;
                    first = false;
                } else if (val != v) {
                    constant_on_classes = false;
                }
            }
            phi.at(i, j) = val;
        }
    }
    out.push_back(result("xi", "lands in the decomposition span " + to_string(shape),
                         constant_on_classes));
    out.push_back(result("xi", "invertible " + to_string(shape), phi.rank() == bc.size()));

    bool commutes = true;
    for (Gen g : {Gen::E, Gen::F, Gen::K}) {
        QMatrix ac(bc.size(), bc.size()), as(bs.size(), bs.size());
        for (size_t j = 0; j < bc.size(); ++j) {
            auto coeffs = expand_in_canonical(shape, act_strata(g, bc[j].second), table);
            for (size_t i = 0; i < bc.size(); ++i) {
                auto it = coeffs.find(bc[i].first);
                if (it != coeffs.end()) ac.at(i, j) = it->second;
            }
        }
        for (size_t j = 0; j < bs.size(); ++j) {
            auto closed = act_decomposition_closed(g, shape, bs[j].first);
            if (!closed) continue;
            for (size_t i = 0; i < bs.size(); ++i)
                if (bs[i].first == closed->second) as.at(i, j) = closed->first;
        }
        if (!(phi * ac == as * phi)) commutes = false;
    }
    out.push_back(result("xi", "commutes with E,F,K " + to_string(shape), commutes));
    return out;
}

}  // namespace qtl
