#include <map>

#include "qtl/fqoracle.hpp"
#include "qtl/intertwiners.hpp"
#include "qtl/matchings.hpp"

namespace qtl {

namespace {

OracleCase make_case(std::string suite, std::string name, const Comp& shape, const Fq& F,
                     const Int& expected, const Int& actual) {
    OracleCase c;
    c.suite = std::move(suite);
    c.name = std::move(name);
    c.shape = shape;
    c.field = F.size();
    c.expected = expected.str();
    c.actual = actual.str();
    c.pass = expected == actual;
    return c;
}

Int eval_at_p(const Laurent& poly, int p) {
    Rational v = poly.eval(Rational(p));
    if (boost::multiprecision::denominator(v) != 1)
        return Int(-1);  // forces a visible failure
    return boost::multiprecision::numerator(v);
}

}  // namespace

std::vector<OracleCase> suite_chi_projective(const Fq& F, int nmax) {
    std::vector<OracleCase> out;
    for (int n = 0; n <= nmax; ++n) {
        Laurent chi;
        for (int i = 0; i <= n; ++i) chi.add_term(2 * i, 1);
        Int actual = static_cast<Int>(enum_subspaces(F, n + 1, 1).size());
        out.push_back(make_case("chi_projective", "P^" + std::to_string(n), Comp{n + 1}, F,
                                eval_at_p(chi, F.p()), actual));
    }
    return out;
}

std::vector<OracleCase> suite_lemma_flags(const Fq& F, const Comp& shape) {
    std::vector<OracleCase> out;
    const int d = total(shape);
    std::map<Comp, Int> buckets;
    for (int w = 0; w <= d; ++w)
        for (auto& W : enum_subspaces(F, d, w)) buckets[alpha_profile(F, W, shape)] += 1;
    for_each_bounded(shape, [&](const Comp& aa) {
        Int actual = 0;
        auto it = buckets.find(aa);
        if (it != buckets.end()) actual = it->second;
        out.push_back(make_case("lemma_flags", "profile " + qtl::to_string(aa), shape, F,
                                eval_at_p(cell_count(shape, aa), F.p()), actual));
    });
    return out;
}

std::vector<OracleCase> suite_qrep_fibers(const Fq& F, int d) {
    std::vector<OracleCase> out;
    for (int r = 0; 2 * r <= d; ++r) {
        Comp shape{d};
        FqMat t(d, d);
        for (int i = 0; i < r; ++i) t.at(i, d - r + i) = 1;
        FqMat ker(d - r, d);
        for (int i = 0; i < d - r; ++i) ker.at(i, i) = 1;
        for (int w = r; w <= d - r; ++w) {
            FqMat W(w, d);
            for (int i = 0; i < w; ++i) W.at(i, i) = 1;  // contains the image, inside the kernel
            if (w + 1 <= d - r) {
                Int actual = 0;
                for (auto& U : enum_subspaces(F, d, w + 1))
                    if (subspace_leq(F, W, U) && subspace_leq(F, U, ker)) actual += 1;
                Laurent expect = Laurent::monomial(1, d - w - r - 1) * q_int(d - w - r);
                out.push_back(make_case("qrep_fibers",
                                        "E fiber d=" + std::to_string(d) + " r=" +
                                            std::to_string(r) + " w=" + std::to_string(w),
                                        shape, F, eval_at_p(expect, F.p()), actual));
            }
            if (w - 1 >= r) {
                FqMat im(r, d);
                for (int i = 0; i < r; ++i) im.at(i, i) = 1;
                Int actual = 0;
                for (auto& U : enum_subspaces(F, d, w - 1))
                    if (subspace_leq(F, im, U) && subspace_leq(F, U, W)) actual += 1;
                Laurent expect = Laurent::monomial(1, w - 1 - r) * q_int(w - r);
                out.push_back(make_case("qrep_fibers",
                                        "F fiber d=" + std::to_string(d) + " r=" +
                                            std::to_string(r) + " w=" + std::to_string(w),
                                        shape, F, eval_at_p(expect, F.p()), actual));
            }
        }
    }
    return out;
}

std::vector<OracleCase> suite_stratum_counts(const Fq& F, const Comp& shape, int cap) {
    std::vector<OracleCase> out;
    auto buckets = t_profile_counts(F, shape, cap);
    Int totalpoints = 0;
    for (auto& label : realizable_labels(shape)) {
        Int actual = count_stratum(F, shape, label, buckets, cap);
        totalpoints += actual;
        out.push_back(make_case("stratum_counts", label.str(), shape, F,
                                eval_at_p(stratum_count_poly(shape, label), F.p()), actual));
    }
    // Orbit partition: the realizable strata exhaust the variety, so the
    // per-label counts must add up to flags x endomorphisms x all W between.
    Int whole = 0;
    Int flags = count_flags(F, shape);
    for (auto& [rn, cnt] : buckets) {
        int qdim = total(rn.second) - total(rn.first);
        Int between = 0;
        for (int w = 0; w <= qdim; ++w)
            between += static_cast<Int>(enum_subspaces(F, qdim, w, cap + 3).size());
        whole += flags * cnt * between;
    }
    out.push_back(make_case("stratum_counts", "orbit partition", shape, F, whole, totalpoints));
    return out;
}

std::vector<OracleCase> suite_realizability(const Fq& F, const Comp& shape, int cap) {
    std::vector<OracleCase> out;
    auto buckets = t_profile_counts(F, shape, cap);
    for_each_bounded(shape, [&](const Comp& w) {
        for_each_bounded(shape, [&](const Comp& r) {
            for_each_bounded(shape, [&](const Comp& n) {
                StratumLabel label{w, r, n};
                Int actual = count_stratum(F, shape, label, buckets, cap);
                Int expected = is_realizable(shape, label) ? 1 : 0;
                OracleCase c = make_case("realizability", label.str(), shape, F, expected,
                                         actual > 0 ? Int(1) : Int(0));
                if (!c.pass) out.push_back(c);
            });
        });
    });
    if (out.empty()) {
        OracleCase ok;
        ok.suite = "realizability";
        ok.name = "all labels agree";
        ok.shape = shape;
        ok.field = F.size();
        ok.expected = ok.actual = "agree";
        ok.pass = true;
        out.push_back(ok);
    }
    return out;
}

std::vector<OracleCase> suite_flag_counts(const Fq& F, const Comp& shape, int cap) {
    std::vector<OracleCase> out;
    // Group labels by the numeric type of the fixed (W, t).
    std::map<std::vector<int>, std::vector<StratumLabel>> groups;
    for (auto& label : realizable_labels(shape))
        groups[{total(label.w), total(label.r), total(label.n)}].push_back(label);
    for (auto& [type, labels] : groups) {
        ConfigPoint cfg = standard_config(F, shape, labels.front());
        auto buckets = flag_profile_counts(F, shape, cfg, cap);
        for (auto& label : labels) {
            Int actual = 0;
            auto it = buckets.find(label);
            if (it != buckets.end()) actual = it->second;
            out.push_back(make_case("flag_counts", label.str(), shape, F,
                                    eval_at_p(flag_count(shape, label), F.p()), actual));
        }
    }
    return out;
}

std::vector<OracleCase> suite_match_constants(const Fq& F, const Comp& shape, int cap) {
    std::vector<OracleCase> out;
    for (auto& b : enumerate_lcm(shape)) {
        auto [l, m] = curve_profile(b);
        Comp nb = add(l, m);
        // Any orientation works; take all arrows down.
        StratumLabel lab{nb, l, nb};
        ConfigPoint cfg = standard_config(F, shape, lab);
        auto buckets = flag_profile_counts(F, shape, cfg, cap);
        Int actual = 0;
        for (auto& [label, cnt] : buckets)
            if (label.n == nb) actual += cnt;
        std::string name = "c_b arcs=" + std::to_string(b.arc_count());
        for (auto& [p, q] : b.arcs) name += " (" + std::to_string(p) + "," + std::to_string(q) + ")";
        out.push_back(
            make_case("match_constants", name, shape, F, eval_at_p(flag_constant(b), F.p()), actual));
        out.push_back(make_case("match_constants", name + " q=1", shape, F, flag_constant_q1(b),
                                eval_at_p(flag_constant(b), 1)));
    }
    return out;
}

std::vector<OracleCase> suite_density_degrees(const Fq& F, const Comp& shape, int cap) {
    std::vector<OracleCase> out;
    auto buckets = t_profile_counts(F, shape, cap);
    auto lcm = enumerate_lcm(shape);
    for (auto& w : all_indices(shape)) {
        OrientedMatch M = oriented_match(shape, w);
        auto [rm, nm] = rank_profile(M.match);
        StratumLabel dense{w, rm, nm};
        Laurent densepoly = stratum_count_poly(shape, dense);
        int dim = dim_component(shape, w);
        OracleCase c;
        c.suite = "density_degrees";
        c.name = "deg of dense count, w=" + qtl::to_string(w);
        c.shape = shape;
        c.field = F.size();
        c.expected = std::to_string(2 * dim);
        c.actual = std::to_string(densepoly.is_zero() ? -1 : densepoly.max_exp());
        c.pass = c.expected == c.actual;
        out.push_back(c);
        out.push_back(make_case("density_degrees", "count anchor, w=" + qtl::to_string(w), shape, F,
                                eval_at_p(densepoly, F.p()),
                                count_stratum(F, shape, dense, buckets, cap)));
        // Every other stratum of the closure family has strictly smaller count degree.
        for (auto& s : lcm) {
            if (!leq_match(s, M.match)) continue;
            RankProfile prof = rank_profile(s);
            const Comp& rs = prof.r;
            const Comp& ns = prof.n;
            for_each_bounded_total(ns, total(w), [&](const Comp& a) {
                StratumLabel other{a, rs, ns};
                if (other == dense) return;
                if (!is_realizable(shape, other) || !prefix_leq(w, a)) return;
                Laurent poly = stratum_count_poly(shape, other);
                OracleCase cc;
                cc.suite = "density_degrees";
                cc.name = "dominated: " + other.str() + " in component " + qtl::to_string(w);
                cc.shape = shape;
                cc.field = F.size();
                cc.expected = "< " + std::to_string(2 * dim);
                cc.actual = std::to_string(poly.is_zero() ? -1 : poly.max_exp());
                cc.pass = poly.is_zero() || poly.max_exp() < 2 * dim;
                out.push_back(cc);
            });
        }
    }
    return out;
}

}  // namespace qtl
