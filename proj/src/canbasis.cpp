#include "qtl/canbasis.hpp"

#include <algorithm>
#include <stdexcept>

#include "qtl/laurent.hpp"
#include "qtl/linalg.hpp"

namespace qtl {

namespace {

std::vector<int> prefix_sums(const Comp& a) {
    std::vector<int> p(a.size());
    int s = 0;
    for (size_t i = 0; i < a.size(); ++i) p[i] = (s += a[i]);
    return p;
}

// Linear extension of the prefix order: compare prefix-sum vectors
// lexicographically.  a > b in prefix order implies key(a) > key(b).
bool ext_less(const Comp& a, const Comp& b) { return prefix_sums(a) < prefix_sums(b); }

// barDelta of a generator in the two-block sense (first k-1 factors | last).
TensorVector mixed_bar_delta(Gen g, const TensorVector& v) {
    const size_t k = v.shape.size();
    switch (g) {
        case Gen::E: {  // E x 1 + K^{-1} x E
            TensorVector a = act_tensor_range(Gen::E, v, 0, k - 1, Coproduct::Delta);
            TensorVector b = act_tensor_range(Gen::E, v, k - 1, k, Coproduct::Delta);
            a += act_tensor_range(Gen::Kinv, b, 0, k - 1, Coproduct::Delta);
            return a;
        }
        case Gen::F: {  // F x K + 1 x F
            TensorVector a = act_tensor_range(Gen::F, v, 0, k - 1, Coproduct::Delta);
            a = act_tensor_range(Gen::K, a, k - 1, k, Coproduct::Delta);
            a += act_tensor_range(Gen::F, v, k - 1, k, Coproduct::Delta);
            return a;
        }
        default:
            throw std::logic_error("mixed_bar_delta: only E and F are needed");
    }
}

// F^n on the left block tensored with E^n on the last factor.
TensorVector theta_term(int n, const TensorVector& v) {
    const size_t k = v.shape.size();
    TensorVector r = v;
    for (int i = 0; i < n; ++i) r = act_tensor_range(Gen::F, r, 0, k - 1, Coproduct::Delta);
    for (int i = 0; i < n; ++i) r = act_tensor_range(Gen::E, r, k - 1, k, Coproduct::Delta);
    return r;
}

Gen bar_image(Gen g) {
    switch (g) {
        case Gen::K: return Gen::Kinv;
        case Gen::Kinv: return Gen::K;
        default: return g;
    }
}

void verify_bar_invariants(const BarOperator& psi) {
    const Comp& d = psi.shape;
    // Involution and fixed highest elementary tensor.
    for (auto& [w, img] : psi.image)
        if (psi.apply(img) != TensorVector::basis(d, w))
            throw std::logic_error("bar operator: not an involution");
    if (psi.image.at(zeros(d.size())) != TensorVector::basis(d, zeros(d.size())))
        throw std::logic_error("bar operator: highest elementary tensor moved");
    // Psi Delta(x) = Delta(sigma x) Psi on the elementary basis.
    for (Gen g : {Gen::E, Gen::F, Gen::K}) {
        for (auto& [w, img] : psi.image) {
            TensorVector lhs = psi.apply(act_tensor(g, TensorVector::basis(d, w), Coproduct::Delta));
            TensorVector rhs = act_tensor(bar_image(g), img, Coproduct::Delta);
            if (lhs != rhs) throw std::logic_error("bar operator: sigma-intertwining fails");
        }
    }
}

}  // namespace

BarOperator build_bar_operator(const Comp& shape) {
    BarOperator psi;
    psi.shape = shape;
    const size_t k = shape.size();
    if (k == 0) throw std::invalid_argument("build_bar_operator: empty shape");
    auto idx = all_indices(shape);
    if (k == 1) {
        for (auto& w : idx) psi.image[w] = TensorVector::basis(shape, w);
        return psi;
    }

    Comp left(shape.begin(), shape.end() - 1);
    BarOperator inner = build_bar_operator(left);

    // (Psi_{k-1} x sigma) on the elementary basis, lifted to the full shape.
    std::map<Comp, TensorVector> lifted;
    for (auto& w : idx) {
        Comp wl(w.begin(), w.end() - 1);
        TensorVector out(shape);
        for (auto& [al, x] : inner.image.at(wl).c) {
            Comp a = al;
            a.push_back(w.back());
            out.add(a, x);
        }
        lifted[w] = std::move(out);
    }

    // Solve for the Theta coefficients a_1..a_nmax, a_0 = 1.
    int nmax = std::min(total(left), shape.back());
    std::vector<RatQ> avals(nmax + 1);
    avals[0] = RatQ(1);
    if (nmax > 0) {
        // One equation per (generator, source index, target index).
        std::vector<std::vector<RatQ>> rows;
        std::vector<RatQ> rhs;
        for (Gen g : {Gen::E, Gen::F}) {
            for (auto& w : idx) {
                TensorVector e = TensorVector::basis(shape, w);
                std::vector<TensorVector> col(nmax + 1, TensorVector(shape));
                for (int n = 0; n <= nmax; ++n) {
                    TensorVector tn = theta_term(n, e);
                    col[n] = act_tensor(g, tn, Coproduct::Delta) -
                             theta_term(n, mixed_bar_delta(g, e));
                }
                std::map<Comp, size_t> seen;
                std::vector<Comp> targets;
                for (int n = 0; n <= nmax; ++n)
                    for (auto& [t, x] : col[n].c)
                        if (seen.emplace(t, targets.size()).second) targets.push_back(t);
                for (auto& t : targets) {
                    std::vector<RatQ> row(nmax);
                    for (int n = 1; n <= nmax; ++n) row[n - 1] = col[n].coeff(t);
                    rows.push_back(std::move(row));
                    rhs.push_back(-col[0].coeff(t));
                }
            }
        }
        QMatrix m(rows.size(), nmax);
        for (size_t i = 0; i < rows.size(); ++i)
            for (int j = 0; j < nmax; ++j) m.at(i, j) = rows[i][j];
        auto sol = m.solve(rhs);
        if (!sol) throw std::logic_error("bar operator: Theta system inconsistent");
        for (int n = 1; n <= nmax; ++n) avals[n] = (*sol)[n - 1];
    }

    for (auto& w : idx) {
        TensorVector img(shape);
        for (int n = 0; n <= nmax; ++n) img += theta_term(n, lifted[w]) * avals[n];
        psi.image[w] = std::move(img);
    }

    verify_bar_invariants(psi);
    return psi;
}

CanonicalTable canonical_table(const Comp& shape) {
    CanonicalTable table;
    table.shape = shape;
    table.positive_certified = true;
    BarOperator psi = build_bar_operator(shape);

    for (int s = 0; s <= total(shape); ++s) {
        auto block = indices_of_total(shape, s);
        std::sort(block.begin(), block.end(), ext_less);
        // Descending induction: every correction term lives strictly higher.
        for (auto it = block.rbegin(); it != block.rend(); ++it) {
            const Comp& w = *it;
            TensorVector can = TensorVector::basis(shape, w);
            TensorVector res = psi.image.at(w) - can;
            while (!res.is_zero()) {
                Comp b = res.c.begin()->first;
                for (auto& [t, x] : res.c)
                    if (ext_less(t, b)) b = t;
                if (!prefix_lt(w, b) || total(b) != s)
                    throw std::logic_error("canonical_table: bar matrix not unitriangular");
                RatQ ub = res.coeff(b);
                const Laurent& u = ub.as_laurent();
                Laurent p = u.negative_part();
                if (p - p.bar() != u)
                    throw std::logic_error("canonical_table: correction not bar-antisymmetric");
                // res tracks Psi(can) - can; adding p * (canonical at b) to can
                // changes it by (bar(p) - p) * (that vector) = -u * (it).
                can += table.expansion.at(b) * RatQ(p);
                res += table.expansion.at(b) * (RatQ(p.bar()) - RatQ(p));
            }
            if (psi.apply(can) != can)
                throw std::logic_error("canonical_table: vector not bar-invariant");
            auto& row = table.kappa_rows[w];
            for (auto& [a, x] : can.c) {
                row[a] = x;
                if (a == w) {
                    if (!x.is_one()) throw std::logic_error("canonical_table: diagonal not 1");
                    continue;
                }
                const Laurent& l = x.as_laurent();
                if (l.max_exp() > -1)
                    throw std::logic_error("canonical_table: coefficient outside q^{-1}Z[q^{-1}]");
                if (!l.coeffs_nonnegative()) table.positive_certified = false;
            }
            table.expansion[w] = std::move(can);
        }
    }
    return table;
}

DualCanonicalTable dual_canonical_table(const CanonicalTable& table) {
    DualCanonicalTable dual;
    dual.shape = table.shape;
    const Comp rshape = reversed(table.shape);
    for (int s = 0; s <= total(table.shape); ++s) {
        auto block = indices_of_total(table.shape, s);
        const size_t n = block.size();
        if (n == 0) continue;
        QMatrix m(n, n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) m.at(i, j) = table.kappa(block[i], block[j]);
        auto inv = m.inverse();
        if (!inv) throw std::logic_error("dual_canonical_table: singular block");
        for (size_t j = 0; j < n; ++j) {
            TensorVector v(rshape);
            for (size_t i = 0; i < n; ++i) v.add(reversed(block[i]), inv->at(i, j));
            dual.expansion[block[j]] = std::move(v);
        }
    }
    return dual;
}

}  // namespace qtl
