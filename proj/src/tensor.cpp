#include "qtl/tensor.hpp"

#include <algorithm>

#include "qtl/laurent.hpp"

namespace qtl {

TensorVector act_tensor_range(Gen g, const TensorVector& v, size_t lo, size_t hi,
                              Coproduct cop, TBasis basis) {
    const Comp& d = v.shape;
    TensorVector out(d);
    const bool dual = basis == TBasis::Dual;
    for (auto& [w, x] : v.c) {
        if (g == Gen::K || g == Gen::Kinv) {
            int wt = 0;
            for (size_t i = lo; i < hi; ++i) wt += d[i] - 2 * w[i];
            out.add(w, x * RatQ::monomial(1, g == Gen::K ? wt : -wt));
            continue;
        }
        for (size_t i = lo; i < hi; ++i) {
            // Single-factor step at position i.
            Laurent step;
            Comp w2 = w;
            if (g == Gen::E) {
                if (w[i] == 0) continue;
                step = dual ? q_int(w[i]) : q_int(d[i] - w[i] + 1);
                w2[i] -= 1;
            } else {  // F
                if (w[i] == d[i]) continue;
                step = dual ? q_int(d[i] - w[i]) : q_int(w[i] + 1);
                w2[i] += 1;
            }
            // Spectating K factors within the range.
            int wt = 0;
            if (g == Gen::E) {
                for (size_t j = lo; j < i; ++j) wt += d[j] - 2 * w[j];
                if (cop == Coproduct::BarDelta) wt = -wt;
            } else {
                for (size_t j = i + 1; j < hi; ++j) wt += d[j] - 2 * w[j];
                if (cop == Coproduct::Delta) wt = -wt;
            }
            out.add(w2, x * RatQ(step) * RatQ::monomial(1, wt));
        }
    }
    return out;
}

RatQ pair_reversed(const TensorVector& u, const TensorVector& v) {
    if (reversed(u.shape) != v.shape)
        throw std::invalid_argument("pair_reversed: shapes are not mutual reverses");
    RatQ s;
    for (auto& [w, x] : u.c) {
        auto it = v.c.find(reversed(w));
        if (it != v.c.end()) s += x * it->second;
    }
    return s;
}

TensorVector sigma_tensor(const TensorVector& v) {
    TensorVector r(v.shape);
    for (auto& [w, x] : v.c) r.c[w] = x.bar();
    return r;
}

TensorVector reverse_tensor(const TensorVector& v) {
    TensorVector r(reversed(v.shape));
    for (auto& [w, x] : v.c) r.c[reversed(w)] = x;
    return r;
}

std::vector<Comp> all_indices(const Comp& shape) {
    std::vector<Comp> out;
    for_each_bounded(shape, [&](const Comp& c) { out.push_back(c); });
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Comp> indices_of_total(const Comp& shape, int t) {
    std::vector<Comp> out;
    for_each_bounded_total(shape, t, [&](const Comp& c) { out.push_back(c); });
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace qtl
