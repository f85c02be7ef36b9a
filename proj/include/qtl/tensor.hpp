#pragma once

#include <map>

#include "qtl/comp.hpp"
#include "qtl/ratq.hpp"
#include "qtl/uqsl2.hpp"

namespace qtl {

enum class Coproduct { Delta, BarDelta };
enum class TBasis { Standard, Dual };

/// Element of V_{d_1} x ... x V_{d_k}, finitely supported on compositions w
/// (factor i of the elementary tensor indexed by w carries weight d_i - 2w_i).
/// Whether the coefficients refer to elementary or dual-elementary tensors is
/// the caller's convention, fixed per call site.
struct TensorVector {
    Comp shape;
    std::map<Comp, RatQ> c;

    TensorVector() = default;
    explicit TensorVector(Comp s) : shape(std::move(s)) {}

    static TensorVector basis(const Comp& shape, const Comp& w) {
        TensorVector v(shape);
        v.add(w, RatQ(1));
        return v;
    }

    void add(const Comp& w, const RatQ& x) {
        if (x.is_zero()) return;
        if (w.size() != shape.size()) throw std::invalid_argument("TensorVector: arity mismatch");
        for (size_t i = 0; i < w.size(); ++i)
            if (w[i] < 0 || w[i] > shape[i])
                throw std::invalid_argument("TensorVector: index out of range");
        auto [it, inserted] = c.emplace(w, x);
        if (!inserted) {
            it->second += x;
            if (it->second.is_zero()) c.erase(it);
        }
    }

    bool is_zero() const { return c.empty(); }

    RatQ coeff(const Comp& w) const {
        auto it = c.find(w);
        return it == c.end() ? RatQ(0) : it->second;
    }

    friend bool operator==(const TensorVector& a, const TensorVector& b) {
        return a.shape == b.shape && a.c == b.c;
    }

    TensorVector operator*(const RatQ& s) const {
        TensorVector r(shape);
        if (s.is_zero()) return r;
        for (auto& [w, x] : c) r.c[w] = x * s;
        return r;
    }
    TensorVector& operator+=(const TensorVector& o) {
        for (auto& [w, x] : o.c) add(w, x);
        return *this;
    }
    TensorVector operator+(const TensorVector& o) const {
        TensorVector r = *this;
        return r += o;
    }
    TensorVector operator-(const TensorVector& o) const {
        TensorVector r = *this;
        for (auto& [w, x] : o.c) r.add(w, -x);
        return r;
    }
};

/// Iterated-coproduct action of a generator on the factor range [lo, hi),
/// the remaining factors acting as spectators.  Delta puts K left of E and
/// K^{-1} right of F; BarDelta puts K^{-1} left of E and K right of F.
TensorVector act_tensor_range(Gen g, const TensorVector& v, size_t lo, size_t hi,
                              Coproduct cop, TBasis basis = TBasis::Standard);

inline TensorVector act_tensor(Gen g, const TensorVector& v, Coproduct cop,
                               TBasis basis = TBasis::Standard) {
    return act_tensor_range(g, v, 0, v.shape.size(), cop, basis);
}

/// Pairing of V_{d_1} x ... x V_{d_k} (elementary coordinates) with
/// V_{d_k} x ... x V_{d_1} (dual-elementary coordinates):
/// <v_{i_1} x...x v_{i_k}, v^{l_k} x...x v^{l_1}> = prod delta_{i_j}^{l_j}.
RatQ pair_reversed(const TensorVector& u, const TensorVector& v);

/// Bars every coefficient (the tensor-product bar involution on scalars).
TensorVector sigma_tensor(const TensorVector& v);

/// Reverses the factor order.
TensorVector reverse_tensor(const TensorVector& v);

/// All compositions bounded by the shape, in map order.
std::vector<Comp> all_indices(const Comp& shape);

/// All compositions bounded by the shape with the given total.
std::vector<Comp> indices_of_total(const Comp& shape, int t);

}  // namespace qtl
