#pragma once

#include <map>
#include <vector>

#include "qtl/comp.hpp"
#include "qtl/laurent.hpp"
#include "qtl/ratq.hpp"
#include "qtl/tensor.hpp"

namespace qtl {

/// Orbit label (w, r, n) of the tensor product variety of a shape d:
/// the profiles against the flag of W, im t and ker t respectively.
struct StratumLabel {
    Comp w, r, n;

    friend bool operator==(const StratumLabel& a, const StratumLabel& b) {
        return a.w == b.w && a.r == b.r && a.n == b.n;
    }
    friend bool operator<(const StratumLabel& a, const StratumLabel& b) {
        if (a.w != b.w) return a.w < b.w;
        if (a.r != b.r) return a.r < b.r;
        return a.n < b.n;
    }

    std::string str() const {
        return "w=" + qtl::to_string(w) + " r=" + qtl::to_string(r) + " n=" + qtl::to_string(n);
    }
};

/// The monomial normalization of the basic functions:
/// q^{sum_{i<j} (r_i w_j + w_i n_j - w_i w_j)}.
Laurent k_factor(const StratumLabel& label);

/// Whether some square-zero flag-compatible t has image profile r and kernel
/// profile n: |r| + |n| = |d| and the arc-multiplicity transportation problem
/// (sources d_j - n_j in box j feeding targets r_i in boxes i < j) is
/// feasible, which for these nested neighborhoods reduces to the prefix
/// condition sum_{j<=t}(d_j - n_j) <= sum_{i<=t-1} r_i for every t.
bool feasible_pair(const Comp& shape, const Comp& r, const Comp& n);

/// Nonemptiness of the stratum: feasible (r, n) and r <= w <= n
/// componentwise (forced by im t included in W included in ker t).
bool is_realizable(const Comp& shape, const StratumLabel& label);

std::vector<std::pair<Comp, Comp>> realizable_pairs(const Comp& shape);
std::vector<StratumLabel> realizable_labels(const Comp& shape);

/// A canonical square-zero witness for a feasible pair: the list of arcs
/// (target box i, source box j), i < j, with multiplicities.
std::vector<std::pair<int, int>> witness_arcs(const Comp& shape, const Comp& r, const Comp& n);

/// Invariant function on the tensor product variety, stored by its values on
/// the orbits; the basic-function coefficients are derived views through the
/// k-factor.
struct InvariantFunction {
    Comp shape;
    std::map<StratumLabel, RatQ> values;

    InvariantFunction() = default;
    explicit InvariantFunction(Comp s) : shape(std::move(s)) {}

    void add(const StratumLabel& label, const RatQ& x) {
        if (x.is_zero()) return;
        auto [it, inserted] = values.emplace(label, x);
        if (!inserted) {
            it->second += x;
            if (it->second.is_zero()) values.erase(it);
        }
    }

    RatQ value(const StratumLabel& label) const {
        auto it = values.find(label);
        return it == values.end() ? RatQ(0) : it->second;
    }

    bool is_zero() const { return values.empty(); }

    friend bool operator==(const InvariantFunction& a, const InvariantFunction& b) {
        return a.shape == b.shape && a.values == b.values;
    }

    InvariantFunction operator*(const RatQ& s) const {
        InvariantFunction r(shape);
        if (s.is_zero()) return r;
        for (auto& [l, x] : values) r.values.emplace(l, x * s);
        return r;
    }
    InvariantFunction& operator+=(const InvariantFunction& o) {
        for (auto& [l, x] : o.values) add(l, x);
        return *this;
    }
    InvariantFunction operator-(const InvariantFunction& o) const {
        InvariantFunction r = *this;
        for (auto& [l, x] : o.values) r.add(l, -x);
        return r;
    }
};

/// The basic function: k-factor times the orbit indicator.
InvariantFunction basic_function(const Comp& shape, const StratumLabel& label);

/// Generator action on invariant functions, the linear extension of
///   E f_{w,r,n} = sum_j q^{sum_{i<j}(n_i - r_i - 2(w_i - r_i))} [n_j - w_j + 1] f_{w - e_j, r, n}
///   F f_{w,r,n} = sum_j q^{-sum_{i>j}(n_i - r_i - 2(w_i - r_i))} [w_j - r_j + 1] f_{w + e_j, r, n}
///   K f = q^{|d| - 2|w|} f
/// with terms whose target label is empty dropped.
InvariantFunction act_strata(Gen g, const InvariantFunction& f);

/// The slice isomorphism onto the tensor product of shape n - r:
/// basic function at (w, r, n)  ->  elementary tensor at index w - r.
TensorVector strata_to_tensor(const Comp& r, const Comp& n, const InvariantFunction& f);
InvariantFunction tensor_to_strata(const Comp& shape, const Comp& r, const Comp& n,
                                   const TensorVector& v);

/// Function on the subspace-endomorphism pairs (W, t) of a d-dimensional
/// space, constant on the pieces indexed by (dim W, rank t).
struct QuiverFunction {
    int d = 0;
    std::map<std::pair<int, int>, RatQ> values;  // key (dim W, rank t)

    QuiverFunction() = default;
    explicit QuiverFunction(int dd) : d(dd) {}

    void add(int w, int r, const RatQ& x) {
        if (x.is_zero()) return;
        auto key = std::make_pair(w, r);
        auto [it, inserted] = values.emplace(key, x);
        if (!inserted) {
            it->second += x;
            if (it->second.is_zero()) values.erase(it);
        }
    }

    RatQ value(int w, int r) const {
        auto it = values.find({w, r});
        return it == values.end() ? RatQ(0) : it->second;
    }

    bool is_zero() const { return values.empty(); }

    friend bool operator==(const QuiverFunction& a, const QuiverFunction& b) {
        return a.d == b.d && a.values == b.values;
    }

    QuiverFunction operator*(const RatQ& s) const {
        QuiverFunction out(d);
        if (s.is_zero()) return out;
        for (auto& [k, x] : values) out.values.emplace(k, x * s);
        return out;
    }
    QuiverFunction& operator+=(const QuiverFunction& o) {
        for (auto& [k, x] : o.values) add(k.first, k.second, x);
        return *this;
    }
    QuiverFunction operator-(const QuiverFunction& o) const {
        QuiverFunction r = *this;
        for (auto& [k, x] : o.values) r.add(k.first, k.second, -x);
        return r;
    }
};

/// Generator action on the rank-r pieces:
///   E 1_{(w,r)} = [d - w - r + 1] 1_{(w-1,r)},  F 1_{(w,r)} = [w + 1 - r] 1_{(w+1,r)},
///   K 1_{(w,r)} = q^{d - 2w} 1_{(w,r)},  supported on r <= w <= d - r.
QuiverFunction act_quiver(Gen g, const QuiverFunction& f);

/// Dimension of the irreducible component indexed by w:
/// sum_{i<j} d_i d_j + |w| (|d| - |w|).
int dim_component(const Comp& shape, const Comp& w);

/// Dimension of the orbit (w, r, n): flag dimension, plus the dimension of
/// the t-orbit under the flag stabilizer (computed exactly as the corank of
/// the centralizer of the canonical arc witness inside the parabolic), plus
/// the W-fiber dimension sum_{j<=i} (w-r)_i ((n-r)_j - (w-r)_j).
int stratum_dim(const Comp& shape, const StratumLabel& label);

/// Point count of the stratum over the field with q^2 elements, as a
/// polynomial in q: (number of (W, t) configurations of the right numeric
/// type) times the flag count of the label.  Zero for unrealizable labels.
Laurent stratum_count_poly(const Comp& shape, const StratumLabel& label);

/// Point count of {D : flag of type d, t-stable, profiles of (im t, W, ker t)
/// equal to (r, w, n)} for a fixed (W, t) of matching numeric type:
/// the product over i = 1..k-1 of cell counts
///   c_{a1^i, a2^i},  a1^i = (r, w-r, n-w, d-n-r) summed over boxes i..k,
///                    a2^i = (r_i, w_i - r_i, n_i - w_i, d_i - n_i).
/// Zero for unrealizable labels.
Laurent flag_count(const Comp& shape, const StratumLabel& label);

/// Point count of all flags of type d, as a polynomial in q.
Laurent flags_count_poly(const Comp& shape);

}  // namespace qtl
