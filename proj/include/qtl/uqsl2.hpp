#pragma once

#include <map>
#include <vector>

#include "qtl/ratq.hpp"

namespace qtl {

enum class Gen { E, F, K, Kinv };

/// Element of the irreducible module V_d, stored on the weight basis
/// {v_d, v_{d-2}, ..., v_{-d}} (or, by convention of the caller, on the
/// dual basis {v^m}).  Keys m satisfy |m| <= d, m = d (mod 2).
struct IrrepVector {
    int d = 0;
    std::map<int, RatQ> c;

    IrrepVector() = default;
    explicit IrrepVector(int dd) : d(dd) {}

    static IrrepVector basis(int d, int m) {
        IrrepVector v(d);
        v.add(m, RatQ(1));
        return v;
    }

    void add(int m, const RatQ& x) {
        if (x.is_zero()) return;
        if (m > d || m < -d || ((d - m) % 2) != 0)
            throw std::invalid_argument("IrrepVector: weight out of range");
        auto [it, inserted] = c.emplace(m, x);
        if (!inserted) {
            it->second += x;
            if (it->second.is_zero()) c.erase(it);
        }
    }

    bool is_zero() const { return c.empty(); }

    friend bool operator==(const IrrepVector& a, const IrrepVector& b) {
        return a.d == b.d && a.c == b.c;
    }

    IrrepVector operator*(const RatQ& s) const {
        IrrepVector r(d);
        if (s.is_zero()) return r;
        for (auto& [m, x] : c) r.c[m] = x * s;
        return r;
    }
    IrrepVector& operator+=(const IrrepVector& o) {
        for (auto& [m, x] : o.c) add(m, x);
        return *this;
    }
};

/// Action on the weight basis:
///   K^{+-1} v_m = q^{+-m} v_m,  E v_m = [(d+m)/2 + 1] v_{m+2},
///   F v_m = [(d-m)/2 + 1] v_{m-2},  with v_m = 0 outside |m| <= d.
IrrepVector act(Gen g, const IrrepVector& v);

/// Action in the dual basis: E v^m = [(d-m)/2] v^{m+2}, F v^m = [(d+m)/2] v^{m-2}.
IrrepVector act_dual(Gen g, const IrrepVector& v);

/// Bilinear symmetric pairing with <v_{d-2k}, v_{d-2l}> = delta_{kl} [d choose k].
RatQ pairing(const IrrepVector& u, const IrrepVector& v);

/// Change dual-basis coordinates to weight-basis coordinates
/// (v^{d-2k} = [d choose k]^{-1} v_{d-2k}) and back.
IrrepVector from_dual(const IrrepVector& v);
IrrepVector to_dual(const IrrepVector& v);

/// Free word in the generators with a scalar, the domain of the algebra
/// involutions omega and sigma.
struct GeneratorWord {
    std::vector<Gen> syms;  // leftmost symbol acts last
    RatQ scalar = RatQ(1);

    friend bool operator==(const GeneratorWord& a, const GeneratorWord& b) {
        return a.syms == b.syms && a.scalar == b.scalar;
    }
};

/// Cartan involution: E <-> F, K fixed, reverses products, fixes q.
GeneratorWord omega(const GeneratorWord& w);

/// Bar involution: E, F fixed, K <-> K^{-1}, preserves order, bars the scalar.
GeneratorWord sigma(const GeneratorWord& w);

/// Apply a word (rightmost symbol first).
IrrepVector act_word(const GeneratorWord& w, const IrrepVector& v);
IrrepVector act_word_dual(const GeneratorWord& w, const IrrepVector& v);

}  // namespace qtl
