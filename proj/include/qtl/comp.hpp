#pragma once

#include <vector>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>

namespace qtl {

/// Integer composition / multi-index. Used both for tensor shapes
/// (the list of factor highest weights) and for the indices w, r, n, a
/// bounded by a shape.
using Comp = std::vector<int>;

inline int total(const Comp& a) {
    int s = 0;
    for (int x : a) s += x;
    return s;
}

inline int prefix(const Comp& a, int j) {  // sum of a_1..a_j, 1-based, j=0 -> 0
    int s = 0;
    for (int i = 0; i < j; ++i) s += a[i];
    return s;
}

inline int suffix(const Comp& a, int j) {  // sum of a_j..a_k, 1-based
    int s = 0;
    for (int i = j - 1; i < static_cast<int>(a.size()); ++i) s += a[i];
    return s;
}

/// Partial order by prefix sums: a <= b iff sum(a_1..a_j) <= sum(b_1..b_j) for all j.
inline bool prefix_leq(const Comp& a, const Comp& b) {
    if (a.size() != b.size()) throw std::invalid_argument("prefix_leq: length mismatch");
    int sa = 0, sb = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        sa += a[i];
        sb += b[i];
        if (sa > sb) return false;
    }
    return true;
}

inline bool prefix_lt(const Comp& a, const Comp& b) {
    return a != b && prefix_leq(a, b);
}

inline bool leq_componentwise(const Comp& a, const Comp& b) {
    if (a.size() != b.size()) throw std::invalid_argument("leq_componentwise: length mismatch");
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline Comp add(const Comp& a, const Comp& b) {
    Comp c(a);
    for (size_t i = 0; i < a.size(); ++i) c[i] += b[i];
    return c;
}

inline Comp sub(const Comp& a, const Comp& b) {
    Comp c(a);
    for (size_t i = 0; i < a.size(); ++i) c[i] -= b[i];
    return c;
}

inline Comp unit(size_t k, size_t j) {  // delta^j, 0-based j
    Comp c(k, 0);
    c[j] = 1;
    return c;
}

inline Comp zeros(size_t k) { return Comp(k, 0); }

inline Comp reversed(const Comp& a) { return Comp(a.rbegin(), a.rend()); }

inline bool nonnegative(const Comp& a) {
    for (int x : a)
        if (x < 0) return false;
    return true;
}

/// Visit every composition c with 0 <= c_i <= bound_i.
inline void for_each_bounded(const Comp& bound, const std::function<void(const Comp&)>& fn) {
    Comp c(bound.size(), 0);
    while (true) {
        fn(c);
        size_t i = 0;
        while (i < c.size() && c[i] == bound[i]) c[i++] = 0;
        if (i == c.size()) return;
        ++c[i];
    }
}

/// Visit every composition c with 0 <= c_i <= bound_i and total(c) == t.
inline void for_each_bounded_total(const Comp& bound, int t,
                                   const std::function<void(const Comp&)>& fn) {
    for_each_bounded(bound, [&](const Comp& c) {
        if (total(c) == t) fn(c);
    });
}

inline std::string to_string(const Comp& a) {
    std::string s = "(";
    for (size_t i = 0; i < a.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(a[i]);
    }
    return s + ")";
}

}  // namespace qtl
