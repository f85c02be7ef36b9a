#include "qtl/fqoracle.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace qtl {

Fq::Fq(int p) : p_(p), size_(p * p) {
    // x^2 + c1 x + c0 irreducible over F_p.
    int c0, c1;
    switch (p) {
        case 2: c0 = 1; c1 = 1; break;
        case 3: c0 = 1; c1 = 0; break;
        case 5: c0 = 2; c1 = 0; break;
        default: throw std::invalid_argument("Fq: p must be 2, 3 or 5");
    }
    auto enc = [&](int a, int b) { return static_cast<uint8_t>((a % p + p) % p + p * ((b % p + p) % p)); };
    add_.assign(size_ * size_, 0);
    mul_.assign(size_ * size_, 0);
    neg_.assign(size_, 0);
    inv_.assign(size_, 0);
    for (int a1 = 0; a1 < p; ++a1)
        for (int b1 = 0; b1 < p; ++b1) {
            neg_[enc(a1, b1)] = enc(-a1, -b1);
            for (int a2 = 0; a2 < p; ++a2)
                for (int b2 = 0; b2 < p; ++b2) {
                    add_[enc(a1, b1) * size_ + enc(a2, b2)] = enc(a1 + a2, b1 + b2);
                    // (a1 + b1 x)(a2 + b2 x), x^2 = -c1 x - c0.
                    int xa = a1 * a2 - b1 * b2 * c0;
                    int xb = a1 * b2 + a2 * b1 - b1 * b2 * c1;
                    mul_[enc(a1, b1) * size_ + enc(a2, b2)] = enc(xa, xb);
                }
        }
    for (int a = 1; a < size_; ++a) {
        int found = 0;
        for (int b = 1; b < size_; ++b)
            if (mul_[a * size_ + b] == 1) {
                inv_[a] = static_cast<uint8_t>(b);
                found = 1;
                break;
            }
        if (!found) throw std::logic_error("Fq: element without inverse (polynomial reducible?)");
    }
    // Table sanity: associativity of multiplication, distributivity spot check.
    for (int a = 0; a < size_; ++a)
        for (int b = 0; b < size_; ++b)
            for (int c = 0; c < size_; ++c) {
                if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                    throw std::logic_error("Fq: multiplication not associative");
                if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c)))
                    throw std::logic_error("Fq: distributivity fails");
            }
}

uint8_t Fq::inv(uint8_t a) const {
    if (a == 0) throw std::domain_error("Fq: inverse of zero");
    return inv_[a];
}

FqMat mat_mul(const Fq& F, const FqMat& x, const FqMat& y) {
    FqMat z(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            uint8_t c = x.at(i, k);
            if (!c) continue;
            for (int j = 0; j < y.cols; ++j)
                z.at(i, j) = F.add(z.at(i, j), F.mul(c, y.at(k, j)));
        }
    return z;
}

bool is_zero_mat(const FqMat& x) {
    for (uint8_t v : x.a)
        if (v) return false;
    return true;
}

int rref(const Fq& F, FqMat& m, bool strip) {
    int rank = 0;
    for (int col = 0; col < m.cols && rank < m.rows; ++col) {
        int sel = rank;
        while (sel < m.rows && m.at(sel, col) == 0) ++sel;
        if (sel == m.rows) continue;
        for (int j = 0; j < m.cols; ++j) std::swap(m.a[sel * m.cols + j], m.a[rank * m.cols + j]);
        uint8_t inv = F.inv(m.at(rank, col));
        for (int j = 0; j < m.cols; ++j) m.at(rank, j) = F.mul(m.at(rank, j), inv);
        for (int i = 0; i < m.rows; ++i) {
            if (i == rank || m.at(i, col) == 0) continue;
            uint8_t f = m.at(i, col);
            for (int j = 0; j < m.cols; ++j)
                m.at(i, j) = F.sub(m.at(i, j), F.mul(f, m.at(rank, j)));
        }
        ++rank;
    }
    if (strip) {
        m.a.resize(static_cast<size_t>(rank) * m.cols);
        m.rows = rank;
    }
    return rank;
}

int rank_of(const Fq& F, FqMat m) { return rref(F, m); }

namespace {

Int count_subspaces(const Fq& F, int d, int w) {
    // Sum over pivot patterns of |F|^(number of free entries).
    if (w < 0 || w > d) return 0;
    Int out = 0;
    std::vector<int> piv(w);
    for (int i = 0; i < w; ++i) piv[i] = i;
    while (true) {
        int free_cells = 0;
        for (int i = 0; i < w; ++i)
            for (int j = piv[i] + 1; j < d; ++j)
                if (std::find(piv.begin(), piv.end(), j) == piv.end()) ++free_cells;
        Int cells = 1;
        for (int i = 0; i < free_cells; ++i) cells *= F.size();
        out += cells;
        int i = w - 1;
        while (i >= 0 && piv[i] == d - w + i) --i;
        if (i < 0) break;
        ++piv[i];
        for (int j = i + 1; j < w; ++j) piv[j] = piv[j - 1] + 1;
    }
    if (w == 0) out = 1;
    return out;
}

}  // namespace

std::vector<SubspaceRep> enum_subspaces(const Fq& F, int d, int w, int cap) {
    if (w < 0 || w > d) return {};
    if (d > cap)
        throw std::length_error("enum_subspaces: dimension " + std::to_string(d) + " over cap, " +
                                count_subspaces(F, d, w).str() + " subspaces projected");
    std::vector<SubspaceRep> out;
    std::vector<int> piv(w);
    for (int i = 0; i < w; ++i) piv[i] = i;
    while (true) {
        std::vector<std::pair<int, int>> free_cells;
        for (int i = 0; i < w; ++i)
            for (int j = piv[i] + 1; j < d; ++j)
                if (std::find(piv.begin(), piv.end(), j) == piv.end()) free_cells.emplace_back(i, j);
        std::vector<uint8_t> vals(free_cells.size(), 0);
        while (true) {
            FqMat m(w, d);
            for (int i = 0; i < w; ++i) m.at(i, piv[i]) = 1;
            for (size_t t = 0; t < free_cells.size(); ++t)
                m.at(free_cells[t].first, free_cells[t].second) = vals[t];
            out.push_back(std::move(m));
            size_t t = 0;
            while (t < vals.size() && vals[t] == F.size() - 1) vals[t++] = 0;
            if (t == vals.size()) break;
            ++vals[t];
        }
        if (w == 0) break;
        int i = w - 1;
        while (i >= 0 && piv[i] == d - w + i) --i;
        if (i < 0) break;
        ++piv[i];
        for (int j = i + 1; j < w; ++j) piv[j] = piv[j - 1] + 1;
    }
    return out;
}

Comp alpha_profile(const Fq& F, const SubspaceRep& W, const Comp& shape) {
    // dim(W cap span(e_1..e_c)) = dim W - rank(columns beyond c).
    // (Tail entries can cancel, so this is a genuine rank, not a pivot scan.)
    Comp out(shape.size(), 0);
    int c = 0;
    int prev_dim = 0;
    for (size_t i = 0; i < shape.size(); ++i) {
        c += shape[i];
        FqMat tail(W.rows, W.cols - c);
        for (int r = 0; r < W.rows; ++r)
            for (int j = c; j < W.cols; ++j) tail.at(r, j - c) = W.at(r, j);
        int dim = W.rows - rank_of(F, tail);
        out[i] = dim - prev_dim;
        prev_dim = dim;
    }
    return out;
}

namespace {

// dim(span(A) cap span(B)) via dim A + dim B - dim(A + B).
int intersect_dim(const Fq& F, const FqMat& A, const FqMat& B) {
    FqMat s(A.rows + B.rows, A.cols);
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < A.cols; ++j) s.at(i, j) = A.at(i, j);
    for (int i = 0; i < B.rows; ++i)
        for (int j = 0; j < A.cols; ++j) s.at(A.rows + i, j) = B.at(i, j);
    return A.rows + B.rows - rank_of(F, s);
}

FqMat column_space(const Fq& F, const FqMat& t) {
    FqMat rowsm(t.cols, t.rows);
    for (int i = 0; i < t.rows; ++i)
        for (int j = 0; j < t.cols; ++j) rowsm.at(j, i) = t.at(i, j);
    rref(F, rowsm);
    return rowsm;
}

FqMat kernel_space(const Fq& F, const FqMat& t) {
    FqMat m = t;
    int rk = rref(F, m);
    std::vector<int> piv;
    {
        int col = 0;
        for (int i = 0; i < rk; ++i) {
            while (col < m.cols && m.at(i, col) == 0) ++col;
            piv.push_back(col);
        }
    }
    std::vector<int> freecols;
    for (int j = 0; j < t.cols; ++j)
        if (std::find(piv.begin(), piv.end(), j) == piv.end()) freecols.push_back(j);
    FqMat ker(static_cast<int>(freecols.size()), t.cols);
    for (size_t b = 0; b < freecols.size(); ++b) {
        int j = freecols[b];
        ker.at(static_cast<int>(b), j) = 1;
        for (int i = 0; i < rk; ++i) ker.at(static_cast<int>(b), piv[i]) = F.neg(m.at(i, j));
    }
    rref(F, ker);
    return ker;
}

}  // namespace

bool in_span(const Fq& F, const SubspaceRep& W, const std::vector<uint8_t>& v) {
    FqMat s(W.rows + 1, W.cols);
    for (int i = 0; i < W.rows; ++i)
        for (int j = 0; j < W.cols; ++j) s.at(i, j) = W.at(i, j);
    for (int j = 0; j < W.cols; ++j) s.at(W.rows, j) = v[j];
    return rank_of(F, s) == W.rows;
}

bool subspace_leq(const Fq& F, const SubspaceRep& A, const SubspaceRep& B) {
    return intersect_dim(F, A, B) == A.rows;
}

ConfigPoint standard_config([[maybe_unused]] const Fq& F, const Comp& shape,
                            const StratumLabel& label) {
    if (!is_realizable(shape, label))
        throw std::invalid_argument("standard_config: unrealizable label");
    const int d = total(shape);
    std::vector<int> box_base(shape.size(), 0);
    for (size_t i = 1; i < shape.size(); ++i) box_base[i] = box_base[i - 1] + shape[i - 1];
    auto arcs = witness_arcs(shape, label.r, label.n);
    ConfigPoint cfg;
    cfg.t = FqMat(d, d);
    Comp used_tgt = zeros(shape.size()), used_src = zeros(shape.size());
    for (auto& [bi, bj] : arcs) {
        int tgt = box_base[bi - 1] + used_tgt[bi - 1]++;
        int src = box_base[bj - 1] + shape[bj - 1] - 1 - used_src[bj - 1]++;
        cfg.t.at(tgt, src) = 1;
    }
    std::vector<int> wcols;
    for (size_t i = 0; i < shape.size(); ++i) {
        for (int j = 0; j < label.r[i]; ++j) wcols.push_back(box_base[i] + j);
        for (int j = label.r[i]; j < label.w[i]; ++j) wcols.push_back(box_base[i] + j);
    }
    std::sort(wcols.begin(), wcols.end());
    cfg.W = FqMat(static_cast<int>(wcols.size()), d);
    for (size_t i = 0; i < wcols.size(); ++i) cfg.W.at(static_cast<int>(i), wcols[i]) = 1;
    return cfg;
}

std::map<std::pair<Comp, Comp>, Int> t_profile_counts(const Fq& F, const Comp& shape, int cap) {
    const int d = total(shape);
    if (d > cap) throw std::length_error("t_profile_counts: |d| over cap");
    std::vector<int> box(d);
    {
        int v = 0;
        for (size_t i = 0; i < shape.size(); ++i)
            for (int j = 0; j < shape[i]; ++j) box[v++] = static_cast<int>(i);
    }
    std::vector<std::pair<int, int>> cells;
    for (int u = 0; u < d; ++u)
        for (int v = 0; v < d; ++v)
            if (box[u] < box[v]) cells.emplace_back(u, v);
    std::map<std::pair<Comp, Comp>, Int> buckets;
    std::vector<uint8_t> vals(cells.size(), 0);
    FqMat t(d, d);
    while (true) {
        for (size_t i = 0; i < cells.size(); ++i) t.at(cells[i].first, cells[i].second) = vals[i];
        if (is_zero_mat(mat_mul(F, t, t))) {
            int rk = rank_of(F, t);
            Comp r(shape.size()), n(shape.size());
            int prev_r = 0, prev_n = 0, c = 0;
            for (size_t i = 0; i < shape.size(); ++i) {
                c += shape[i];
                // rank of the rows past c
                FqMat below(d - c, d);
                for (int u = c; u < d; ++u)
                    for (int v = 0; v < d; ++v) below.at(u - c, v) = t.at(u, v);
                int rprefix = rk - rank_of(F, below);
                FqMat left(d, c);
                for (int u = 0; u < d; ++u)
                    for (int v = 0; v < c; ++v) left.at(u, v) = t.at(u, v);
                int nprefix = c - rank_of(F, left);
                r[i] = rprefix - prev_r;
                n[i] = nprefix - prev_n;
                prev_r = rprefix;
                prev_n = nprefix;
            }
            buckets[{r, n}] += 1;
        }
        size_t i = 0;
        while (i < vals.size() && vals[i] == F.size() - 1) vals[i++] = 0;
        if (i == vals.size()) break;
        ++vals[i];
    }
    return buckets;
}

Int count_flags(const Fq& F, const Comp& shape) {
    Int out = 1;
    int rest = total(shape);
    for (size_t i = 0; i + 1 < shape.size(); ++i) {
        out *= count_subspaces(F, rest, shape[i]);
        rest -= shape[i];
    }
    return out;
}

Int count_stratum(const Fq& F, const Comp& shape, const StratumLabel& label,
                  const std::map<std::pair<Comp, Comp>, Int>& buckets, int cap) {
    if (!is_realizable(shape, label)) return 0;
    auto it = buckets.find({label.r, label.n});
    if (it == buckets.end()) return 0;
    // Subspaces between image and kernel with the prescribed profile, counted
    // in the kernel/image quotient carrying the induced coordinate flag.
    Comp qshape = sub(label.n, label.r), qprof = sub(label.w, label.r);
    Int wcount = 0;
    for (auto& U : enum_subspaces(F, total(qshape), total(qprof), cap + 3))
        if (alpha_profile(F, U, qshape) == qprof) wcount += 1;
    return count_flags(F, shape) * it->second * wcount;
}

Int count_stratum(const Fq& F, const Comp& shape, const StratumLabel& label, int cap) {
    if (total(shape) > cap)
        throw std::length_error("count_stratum: |d| = " + std::to_string(total(shape)) +
                                " over cap " + std::to_string(cap));
    if (!is_realizable(shape, label)) return 0;
    return count_stratum(F, shape, label, t_profile_counts(F, shape, cap), cap);
}

std::vector<std::vector<SubspaceRep>> enum_flags(const Fq& F, const Comp& shape, int cap) {
    const int d = total(shape);
    if (d > cap) throw std::length_error("enum_flags: |d| over cap");
    std::vector<std::vector<SubspaceRep>> flags;
    std::vector<SubspaceRep> chain;
    std::function<void(const SubspaceRep&)> rec = [&](const SubspaceRep& U) {
        size_t level = chain.size();
        if (level + 1 == shape.size()) {
            flags.push_back(chain);
            return;
        }
        // Lift subspaces of the quotient by U through its non-pivot coordinates.
        std::vector<int> piv;
        {
            int col = 0;
            for (int i = 0; i < U.rows; ++i) {
                while (col < d && U.at(i, col) == 0) ++col;
                piv.push_back(col);
            }
        }
        std::vector<int> freecols;
        for (int j = 0; j < d; ++j)
            if (std::find(piv.begin(), piv.end(), j) == piv.end()) freecols.push_back(j);
        int dq = static_cast<int>(freecols.size());
        for (auto& T : enum_subspaces(F, dq, shape[level], cap)) {
            FqMat lift(U.rows + T.rows, d);
            for (int i = 0; i < U.rows; ++i)
                for (int j = 0; j < d; ++j) lift.at(i, j) = U.at(i, j);
            for (int i = 0; i < T.rows; ++i)
                for (int j = 0; j < dq; ++j) lift.at(U.rows + i, freecols[j]) = T.at(i, j);
            rref(F, lift);
            chain.push_back(lift);
            rec(lift);
            chain.pop_back();
        }
    };
    rec(FqMat(0, d));
    return flags;
}

std::map<StratumLabel, Int> flag_profile_counts(const Fq& F, const Comp& shape,
                                                const ConfigPoint& cfg, int cap) {
    const int d = total(shape);
    FqMat im = column_space(F, cfg.t);
    FqMat ker = kernel_space(F, cfg.t);
    std::map<StratumLabel, Int> buckets;
    for (auto& flag : enum_flags(F, shape, cap)) {
        // t-stability: t D_i inside D_{i-1}.
        bool stable = true;
        for (size_t i = 0; i < flag.size() && stable; ++i) {
            const SubspaceRep& Di = flag[i];
            for (int row = 0; row < Di.rows && stable; ++row) {
                std::vector<uint8_t> v(d, 0);
                for (int u = 0; u < d; ++u) {
                    uint8_t s = 0;
                    for (int j = 0; j < d; ++j) s = F.add(s, F.mul(cfg.t.at(u, j), Di.at(row, j)));
                    v[u] = s;
                }
                if (i == 0) {
                    for (uint8_t x : v)
                        if (x) stable = false;
                } else if (!in_span(F, flag[i - 1], v)) {
                    stable = false;
                }
            }
        }
        // t D_k = im t inside D_{k-1} as well.
        if (stable && !flag.empty() && !subspace_leq(F, im, flag.back())) stable = false;
        if (!stable) continue;
        auto profile = [&](const FqMat& X) {
            Comp out(shape.size());
            int prev = 0;
            for (size_t i = 0; i < shape.size(); ++i) {
                int dim = (i + 1 == shape.size()) ? X.rows : intersect_dim(F, X, flag[i]);
                out[i] = dim - prev;
                prev = dim;
            }
            return out;
        };
        StratumLabel label{profile(cfg.W), profile(im), profile(ker)};
        buckets[label] += 1;
    }
    return buckets;
}

Int count_stratum_full(const Fq& F, const Comp& shape, const StratumLabel& label, int cap) {
    const int d = total(shape);
    if (d > cap) throw std::length_error("count_stratum_full: |d| over cap");
    Int out = 0;
    // All square-zero t, all W between, all flags; pure filtering.
    std::vector<uint8_t> vals(static_cast<size_t>(d) * d, 0);
    auto flags = enum_flags(F, shape, cap);
    auto subs = enum_subspaces(F, d, total(label.w), cap);
    FqMat t(d, d);
    while (true) {
        t.a = vals;
        if (is_zero_mat(mat_mul(F, t, t)) && rank_of(F, t) == total(label.r)) {
            FqMat im = column_space(F, t);
            FqMat ker = kernel_space(F, t);
            for (auto& W : subs) {
                if (!subspace_leq(F, im, W) || !subspace_leq(F, W, ker)) continue;
                for (auto& flag : flags) {
                    bool ok = true;
                    for (size_t i = 0; i < flag.size() && ok; ++i) {
                        const SubspaceRep& Di = flag[i];
                        for (int row = 0; row < Di.rows && ok; ++row) {
                            std::vector<uint8_t> v(d, 0);
                            for (int u = 0; u < d; ++u) {
                                uint8_t s = 0;
                                for (int j = 0; j < d; ++j)
                                    s = F.add(s, F.mul(t.at(u, j), Di.at(row, j)));
                                v[u] = s;
                            }
                            if (i == 0) {
                                for (uint8_t x : v)
                                    if (x) ok = false;
                            } else if (!in_span(F, flag[i - 1], v)) {
                                ok = false;
                            }
                        }
                    }
                    if (ok && !flag.empty() && !subspace_leq(F, im, flag.back())) ok = false;
                    if (!ok) continue;
                    auto profile = [&](const FqMat& X) {
                        Comp out2(shape.size());
                        int prev = 0;
                        for (size_t i = 0; i < shape.size(); ++i) {
                            int dim =
                                (i + 1 == shape.size()) ? X.rows : intersect_dim(F, X, flag[i]);
                            out2[i] = dim - prev;
                            prev = dim;
                        }
                        return out2;
                    };
                    if (profile(W) == label.w && profile(im) == label.r &&
                        profile(ker) == label.n)
                        out += 1;
                }
            }
        }
        size_t i = 0;
        while (i < vals.size() && vals[i] == F.size() - 1) vals[i++] = 0;
        if (i == vals.size()) break;
        ++vals[i];
    }
    return out;
}

}  // namespace qtl
