#include "qtl/strata.hpp"

#include <numeric>
#include <stdexcept>

namespace qtl {

Laurent k_factor(const StratumLabel& label) {
    const size_t k = label.w.size();
    long e = 0;
    for (size_t i = 0; i < k; ++i)
        for (size_t j = i + 1; j < k; ++j)
            e += label.r[i] * label.w[j] + label.w[i] * label.n[j] - label.w[i] * label.w[j];
    return Laurent::monomial(1, static_cast<int>(e));
}

bool feasible_pair(const Comp& shape, const Comp& r, const Comp& n) {
    const size_t k = shape.size();
    if (r.size() != k || n.size() != k) return false;
    if (!nonnegative(r) || !nonnegative(n)) return false;
    if (!leq_componentwise(n, shape)) return false;
    // im t inside ker t forces r <= n box by box.
    if (!leq_componentwise(r, n)) return false;
    if (total(r) + total(n) != total(shape)) return false;
    int sources = 0, targets = 0;
    for (size_t t = 0; t < k; ++t) {
        sources += shape[t] - n[t];
        if (sources > targets) return false;  // prefix Hall condition
        targets += r[t];
    }
    return true;
}

bool is_realizable(const Comp& shape, const StratumLabel& label) {
    if (label.w.size() != shape.size()) return false;
    if (!nonnegative(label.w)) return false;
    if (!leq_componentwise(label.r, label.w) || !leq_componentwise(label.w, label.n)) return false;
    return feasible_pair(shape, label.r, label.n);
}

std::vector<std::pair<Comp, Comp>> realizable_pairs(const Comp& shape) {
    std::vector<std::pair<Comp, Comp>> out;
    for_each_bounded(shape, [&](const Comp& r) {
        for_each_bounded(shape, [&](const Comp& n) {
            if (feasible_pair(shape, r, n)) out.emplace_back(r, n);
        });
    });
    return out;
}

std::vector<StratumLabel> realizable_labels(const Comp& shape) {
    std::vector<StratumLabel> out;
    for (auto& pair : realizable_pairs(shape)) {
        const Comp& r = pair.first;
        const Comp& n = pair.second;
        for_each_bounded(n, [&](const Comp& w) {
            if (leq_componentwise(r, w)) out.push_back(StratumLabel{w, r, n});
        });
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::pair<int, int>> witness_arcs(const Comp& shape, const Comp& r, const Comp& n) {
    if (!feasible_pair(shape, r, n))
        throw std::invalid_argument("witness_arcs: pair not feasible");
    const size_t k = shape.size();
    Comp demand = r;
    std::vector<std::pair<int, int>> arcs;
    for (size_t j = 0; j < k; ++j) {
        int s = shape[j] - n[j];
        // Feed each source in box j to the nearest remaining target on its left.
        for (int u = 0; u < s; ++u) {
            int i = static_cast<int>(j) - 1;
            while (i >= 0 && demand[i] == 0) --i;
            if (i < 0) throw std::logic_error("witness_arcs: feasibility violated");
            demand[i] -= 1;
            arcs.emplace_back(i + 1, static_cast<int>(j) + 1);
        }
    }
    return arcs;
}

InvariantFunction basic_function(const Comp& shape, const StratumLabel& label) {
    InvariantFunction f(shape);
    if (is_realizable(shape, label)) f.add(label, RatQ(k_factor(label)));
    return f;
}

InvariantFunction act_strata(Gen g, const InvariantFunction& f) {
    InvariantFunction out(f.shape);
    const size_t k = f.shape.size();
    for (auto& [label, val] : f.values) {
        const Comp &w = label.w, &r = label.r, &n = label.n;
        if (g == Gen::K || g == Gen::Kinv) {
            int wt = total(f.shape) - 2 * total(w);
            out.add(label, val * RatQ::monomial(1, g == Gen::K ? wt : -wt));
            continue;
        }
        RatQ coeff_f = val / RatQ(k_factor(label));
        for (size_t j = 0; j < k; ++j) {
            StratumLabel target{w, r, n};
            Laurent step;
            int e = 0;
            if (g == Gen::E) {
                if (w[j] - 1 < r[j]) continue;
                target.w[j] -= 1;
                step = q_int(n[j] - w[j] + 1);
                for (size_t i = 0; i < j; ++i) e += n[i] - r[i] - 2 * (w[i] - r[i]);
            } else {
                if (w[j] + 1 > n[j]) continue;
                target.w[j] += 1;
                step = q_int(w[j] - r[j] + 1);
                for (size_t i = j + 1; i < k; ++i) e -= n[i] - r[i] - 2 * (w[i] - r[i]);
            }
            out.add(target, coeff_f * RatQ(step) * RatQ::monomial(1, e) * RatQ(k_factor(target)));
        }
    }
    return out;
}

TensorVector strata_to_tensor(const Comp& r, const Comp& n, const InvariantFunction& f) {
    TensorVector v(sub(n, r));
    for (auto& [label, val] : f.values) {
        if (label.r != r || label.n != n)
            throw std::invalid_argument("strata_to_tensor: support leaves the (r, n) slice");
        v.add(sub(label.w, r), val / RatQ(k_factor(label)));
    }
    return v;
}

InvariantFunction tensor_to_strata(const Comp& shape, const Comp& r, const Comp& n,
                                   const TensorVector& v) {
    if (v.shape != sub(n, r)) throw std::invalid_argument("tensor_to_strata: shape mismatch");
    InvariantFunction f(shape);
    for (auto& [a, x] : v.c) {
        StratumLabel label{add(a, r), r, n};
        f.add(label, x * RatQ(k_factor(label)));
    }
    return f;
}

QuiverFunction act_quiver(Gen g, const QuiverFunction& f) {
    QuiverFunction out(f.d);
    for (auto& [key, val] : f.values) {
        auto [w, r] = key;
        switch (g) {
            case Gen::K: out.add(w, r, val * RatQ::monomial(1, f.d - 2 * w)); break;
            case Gen::Kinv: out.add(w, r, val * RatQ::monomial(1, 2 * w - f.d)); break;
            case Gen::E:
                if (w - 1 >= r) out.add(w - 1, r, val * RatQ(q_int(f.d - w + 1 - r)));
                break;
            case Gen::F:
                if (w + 1 <= f.d - r) out.add(w + 1, r, val * RatQ(q_int(w + 1 - r)));
                break;
        }
    }
    return out;
}

int dim_component(const Comp& shape, const Comp& w) {
    const size_t k = shape.size();
    int dim = 0;
    for (size_t i = 0; i < k; ++i)
        for (size_t j = i + 1; j < k; ++j) dim += shape[i] * shape[j];
    return dim + total(w) * (total(shape) - total(w));
}

namespace {

// Exact rank of an integer matrix by fraction-free elimination.
size_t int_rank(std::vector<std::vector<Int>> m) {
    size_t rank = 0;
    if (m.empty()) return 0;
    size_t rows = m.size(), cols = m[0].size();
    size_t row = 0;
    for (size_t col = 0; col < cols && row < rows; ++col) {
        size_t sel = row;
        while (sel < rows && m[sel][col] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[row]);
        for (size_t i = row + 1; i < rows; ++i) {
            if (m[i][col] == 0) continue;
            Int a = m[row][col], b = m[i][col];
            for (size_t j = col; j < cols; ++j) m[i][j] = m[i][j] * a - m[row][j] * b;
        }
        ++row;
        ++rank;
    }
    return rank;
}

// Dimension of the orbit of the canonical witness t under the flag
// stabilizer: dim(parabolic) - dim(centralizer of t in the parabolic).
int t_orbit_dim(const Comp& shape, const Comp& r, const Comp& n) {
    const int d = total(shape);
    std::vector<int> box(d + 1);
    {
        int v = 1;
        for (size_t i = 0; i < shape.size(); ++i)
            for (int j = 0; j < shape[i]; ++j) box[v++] = static_cast<int>(i) + 1;
    }
    // Vertex-level witness: sources are the last d_j - n_j vertices of box j,
    // targets the first r_i vertices of box i, wired by the box-level arcs.
    auto arcs = witness_arcs(shape, r, n);
    std::vector<int> tgt_of(d + 1, 0), src_of(d + 1, 0);
    {
        Comp next_tgt(shape.size()), next_src(shape.size());
        int base = 0;
        std::vector<int> box_base(shape.size() + 1, 0);
        for (size_t i = 0; i < shape.size(); ++i) {
            box_base[i] = base;
            base += shape[i];
        }
        Comp used_tgt = zeros(shape.size()), used_src = zeros(shape.size());
        for (auto& [bi, bj] : arcs) {
            int t = box_base[bi - 1] + 1 + used_tgt[bi - 1]++;
            int s = box_base[bj - 1] + shape[bj - 1] - used_src[bj - 1]++;
            tgt_of[s] = t;   // t0 e_s = e_t
            src_of[t] = s;
        }
    }
    // Variables: entries X_{u,v} with box(u) <= box(v).  Equations: entries of
    // X t0 - t0 X.
    std::vector<std::pair<int, int>> vars;
    std::map<std::pair<int, int>, int> var_index;
    for (int u = 1; u <= d; ++u)
        for (int v = 1; v <= d; ++v)
            if (box[u] <= box[v]) {
                var_index[{u, v}] = static_cast<int>(vars.size());
                vars.emplace_back(u, v);
            }
    std::vector<std::vector<Int>> eq;
    for (int u = 1; u <= d; ++u) {
        for (int v = 1; v <= d; ++v) {
            std::vector<Int> row(vars.size(), 0);
            bool nonzero = false;
            if (tgt_of[v]) {  // (X t0)_{u,v} = X_{u, tgt(v)}
                auto it = var_index.find({u, tgt_of[v]});
                if (it != var_index.end()) {
                    row[it->second] += 1;
                    nonzero = true;
                }
            }
            if (src_of[u]) {  // (t0 X)_{u,v} = X_{src(u), v}
                auto it = var_index.find({src_of[u], v});
                if (it != var_index.end()) {
                    row[it->second] -= 1;
                    nonzero = true;
                }
            }
            if (nonzero) eq.push_back(std::move(row));
        }
    }
    int stab = static_cast<int>(vars.size() - int_rank(std::move(eq)));
    return static_cast<int>(vars.size()) - stab;
}

}  // namespace

int stratum_dim(const Comp& shape, const StratumLabel& label) {
    if (!is_realizable(shape, label))
        throw std::invalid_argument("stratum_dim: unrealizable label");
    const size_t k = shape.size();
    int flag_dim = 0;
    for (size_t i = 0; i < k; ++i)
        for (size_t j = i + 1; j < k; ++j) flag_dim += shape[i] * shape[j];
    Comp a = sub(label.w, label.r), dd = sub(label.n, label.r);
    int wfiber = 0;
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j <= i; ++j) wfiber += a[i] * (dd[j] - a[j]);
    return flag_dim + t_orbit_dim(shape, label.r, label.n) + wfiber;
}

Laurent flag_count(const Comp& shape, const StratumLabel& label) {
    if (!is_realizable(shape, label)) return Laurent(0);
    const size_t k = shape.size();
    Laurent out(1);
    for (size_t i = 0; i + 1 < k; ++i) {
        Comp a1(4), a2(4);
        int sr = 0, sw = 0, sn = 0, sd = 0;
        for (size_t j = i; j < k; ++j) {
            sr += label.r[j];
            sw += label.w[j];
            sn += label.n[j];
            sd += shape[j];
        }
        a1[0] = sr;
        a1[1] = sw - sr;
        a1[2] = sn - sw;
        a1[3] = sd - sn - sr;
        a2[0] = label.r[i];
        a2[1] = label.w[i] - label.r[i];
        a2[2] = label.n[i] - label.w[i];
        a2[3] = shape[i] - label.n[i];
        out *= cell_count(a1, a2);
    }
    return out;
}

Laurent flags_count_poly(const Comp& shape) {
    Laurent out(1);
    const size_t k = shape.size();
    for (size_t i = 0; i + 1 < k; ++i) {
        int rest = 0;
        for (size_t j = i; j < k; ++j) rest += shape[j];
        out *= cell_count(Comp{rest}, Comp{shape[i]});
    }
    return out;
}

Laurent stratum_count_poly(const Comp& shape, const StratumLabel& label) {
    if (!is_realizable(shape, label)) return Laurent(0);
    const int rho = total(label.r), nu = total(label.n), sig = total(label.w);
    const int d = total(shape);
    Laurent nwt = cell_count(Comp{d}, Comp{nu}) * cell_count(Comp{nu}, Comp{rho}) *
                  cell_count(Comp{nu - rho}, Comp{sig - rho}) * gl_order(rho);
    return nwt * flag_count(shape, label);
}

}  // namespace qtl
