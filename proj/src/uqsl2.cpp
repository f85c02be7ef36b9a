#include "qtl/uqsl2.hpp"

#include "qtl/laurent.hpp"

namespace qtl {

IrrepVector act(Gen g, const IrrepVector& v) {
    IrrepVector out(v.d);
    for (auto& [m, x] : v.c) {
        switch (g) {
            case Gen::K: out.add(m, x * RatQ::monomial(1, m)); break;
            case Gen::Kinv: out.add(m, x * RatQ::monomial(1, -m)); break;
            case Gen::E:
                if (m + 2 <= v.d) out.add(m + 2, x * RatQ(q_int((v.d + m) / 2 + 1)));
                break;
            case Gen::F:
                if (m - 2 >= -v.d) out.add(m - 2, x * RatQ(q_int((v.d - m) / 2 + 1)));
                break;
        }
    }
    return out;
}

IrrepVector act_dual(Gen g, const IrrepVector& v) {
    IrrepVector out(v.d);
    for (auto& [m, x] : v.c) {
        switch (g) {
            case Gen::K: out.add(m, x * RatQ::monomial(1, m)); break;
            case Gen::Kinv: out.add(m, x * RatQ::monomial(1, -m)); break;
            case Gen::E:
                if (m + 2 <= v.d) out.add(m + 2, x * RatQ(q_int((v.d - m) / 2)));
                break;
            case Gen::F:
                if (m - 2 >= -v.d) out.add(m - 2, x * RatQ(q_int((v.d + m) / 2)));
                break;
        }
    }
    return out;
}

RatQ pairing(const IrrepVector& u, const IrrepVector& v) {
    if (u.d != v.d) throw std::invalid_argument("pairing: modules differ");
    RatQ s;
    for (auto& [m, x] : u.c) {
        auto it = v.c.find(m);
        if (it == v.c.end()) continue;
        s += x * it->second * RatQ(q_binomial(u.d, (u.d - m) / 2));
    }
    return s;
}

IrrepVector from_dual(const IrrepVector& v) {
    IrrepVector out(v.d);
    for (auto& [m, x] : v.c)
        out.add(m, x / RatQ(q_binomial(v.d, (v.d - m) / 2)));
    return out;
}

IrrepVector to_dual(const IrrepVector& v) {
    IrrepVector out(v.d);
    for (auto& [m, x] : v.c)
        out.add(m, x * RatQ(q_binomial(v.d, (v.d - m) / 2)));
    return out;
}

GeneratorWord omega(const GeneratorWord& w) {
    GeneratorWord r;
    r.scalar = w.scalar;
    for (auto it = w.syms.rbegin(); it != w.syms.rend(); ++it) {
        switch (*it) {
            case Gen::E: r.syms.push_back(Gen::F); break;
            case Gen::F: r.syms.push_back(Gen::E); break;
            default: r.syms.push_back(*it); break;
        }
    }
    return r;
}

GeneratorWord sigma(const GeneratorWord& w) {
    GeneratorWord r;
    r.scalar = w.scalar.bar();
    for (Gen g : w.syms) {
        switch (g) {
            case Gen::K: r.syms.push_back(Gen::Kinv); break;
            case Gen::Kinv: r.syms.push_back(Gen::K); break;
            default: r.syms.push_back(g); break;
        }
    }
    return r;
}

IrrepVector act_word(const GeneratorWord& w, const IrrepVector& v) {
    IrrepVector cur = v;
    for (auto it = w.syms.rbegin(); it != w.syms.rend(); ++it) cur = act(*it, cur);
    return cur * w.scalar;
}

IrrepVector act_word_dual(const GeneratorWord& w, const IrrepVector& v) {
    IrrepVector cur = v;
    for (auto it = w.syms.rbegin(); it != w.syms.rend(); ++it) cur = act_dual(*it, cur);
    return cur * w.scalar;
}

}  // namespace qtl
