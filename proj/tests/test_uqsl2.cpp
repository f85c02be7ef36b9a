#include <doctest.h>

#include "qtl/laurent.hpp"
#include "qtl/uqsl2.hpp"

using namespace qtl;

namespace {

RatQ qpow(int e) { return RatQ::monomial(1, e); }

// (EF - FE) v  vs  (K - K^{-1})/(q - q^{-1}) v
bool commutator_relation(int d, int m) {
    IrrepVector v = IrrepVector::basis(d, m);
    IrrepVector lhs = act(Gen::E, act(Gen::F, v));
    lhs += act(Gen::F, act(Gen::E, v)) * RatQ(-1);
    RatQ h = (qpow(m) - qpow(-m)) / (qpow(1) - qpow(-1));
    return lhs == v * h;
}

}  // namespace

TEST_CASE("defining relations on V_d, d <= 8") {
    for (int d = 0; d <= 8; ++d) {
        for (int m = -d; m <= d; m += 2) {
            IrrepVector v = IrrepVector::basis(d, m);
            CHECK(act(Gen::K, act(Gen::Kinv, v)) == v);
            CHECK(act(Gen::K, act(Gen::E, v)) == act(Gen::E, act(Gen::K, v)) * qpow(2));
            CHECK(act(Gen::K, act(Gen::F, v)) == act(Gen::F, act(Gen::K, v)) * qpow(-2));
            CHECK(commutator_relation(d, m));
        }
    }
}

TEST_CASE("weight action formulas") {
    CHECK(act(Gen::E, IrrepVector::basis(3, 3)).is_zero());
    CHECK(act(Gen::F, IrrepVector::basis(3, -3)).is_zero());
    CHECK(act(Gen::E, IrrepVector::basis(2, 0)) == IrrepVector::basis(2, 2) * RatQ(q_int(2)));
    CHECK(act(Gen::K, IrrepVector::basis(5, 3)) == IrrepVector::basis(5, 3) * qpow(3));
}

TEST_CASE("pairing values and symmetry") {
    CHECK(pairing(IrrepVector::basis(4, 4), IrrepVector::basis(4, 4)) == RatQ(1));
    CHECK(pairing(IrrepVector::basis(4, 4), IrrepVector::basis(4, 2)).is_zero());
    CHECK(pairing(IrrepVector::basis(2, 0), IrrepVector::basis(2, 0)) == RatQ(q_int(2)));
    CHECK_THROWS_AS(pairing(IrrepVector::basis(2, 0), IrrepVector::basis(4, 0)),
                    std::invalid_argument);
}

TEST_CASE("adjointness of the pairing under the Cartan involution") {
    // <x u, v> = <u, omega(x) v> for words of length <= 3 on V_d, d <= 6.
    std::vector<GeneratorWord> words;
    std::vector<Gen> gens{Gen::E, Gen::F, Gen::K, Gen::Kinv};
    for (Gen a : gens) {
        words.push_back({{a}, RatQ(1)});
        for (Gen b : gens) {
            words.push_back({{a, b}, RatQ(1)});
            words.push_back({{a, b, Gen::E}, RatQ(1)});
        }
    }
    for (int d = 0; d <= 6; d += 2) {
        for (auto& x : words) {
            GeneratorWord wx = omega(x);
            for (int mu = -d; mu <= d; mu += 2)
                for (int mv = -d; mv <= d; mv += 2) {
                    IrrepVector u = IrrepVector::basis(d, mu), v = IrrepVector::basis(d, mv);
                    CHECK(pairing(act_word(x, u), v) == pairing(u, act_word(wx, v)));
                }
        }
    }
}

TEST_CASE("dual basis conversion") {
    CHECK(from_dual(IrrepVector::basis(4, 4)) == IrrepVector::basis(4, 4));
    CHECK(from_dual(IrrepVector::basis(2, 0)) ==
          IrrepVector::basis(2, 0) * RatQ(q_int(2)).inverse());
    for (int d = 0; d <= 5; ++d)
        for (int m = -d; m <= d; m += 2) {
            IrrepVector v = IrrepVector::basis(d, m) * RatQ(q_int(2));
            CHECK(from_dual(to_dual(v)) == v);
            CHECK(to_dual(from_dual(v)) == v);
        }
}

TEST_CASE("dual action formula") {
    // E v^m = [(d-m)/2] v^{m+2}; check against conjugating by the conversion.
    for (int d = 1; d <= 6; ++d)
        for (int m = -d; m <= d; m += 2)
            for (Gen g : {Gen::E, Gen::F, Gen::K}) {
                IrrepVector dual = IrrepVector::basis(d, m);
                CHECK(act_dual(g, dual) == to_dual(act(g, from_dual(dual))));
            }
    CHECK(act_dual(Gen::E, IrrepVector::basis(3, 1)) ==
          IrrepVector::basis(3, 3) * RatQ(q_int(1)));
}

TEST_CASE("involutions on generator words") {
    GeneratorWord ef{{Gen::E, Gen::F}, RatQ(1)};
    CHECK(omega(ef) == ef);  // omega(EF) = omega(F) omega(E) = EF
    GeneratorWord qk{{Gen::K}, qpow(1)};
    CHECK(sigma(qk) == GeneratorWord{{Gen::Kinv}, qpow(-1)});
    GeneratorWord k{{Gen::K}, RatQ(1)};
    CHECK(omega(k) == k);
    // Both are involutions.
    GeneratorWord w{{Gen::E, Gen::K, Gen::F, Gen::Kinv}, qpow(3)};
    CHECK(omega(omega(w)) == w);
    CHECK(sigma(sigma(w)) == w);
}
