#include <doctest.h>

#include <random>

#include "qtl/laurent.hpp"
#include "qtl/tensor.hpp"

using namespace qtl;

namespace {

RatQ qpow(int e) { return RatQ::monomial(1, e); }

TensorVector act_n(Gen g, const TensorVector& v, Coproduct cop, TBasis b = TBasis::Standard) {
    return act_tensor(g, v, cop, b);
}

std::mt19937 rng(7);

TensorVector random_vector(const Comp& shape) {
    TensorVector v(shape);
    std::uniform_int_distribution<int> c(-3, 3), e(-2, 2);
    for (auto& w : all_indices(shape))
        if (c(rng) > 0) v.add(w, RatQ::monomial(c(rng), e(rng)));
    return v;
}

}  // namespace

TEST_CASE("prefix order") {
    CHECK(prefix_leq({0, 1}, {1, 0}));
    CHECK(prefix_leq({1, 0}, {1, 0}));
    CHECK(!prefix_leq({1, 0}, {0, 1}));
    CHECK(!prefix_lt({1, 0}, {1, 0}));
    // Antisymmetry on compositions of equal total.
    Comp bound{2, 2, 2};
    for_each_bounded(bound, [&](const Comp& a) {
        for_each_bounded(bound, [&](const Comp& b) {
            if (total(a) == total(b) && prefix_leq(a, b) && prefix_leq(b, a)) CHECK(a == b);
        });
    });
}

TEST_CASE("coproduct expansions on V_1 x V_1") {
    Comp shape{1, 1};
    TensorVector top = TensorVector::basis(shape, {0, 0});
    CHECK(act_n(Gen::E, top, Coproduct::Delta).is_zero());
    // Delta F: v1 x v1 -> q^{-1} v_{-1} x v1 + v1 x v_{-1}.
    TensorVector expect(shape);
    expect.add({1, 0}, qpow(-1));
    expect.add({0, 1}, RatQ(1));
    CHECK(act_n(Gen::F, top, Coproduct::Delta) == expect);
    // barDelta F puts the K on the right factor instead.
    TensorVector expect2(shape);
    expect2.add({1, 0}, qpow(1));
    expect2.add({0, 1}, RatQ(1));
    CHECK(act_n(Gen::F, top, Coproduct::BarDelta) == expect2);
    // K eigenvalue q^{|d| - 2|w|}.
    TensorVector low = TensorVector::basis(shape, {1, 0});
    CHECK(act_n(Gen::K, low, Coproduct::Delta) == low * qpow(0));
    CHECK(act_n(Gen::K, top, Coproduct::Delta) == top * qpow(2));
}

TEST_CASE("defining relations through the coproduct") {
    for (const Comp& shape : {Comp{1, 1}, Comp{2, 1}, Comp{1, 1, 1}, Comp{2, 2, 2}, Comp{3, 2}}) {
        for (auto cop : {Coproduct::Delta, Coproduct::BarDelta}) {
            for (auto& w : all_indices(shape)) {
                TensorVector v = TensorVector::basis(shape, w);
                CHECK(act_n(Gen::K, act_n(Gen::Kinv, v, cop), cop) == v);
                CHECK(act_n(Gen::K, act_n(Gen::E, v, cop), cop) ==
                      act_n(Gen::E, act_n(Gen::K, v, cop), cop) * qpow(2));
                CHECK(act_n(Gen::K, act_n(Gen::F, v, cop), cop) ==
                      act_n(Gen::F, act_n(Gen::K, v, cop), cop) * qpow(-2));
                TensorVector lhs = act_n(Gen::E, act_n(Gen::F, v, cop), cop);
                lhs += act_n(Gen::F, act_n(Gen::E, v, cop), cop) * RatQ(-1);
                TensorVector rhs =
                    (act_n(Gen::K, v, cop) - act_n(Gen::Kinv, v, cop)) *
                    (qpow(1) - qpow(-1)).inverse();
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("pairing of a tensor space with its reverse") {
    Comp shape{1, 1};
    TensorVector u = TensorVector::basis(shape, {0, 1});
    CHECK(pair_reversed(u, TensorVector::basis(shape, {1, 0})) == RatQ(1));
    CHECK(pair_reversed(u, TensorVector::basis(shape, {0, 1})).is_zero());
    CHECK_THROWS_AS(pair_reversed(TensorVector::basis({2, 1}, {0, 0}),
                                  TensorVector::basis({2, 1}, {0, 0})),
                    std::invalid_argument);
}

TEST_CASE("adjointness of Delta against barDelta of the Cartan image") {
    // <Delta(x) u, v> = <u, barDelta(omega(x)) v> with the right side acting
    // in dual coordinates on the reversed space.
    for (const Comp& shape : {Comp{1, 1}, Comp{2, 1}, Comp{1, 1, 1}}) {
        Comp rshape = reversed(shape);
        std::vector<std::pair<Gen, Gen>> pairs{
            {Gen::E, Gen::F}, {Gen::F, Gen::E}, {Gen::K, Gen::K}, {Gen::Kinv, Gen::Kinv}};
        for (auto& [x, wx] : pairs)
            for (auto& a : all_indices(shape))
                for (auto& b : all_indices(rshape)) {
                    TensorVector u = TensorVector::basis(shape, a);
                    TensorVector v = TensorVector::basis(rshape, b);
                    CHECK(pair_reversed(act_n(x, u, Coproduct::Delta), v) ==
                          pair_reversed(u, act_n(wx, v, Coproduct::BarDelta, TBasis::Dual)));
                }
    }
}

TEST_CASE("sigma and reversal") {
    Comp shape{1, 1};
    TensorVector v = TensorVector::basis(shape, {0, 0}) * qpow(1);
    CHECK(sigma_tensor(v) == TensorVector::basis(shape, {0, 0}) * qpow(-1));
    for (const Comp& shape2 : {Comp{2, 1}, Comp{1, 2, 1}}) {
        TensorVector r = random_vector(shape2);
        CHECK(reverse_tensor(reverse_tensor(r)) == r);
        CHECK(sigma_tensor(sigma_tensor(r)) == r);
    }
    // sigma(Delta(x) v) = barDelta(x) sigma(v) for the generators: sigma twists
    // Delta into barDelta.
    for (Gen g : {Gen::E, Gen::F, Gen::K}) {
        Gen gbar = g == Gen::K ? Gen::Kinv : g;
        for (auto& w : all_indices(shape)) {
            TensorVector v = TensorVector::basis(shape, w) * qpow(1);
            CHECK(sigma_tensor(act_n(g, v, Coproduct::Delta)) ==
                  act_n(gbar, sigma_tensor(v), Coproduct::BarDelta));
        }
    }
}

TEST_CASE("range actions compose to the full coproduct") {
    Comp shape{1, 2, 1};
    for (auto& w : all_indices(shape)) {
        TensorVector v = TensorVector::basis(shape, w);
        // Delta(E) = E_{[0,2)} x 1 + K_{[0,2)} x E_{[2,3)} as block operators.
        TensorVector a = act_tensor_range(Gen::E, v, 0, 2, Coproduct::Delta);
        TensorVector b = act_tensor_range(Gen::K, act_tensor_range(Gen::E, v, 2, 3, Coproduct::Delta),
                                          0, 2, Coproduct::Delta);
        CHECK(a + b == act_n(Gen::E, v, Coproduct::Delta));
    }
}
