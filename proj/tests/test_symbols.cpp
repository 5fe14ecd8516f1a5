/*
   Copyright 2026 The hlfsym Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "doctest.h"
#include "hlf/mutation.hpp"
#include "hlf/symbols.hpp"
#include "test_util.hpp"

using namespace hlf;
using hlf::testing::random_series;

namespace {

Laurent2 mono(const GaloisRing& R, const Elem& c, int i, int j) { return Laurent2::monomial(R, c, i, j); }
Laurent2 mono(const GaloisRing& R, std::int64_t c, int i, int j) { return mono(R, R.from_int(c), i, j); }

Laurent2 random_exact(const GaloisRing& R, std::mt19937_64& rng) {
    int jlo = static_cast<int>(rng() % 5) - 2, ilo = static_cast<int>(rng() % 5) - 2;
    return random_series(R, rng, jlo, 1 + rng() % 3, ilo, 1 + rng() % 4, true, true);
}

WittSeries constant_witt(const GaloisRing& F, std::vector<Elem> comps) {
    WittSeries g;
    for (auto& c : comps) g.comps.push_back(Laurent2::constant(F, c));
    return g;
}

}  // namespace

TEST_CASE("one-dimensional tame symbol") {
    const auto& R = GaloisRing::field(5, 1);
    Laurent1 t = Laurent1::monomial(R, R.one(), 1), c = Laurent1::monomial(R, R.from_int(2), 0);
    CHECK(tame1(t, c) == R.inv(R.from_int(2)));
    CHECK(tame1(c, t) == R.from_int(2));
    CHECK(tame1(t, t) == R.from_int(-1));
    Laurent1 u = Laurent1::from_coeffs(R, 0, {R.from_int(3), R.one()}), v = Laurent1::from_coeffs(R, 0, {R.from_int(4), R.from_int(2)});
    CHECK(tame1(u, v) == R.one());
}

TEST_CASE("higher tame symbol fixed vectors") {
    const auto& R = GaloisRing::field(5, 1);
    Laurent2 t1 = mono(R, 1, 1, 0), t2 = mono(R, 1, 0, 1), two = mono(R, 2, 0, 0);
    CHECK(tame2_det(t1, t2, two) == R.from_int(2));
    CHECK(tame2_det(t1, t2, t1) == R.from_int(4));
    CHECK(tame2_direct(t1, t2, two) == R.from_int(2));
    CHECK(tame2_direct(t1, t2, t1) == R.from_int(4));
    CHECK(tame2_boundary_oracle(t1, t2, two) == R.from_int(2));
    CHECK(tame2_boundary_oracle(t1, t2, t1) == R.from_int(4));
    Laurent2 u = two + t1, v = mono(R, 3, 0, 0) + t2, w = mono(R, 1, 0, 0) + t1 * t2;
    CHECK(tame2_det(u, v, w) == R.one());
    auto e = tame_exponents(t1, t2, two);
    CHECK(e.b[0] == 0);
    CHECK(e.b[1] == 0);
    CHECK(e.b[2] == 1);
    CHECK(e.sign == 0);
    e = tame_exponents(t1, t2, t1);
    CHECK(e.b[0] == -1);
    CHECK(e.b[2] == 1);
    CHECK(e.sign == 1);
}

TEST_CASE("three forms of the higher tame symbol agree") {
    std::mt19937_64 rng(41);
    for (const GaloisRing* F : {&GaloisRing::field(5, 1), &GaloisRing::field(2, 2), &GaloisRing::field(3, 2)}) {
        for (int it = 0; it < 100; ++it) {
            Laurent2 f = random_exact(*F, rng), g = random_exact(*F, rng), h = random_exact(*F, rng);
            Elem d = tame2_det(f, g, h);
            CHECK(d == tame2_boundary_oracle(f, g, h));
            CHECK(d == tame2_direct(f, g, h));
            // Value is a (q-1)-th root of unity, transpositions invert, multiplicative in each slot.
            CHECK(F->pow(d, F->residue_order() - 1) == F->one());
            CHECK(F->mul(d, tame2_det(g, f, h)) == F->one());
            CHECK(F->mul(d, tame2_det(f, h, g)) == F->one());
            Laurent2 f2 = random_exact(*F, rng);
            CHECK(tame2_det(f * f2, g, h) == F->mul(d, tame2_det(f2, g, h)));
            // Steinberg.
            Laurent2 one_minus = Laurent2::constant(*F, F->one()) - f;
            if (!one_minus.levels.empty()) {
                CHECK(tame2_det(f, one_minus, h) == F->one());
                CHECK(tame2_det(h, f, one_minus) == F->one());
            }
        }
    }
}

TEST_CASE("mutation mode breaks the determinant form") {
    const auto& R = GaloisRing::field(5, 1);
    Laurent2 t1 = mono(R, 1, 1, 0), t2 = mono(R, 1, 0, 1), two = mono(R, 2, 0, 0);
    mutations().tame_sign_flip = true;
    Elem flipped = tame2_det(t1, t2, two);
    mutations().tame_sign_flip = false;
    CHECK(flipped == R.from_int(-2));
    CHECK(tame2_boundary_oracle(t1, t2, two) == R.from_int(2));
}

TEST_CASE("tame symbol on a branch takes the norm") {
    const auto& F5 = GaloisRing::field(5, 1);
    const auto& F25 = GaloisRing::field(5, 2);
    const auto& emb = embedding(F5, F25);
    Laurent2 t1 = mono(F25, 1, 1, 0), t2 = mono(F25, 1, 0, 1);
    Elem w = F25.generator();
    CHECK(tame2_branch(t1, t2, mono(F25, w, 0, 0), emb) == emb.norm(w));
    const auto& F4 = GaloisRing::field(2, 2);
    const auto& F16 = GaloisRing::field(2, 4);
    // An element of F_16 with norm 1 down to F_4.
    const auto& e2 = embedding(F4, F16);
    Elem x = F16.pow(F16.generator(), 4 - 1);
    CHECK(e2.norm(x) == F4.one());
    CHECK(tame2_branch(mono(F16, 1, 1, 0), mono(F16, 1, 0, 1), mono(F16, x, 0, 0), e2) == F4.one());
    CHECK(tame2_branch(mono(F5, 1, 1, 0), mono(F5, 1, 0, 1), mono(F5, 3, 0, 0), embedding(F5, F5)) == F5.from_int(3));
}

TEST_CASE("Witt pairing examples") {
    const auto& F5 = GaloisRing::field(5, 1);
    Laurent2 t1 = mono(F5, 1, 1, 0), t2 = mono(F5, 1, 0, 1);
    CHECK(witt_pair(t1, t2, constant_witt(F5, {F5.from_int(2)})) == witt_from_ints(GaloisRing::field(5, 1), {2}));
    const auto& F4 = GaloisRing::field(2, 2);
    Laurent2 s1 = mono(F4, 1, 1, 0), s2 = mono(F4, 1, 0, 1);
    const auto& F2 = GaloisRing::field(2, 1);
    CHECK(witt_pair(s1, s2, constant_witt(F4, {F4.generator()})) == witt_from_ints(F2, {1}));
    // The Witt-vector trace of (w, 0) is [w] + [w]^2 = -1 in GR(4, 2), i.e. (1, 1) in W_2(F_2).
    CHECK(witt_pair(s1, s2, constant_witt(F4, {F4.generator(), F4.zero()})) == witt_from_ints(F2, {1, 1}));
    CHECK(witt_pair(s1, s2, constant_witt(F4, {F4.one(), F4.zero()})) == witt_from_ints(F2, {0, 1}));
    CHECK(witt_pair(t1, t2, constant_witt(F5, {F5.from_int(3), F5.zero()})) == witt_from_ints(F5, {3, 0}));
    // Integral units and an integral g.
    std::mt19937_64 rng(42);
    for (int it = 0; it < 10; ++it) {
        Laurent2 u = hlf::testing::random_integral_unit(F5, rng, 2, 3), v = hlf::testing::random_integral_unit(F5, rng, 2, 3);
        WittSeries g{{random_series(F5, rng, 0, 2, 0, 3, false, true), random_series(F5, rng, 0, 2, 0, 3, false, true)}};
        CHECK(witt_pair(u, v, g) == WittVector::zero(F5, 2));
    }
    std::vector<WittVector> two{witt_from_ints(F2, {1, 0}), witt_from_ints(F2, {1, 0})};
    CHECK(witt_pair_branch_sum(two) == witt_from_ints(F2, {0, 1}));
    CHECK(witt_pair_branch_sum({witt_from_ints(F2, {1}), witt_from_ints(F2, {1})}) == witt_from_ints(F2, {0}));
    CombinedValue cv = combined(t1, t2, mono(F5, 2, 0, 0), constant_witt(F5, {F5.from_int(2)}));
    CHECK(cv.tame.value == F5.from_int(2));
    CHECK(cv.witt == witt_from_ints(F5, {2}));
}

TEST_CASE("Witt pairing properties on random local data") {
    std::mt19937_64 rng(43);
    for (const GaloisRing* F : {&GaloisRing::field(5, 1), &GaloisRing::field(2, 2)}) {
        const auto& Fp = GaloisRing::field(F->p(), 1);
        for (int it = 0; it < 12; ++it) {
            int m = 1 + it % 3;
            Laurent2 f = random_exact(*F, rng), f2 = random_exact(*F, rng), g = random_exact(*F, rng);
            WittSeries h, h2;
            for (int i = 0; i < m; ++i) {
                h.comps.push_back(random_series(*F, rng, 0, 2, -1, 3, false, true));
                h2.comps.push_back(random_series(*F, rng, 0, 2, -1, 3, false, true));
            }
            auto pair = [](const Laurent2& a, const Laurent2& b, const WittSeries& c, LiftStrategy s = LiftStrategy::Teichmuller) {
                return with_precision_retry([&](Window w) { return witt_pair(a, b, c, w, s); }, {8, 4});
            };
            WittVector base = pair(f, g, h);
            CHECK(pair(f * f2, g, h) == witt_add(base, pair(f2, g, h)));
            CHECK(pair(f, g * f2, h) == witt_add(base, pair(f, f2, h)));
            CHECK(pair(f, g, witt_add(h, h2)) == witt_add(base, pair(f, g, h2)));
            CHECK(pair(g, f, h) == witt_neg(base));
            CHECK(pair(f, Laurent2::constant(*F, F->one()) - f, h) == WittVector::zero(Fp, m));
            CHECK(pair(f, g, witt_frobenius_power(h)) == witt_frobenius_power(base));
            CHECK(pair(f, g, h, LiftStrategy::Naive) == base);
            if (m > 1) {
                CHECK(witt_truncate(base, m - 1) == pair(f, g, witt_truncate(h, m - 1)));
                CHECK(pair(f, g, verschiebung(h)) == verschiebung(base));
            }
        }
    }
}
