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
#include "hlf/series.hpp"
#include "test_util.hpp"

using namespace hlf;
using hlf::testing::agree;
using hlf::testing::random_series;

namespace {

const GaloisRing& F5() { return GaloisRing::field(5, 1); }

Laurent2 mono(const GaloisRing& R, std::int64_t c, int i, int j) { return Laurent2::monomial(R, R.from_int(c), i, j); }

// Every known coefficient of `small` must match `big` (both computed from the same exact data).
bool window_sound(const Laurent2& small, const Laurent2& big) {
    for (std::size_t k = 0; k < small.levels.size(); ++k) {
        int j = small.jlo + static_cast<int>(k);
        const Laurent1& L = small.levels[k];
        int from = L.coeffs.empty() ? -40 : L.lo - 5;
        int to = std::min(L.hi, from + 80);
        for (int i = from; i < to; ++i)
            if (!(L.coeff(i) == big.coeff(i, j))) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("addition") {
    const auto& R = F5();
    Laurent2 f = mono(R, 1, 1, 0) + mono(R, 1, 0, 1);
    Laurent2 g = f + mono(R, -1, 1, 0);
    CHECK(agree(g, mono(R, 1, 0, 1)));
    CHECK(g.is_exact());
    std::mt19937_64 rng(1);
    for (int it = 0; it < 50; ++it) {
        Laurent2 a = random_series(R, rng, -2, 4, -3, 8);
        Laurent2 b = random_series(R, rng, -1, 5, -2, 6);
        Laurent2 back = (a + b) - b;
        CHECK(agree(back, a));
        CHECK(back.jhi == std::min(a.jhi, b.jhi));
        CHECK(agree(a + Laurent2::zero(R), a));
    }
}

TEST_CASE("multiplication and valuation") {
    const auto& R = F5();
    CHECK(agree(mono(R, 1, -1, 1) * mono(R, 1, 1, 2), mono(R, 1, 0, 3)));
    CHECK(ls2_valuation(mono(R, 1, -2, 3) + mono(R, 1, 5, 4)) == Valuation2{-2, 3});
    CHECK(ls2_valuation(Laurent2::constant(R, R.from_int(3))) == Valuation2{0, 0});
    std::mt19937_64 rng(2);
    for (int it = 0; it < 50; ++it) {
        Laurent2 a = random_series(R, rng, -2, 4, -3, 8);
        Laurent2 b = random_series(R, rng, 1, 4, 2, 8);
        Laurent2 c = random_series(R, rng, 0, 3, 0, 5);
        CHECK(agree(a * Laurent2::constant(R, R.one()), a));
        CHECK(ls2_valuation(a * b) == ls2_valuation(a) + ls2_valuation(b));
        CHECK(agree((a * b) * c, a * (b * c)));
        CHECK(agree(a * (b + c), a * b + a * c));
        Valuation2 vs = std::min(ls2_valuation(a), ls2_valuation(b));
        Laurent2 s = a + b;
        if (!s.levels.empty() && !s.levels[0].coeffs.empty()) CHECK(ls2_valuation(s) >= vs);
    }
    const auto& F4 = GaloisRing::field(2, 2);
    for (int it = 0; it < 20; ++it) {
        Laurent2 a = random_series(F4, rng, 0, 3, -1, 6);
        Laurent2 b = random_series(F4, rng, -1, 3, 0, 6);
        Laurent2 c = random_series(F4, rng, 2, 3, 1, 6);
        CHECK(agree((a * b) * c, a * (b * c)));
        CHECK(agree((a + b) * c, a * c + b * c));
    }
}

TEST_CASE("coefficient access respects windows") {
    const auto& R = F5();
    Laurent2 f = mono(R, 2, -1, -1);
    CHECK(ls2_coeff(f, -1, -1) == R.from_int(2));
    CHECK(ls2_coeff(f, 3, 7) == R.zero());
    Laurent2 g = f.truncated(0);
    CHECK_THROWS_AS(ls2_coeff(g, 0, 0), InsufficientPrecision);
    CHECK(ls2_coeff(g, 0, -1) == R.zero());
    std::mt19937_64 rng(3);
    Laurent2 h = random_series(R, rng, 0, 2, 0, 4);
    CHECK_THROWS_AS(ls2_coeff(h, 10, 0), InsufficientPrecision);
}

TEST_CASE("inverse") {
    const auto& R = F5();
    Window w{12, 8};
    // (1 - t2)^-1 = sum t2^k.
    Laurent2 g = ls2_inv(Laurent2::constant(R, R.one()) - mono(R, 1, 0, 1), w);
    CHECK(g.jhi == 8);
    for (int k = 0; k < 8; ++k) CHECK(ls2_coeff(g, 0, k) == R.one());
    // (t1 + t2)^-1 = sum (-1)^k t1^(-k-1) t2^k.
    Laurent2 h = ls2_inv(mono(R, 1, 1, 0) + mono(R, 1, 0, 1), w);
    for (int k = 0; k < 8; ++k) {
        CHECK(ls2_coeff(h, -k - 1, k) == R.from_int(k % 2 == 0 ? 1 : -1));
        CHECK(ls2_coeff(h, -k, k) == R.zero());
    }
    CHECK(agree(h * (mono(R, 1, 1, 0) + mono(R, 1, 0, 1)), Laurent2::constant(R, R.one())));
    // Exact monomials invert exactly.
    CHECK(ls2_inv(mono(R, 3, -2, 5)).is_exact());

    std::mt19937_64 rng(4);
    const auto& F4 = GaloisRing::field(2, 2);
    for (int it = 0; it < 30; ++it) {
        Laurent2 f = random_series(F4, rng, -1, 4, 1, 6);
        Laurent2 fi = ls2_inv(f, w);
        Laurent2 one = f * fi;
        CHECK(agree(one, Laurent2::constant(F4, F4.one())));
        // The comparison covers a real window, not an empty one.
        CHECK(one.jhi >= 4);
        CHECK(one.t1_hi(0) >= 5);
        CHECK(one.t1_hi(3) >= 2);
        CHECK(ls2_valuation(fi) == Valuation2{-1, 1});
    }
    const auto& G = GaloisRing::get(3, 2, 3);
    for (int it = 0; it < 10; ++it) {
        Laurent2 f = random_series(G, rng, 0, 3, 0, 5);
        CHECK(agree(f * ls2_inv(f, w), Laurent2::constant(G, G.one())));
    }
    CHECK_THROWS_AS(ls2_inv(Laurent2::zero(R, 3)), InsufficientPrecision);
    CHECK_THROWS_AS(ls2_valuation(Laurent2::zero(R, 3)), InsufficientPrecision);
}

TEST_CASE("windows are sound: small windows agree with larger ones") {
    const auto& R = GaloisRing::field(3, 2);
    std::mt19937_64 rng(5);
    for (int it = 0; it < 20; ++it) {
        Laurent2 f = random_series(R, rng, -1, 3, -2, 5, true, true);
        Laurent2 g = random_series(R, rng, 0, 3, 1, 5, true, true);
        Laurent2 expr_big = ls2_inv(f, {40, 20}) * g + f * f;
        Laurent2 expr_small = ls2_inv(f.truncated_relative({4, 2}), {6, 3}) * g.truncated_relative({3, 2}) +
                              f.truncated_relative({4, 2}) * f;
        CHECK(window_sound(expr_small, expr_big));
        CHECK(window_sound(ls2_inv(f, {5, 3}), ls2_inv(f, {30, 15})));
    }
}

TEST_CASE("derivatives") {
    const auto& R = F5();
    CHECK(ls2_derivative(mono(R, 1, 5, 0), 1).is_zero_on_window());
    CHECK(agree(ls2_derivative(mono(R, 1, 2, 3), 2), mono(R, 3, 2, 2)));
    std::mt19937_64 rng(6);
    for (int axis : {1, 2})
        for (int it = 0; it < 20; ++it) {
            Laurent2 f = random_series(R, rng, -1, 4, -2, 7);
            Laurent2 g = random_series(R, rng, 0, 4, 1, 7);
            Laurent2 lhs = ls2_derivative(f * g, axis);
            Laurent2 rhs = f * ls2_derivative(g, axis) + g * ls2_derivative(f, axis);
            CHECK(agree(lhs, rhs));
            // No t1^-1 term in a t1-derivative.
            Laurent2 d1 = ls2_derivative(f, 1);
            for (int j = d1.jlo; j < d1.jhi && j < d1.jlo + static_cast<int>(d1.levels.size()); ++j)
                if (d1.t1_hi(j) > -1) CHECK(ls2_coeff(d1, -1, j) == R.zero());
        }
}

TEST_CASE("substitution") {
    const auto& R = F5();
    Window w{16, 8};
    Laurent2 t1 = mono(R, 1, 1, 0), t2 = mono(R, 1, 0, 1);
    std::mt19937_64 rng(7);
    Laurent2 f = random_series(R, rng, -1, 3, -2, 6);
    CHECK(agree(ls2_substitute(f, t1, t2, w), f));

    Laurent2 s1 = t1 + mono(R, 1, 2, 0);
    Laurent2 inv_t1 = mono(R, 1, -1, 0);
    Laurent2 r = ls2_substitute(inv_t1, s1, t2, w);
    CHECK(agree(r * s1, Laurent2::constant(R, R.one())));
    CHECK(ls2_coeff(r, -1, 0) == R.one());
    CHECK(ls2_coeff(r, 0, 0) == R.from_int(-1));
    CHECK(ls2_coeff(r, 1, 0) == R.one());

    Laurent2 u = Laurent2::constant(R, R.from_int(3)) + mono(R, 1, 1, 0);
    for (int it = 0; it < 10; ++it) {
        Laurent2 g = random_series(R, rng, -1, 3, -2, 6);
        CHECK(ls2_valuation(ls2_substitute(g, t1, u * t2, w)) == ls2_valuation(g));
        // Substitution is a ring map.
        Laurent2 h = random_series(R, rng, 0, 3, 0, 6);
        Laurent2 a1 = t1 * (Laurent2::constant(R, R.one()) + t2);
        Laurent2 a2 = t2 * u;
        CHECK(agree(ls2_substitute(g * h, a1, a2, w), ls2_substitute(g, a1, a2, w) * ls2_substitute(h, a1, a2, w)));
    }
    CHECK_THROWS_AS(ls2_substitute(f, t2, t2, w), InvalidParameterChange);
    CHECK_THROWS_AS(ls2_substitute(f, t1, t1, w), InvalidParameterChange);
}

TEST_CASE("precision retry doubles windows") {
    int calls = 0;
    int got = with_precision_retry([&](Window w) {
        ++calls;
        if (w.t1_terms < 128) throw InsufficientPrecision("more");
        return w.t1_terms;
    });
    CHECK(got == 128);
    CHECK(calls == 3);
    CHECK_THROWS_AS(with_precision_retry([](Window) -> int { throw InsufficientPrecision("never"); }),
                    InsufficientPrecision);
}
