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
#include "hlf/forms.hpp"
#include "test_util.hpp"

using namespace hlf;
using hlf::testing::agree;
using hlf::testing::random_series;

namespace {

Laurent2 mono(const GaloisRing& R, std::int64_t c, int i, int j) { return Laurent2::monomial(R, R.from_int(c), i, j); }

}  // namespace

TEST_CASE("dlog wedge") {
    const auto& R = GaloisRing::field(5, 1);
    Laurent2 t1 = mono(R, 1, 1, 0), t2 = mono(R, 1, 0, 1);
    CHECK(agree(dlog_wedge(t1, t2).density, mono(R, 1, -1, -1)));
    CHECK(agree(dlog_wedge(t2, t1).density, mono(R, -1, -1, -1)));
    std::mt19937_64 rng(21);
    for (int it = 0; it < 10; ++it) {
        Laurent2 f = random_series(R, rng, 0, 3, 0, 6);
        CHECK(dlog_wedge(f, f).density.is_zero_on_window());
        // Multiplicative in the first slot.
        Laurent2 g = random_series(R, rng, -1, 3, 1, 6), h = random_series(R, rng, 1, 3, -2, 6);
        CHECK(agree(dlog_wedge(f * g, h).density, dlog_wedge(f, h).density + dlog_wedge(g, h).density));
    }
}

TEST_CASE("residue") {
    const auto& R = GaloisRing::field(5, 1);
    TwoForm w{mono(R, 2, -1, -1) + mono(R, 1, 1, -1) + mono(R, 4, -1, 0)};
    CHECK(residue(w) == R.from_int(2));
    const auto& G = GaloisRing::get(5, 1, 2);
    Elem ta = G.teichmuller(R.from_int(3));
    Laurent2 t1 = mono(G, 1, 1, 0), t2 = mono(G, 1, 0, 1);
    CHECK(residue({dlog_wedge(t1, t2).density.scaled(ta)}) == ta);
    CHECK_THROWS_AS(residue({Laurent2::zero(R, -1)}), InsufficientPrecision);

    std::mt19937_64 rng(22);
    for (auto* F : {&R, &GaloisRing::field(2, 2), &GaloisRing::get(3, 2, 2)}) {
        for (int it = 0; it < 30; ++it) {
            TwoForm integral{random_series(*F, rng, 0, 4, 0, 6, false)};
            CHECK(residue(integral) == F->zero());
            TwoForm a{random_series(*F, rng, -2, 4, -3, 6, false)}, b{random_series(*F, rng, -1, 3, -2, 6, false)};
            CHECK(residue(a + b) == F->add(residue(a), residue(b)));
            Laurent2 d1 = ls2_derivative(random_series(*F, rng, -2, 4, -3, 6, false), 1);
            CHECK(residue({d1}) == F->zero());
        }
    }
    // Linearity on the monomial basis near (-1, -1).
    for (int i = -2; i <= 0; ++i)
        for (int j = -2; j <= 0; ++j)
            for (int k = -2; k <= 0; ++k)
                for (int l = -2; l <= 0; ++l) {
                    Elem lhs = residue({mono(R, 2, i, j) + mono(R, 3, k, l)});
                    std::int64_t expect = (i == -1 && j == -1 ? 2 : 0) + (k == -1 && l == -1 ? 3 : 0);
                    CHECK(lhs == R.from_int(expect));
                }
}

TEST_CASE("residue is invariant under parameter changes") {
    const auto& R = GaloisRing::field(5, 1);
    Window win{24, 10};
    Laurent2 t1 = mono(R, 1, 1, 0), t2 = mono(R, 1, 0, 1), one = Laurent2::constant(R, R.one());
    TwoForm w0{mono(R, 1, -1, -1)};
    CHECK(residue_after_param_change(w0, t1, t2, win) == residue(w0));
    CHECK(residue_after_param_change(w0, t1 * (one + t2), t2, win) == residue(w0));

    std::mt19937_64 rng(23);
    for (const GaloisRing* F : {&R, &GaloisRing::field(2, 2), &GaloisRing::get(3, 1, 2)}) {
        Laurent2 u1 = mono(*F, 1, 1, 0), u2 = mono(*F, 1, 0, 1), o = Laurent2::constant(*F, F->one());
        for (int it = 0; it < 15; ++it) {
            TwoForm w{random_series(*F, rng, -2, 3, -2, 4, false, true)};
            Laurent2 c = hlf::testing::random_integral_unit(*F, rng, 2, 3);
            Laurent2 d = hlf::testing::random_integral_unit(*F, rng, 2, 3);
            Laurent2 s1 = u1 * c;
            Laurent2 s2 = u2 * d;
            CHECK(residue_after_param_change(w, s1, u2, win) == residue(w));
            CHECK(residue_after_param_change(w, u1, s2, win) == residue(w));
            CHECK(residue_after_param_change(w, s1 + u2 * u1, s2 + u2 * u2, win) == residue(w));
            CHECK(residue_after_param_change(w, u1, u2 * (o + u1), win) == residue(w));
        }
    }
    CHECK_THROWS_AS(residue_after_param_change(w0, t1, t2 * t2, win), InvalidParameterChange);
}
