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

#include <random>

#include "doctest.h"
#include "hlf/galois_ring.hpp"

using namespace hlf;

namespace {

// Remainder of a by b over GF(2), polynomials as bit masks.
unsigned gf2_rem(unsigned a, unsigned b) {
    int db = 31 - __builtin_clz(b);
    while (a != 0 && 31 - __builtin_clz(a) >= db) a ^= b << ((31 - __builtin_clz(a)) - db);
    return a;
}

// Exhaustive: f has no factor of degree 1..deg/2.
bool gf2_irreducible_bruteforce(unsigned f) {
    int d = 31 - __builtin_clz(f);
    for (int k = 1; k <= d / 2; ++k)
        for (unsigned g = 1u << k; g < (2u << k); ++g)
            if (gf2_rem(f, g) == 0) return false;
    return true;
}

// a^e by repeated multiplication.
Elem slow_pow(const GaloisRing& R, const Elem& a, std::uint64_t e) {
    Elem r = R.one();
    for (std::uint64_t i = 0; i < e; ++i) r = R.mul(r, a);
    return r;
}

}  // namespace

TEST_CASE("gf_make picks the smallest irreducible modulus") {
    CHECK(gf_make(5, 1).modulus() == std::vector<std::int64_t>{0, 1});
    CHECK(gf_make(2, 2).modulus() == std::vector<std::int64_t>{1, 1, 1});
    CHECK(gf_make(3, 2).modulus() == std::vector<std::int64_t>{1, 0, 1});

    const auto& m = gf_make(2, 4).modulus();
    REQUIRE(m.size() == 5);
    unsigned mask = 0;
    for (int i = 0; i < 5; ++i) mask |= static_cast<unsigned>(m[i]) << i;
    CHECK(gf2_irreducible_bruteforce(mask));
    // Nothing smaller in the top-down order is irreducible.
    for (unsigned cand = 16; cand < mask; ++cand) CHECK_FALSE(gf2_irreducible_bruteforce(cand));

    CHECK_THROWS_AS(gf_make(4, 1), InputError);
    CHECK_THROWS_AS(gf_make(3, 9), InputError);
    CHECK_THROWS_AS(gf_make(3, 0), InputError);
    CHECK(&gf_make(3, 2) == &gf_make(3, 2));
}

TEST_CASE("trace and norm examples") {
    const auto& F4 = gf_make(2, 2);
    FqElem w{F4, F4.generator()};
    CHECK(gf_trace(FqElem{F4, F4.zero()}).value.c[0] == 0);
    CHECK(gf_trace(w).value.c[0] == 1);
    CHECK(gf_norm(w).value.c[0] == 1);
    CHECK(gf_norm(FqElem{F4, F4.one()}).value.c[0] == 1);

    const auto& F5 = gf_make(5, 1);
    CHECK(gf_trace(FqElem{F5, F5.from_int(3)}).value.c[0] == 3);

    // F_9: conjugate product of i computed by repeated multiplication.
    const auto& F9 = gf_make(3, 2);
    Elem i = F9.generator();
    Elem conj = slow_pow(F9, i, 3);
    Elem oracle = F9.mul(i, conj);
    CHECK(oracle == F9.one());
    CHECK(gf_norm(FqElem{F9, i}).value.c[0] == oracle.c[0]);
}

TEST_CASE("trace and norm are additive / multiplicative, Frobenius has order n") {
    for (auto [p, n] : {std::pair{2, 2}, {2, 3}, {3, 2}, {2, 4}, {3, 4}, {5, 2}, {3, 3}, {7, 2}}) {
        const auto& F = gf_make(p, n);
        std::uint64_t q = F.residue_order();
        if (q > 81) continue;
        for (std::uint64_t ia = 0; ia < q; ++ia) {
            Elem a = F.from_index(ia);
            // Trace against the explicit sum of conjugates.
            Elem s = F.zero(), c = a, prod = F.one();
            for (int k = 0; k < n; ++k) {
                s = F.add(s, c);
                prod = F.mul(prod, c);
                c = slow_pow(F, c, p);
            }
            CHECK(c == a);
            CHECK(s == F.from_int(F.trace(a)));
            CHECK(prod == F.from_int(F.norm_to_prime(a)));
            for (std::uint64_t ib = 0; ib < q; ++ib) {
                Elem b = F.from_index(ib);
                CHECK(F.trace(F.add(a, b)) == (F.trace(a) + F.trace(b)) % p);
                CHECK(F.norm_to_prime(F.mul(a, b)) == F.norm_to_prime(a) * F.norm_to_prime(b) % p);
                CHECK(F.frobenius(F.mul(a, b)) == F.mul(F.frobenius(a), F.frobenius(b)));
                CHECK(F.frobenius(F.add(a, b)) == F.add(F.frobenius(a), F.frobenius(b)));
            }
        }
    }
}

TEST_CASE("Teichmuller lifts") {
    for (auto [p, n] : {std::pair{2, 1}, {2, 2}, {3, 2}, {5, 1}, {2, 3}}) {
        const auto& F = gf_make(p, n);
        for (int N = 1; N <= 6; ++N) {
            const auto& R = F.with_precision(N);
            for (std::uint64_t ia = 0; ia < F.residue_order(); ++ia) {
                FqElem a{F, F.from_index(ia)};
                GrElem t = gr_teichmuller(a, N);
                CHECK(R.reduce(t.value) == a.value);
                CHECK(R.pow(t.value, F.residue_order()) == t.value);
            }
        }
    }
    const auto& F2 = gf_make(2, 1);
    CHECK(gr_teichmuller(FqElem{F2, F2.one()}, 3).value == GaloisRing::get(2, 1, 3).one());
    const auto& F4 = gf_make(2, 2);
    GrElem tw = gr_teichmuller(FqElem{F4, F4.generator()}, 2);
    // X^2 + X + 1 = 0 in (Z/4)[X]: X^3 = 1, so X is its own Teichmuller lift.
    CHECK(tw.value == GaloisRing::get(2, 2, 2).generator());
}

TEST_CASE("Galois ring trace and Frobenius") {
    const auto& R = GaloisRing::get(2, 2, 2);
    CHECK(gr_trace(GrElem{R, R.one()}).value.c[0] == 2);
    const auto& F4 = gf_make(2, 2);
    GrElem t = gr_teichmuller(FqElem{F4, F4.generator()}, 2);
    GrElem t2 = gr_teichmuller(FqElem{F4, F4.mul(F4.generator(), F4.generator())}, 2);
    CHECK(gr_trace(t).value.c[0] == R.add(t.value, t2.value).c[0]);
    CHECK(R.add(t.value, t2.value).c[1] == 0);
    CHECK(gr_trace(t).value.c[0] % 2 == 1);

    for (auto [p, n, N] : {std::tuple{2, 2, 3}, {3, 2, 2}, {2, 3, 4}, {5, 2, 2}}) {
        const auto& G = GaloisRing::get(p, n, N);
        const auto& F = G.residue_field();
        std::mt19937_64 rng(p * 100 + n * 10 + N);
        for (std::uint64_t ia = 0; ia < F.residue_order(); ++ia) {
            Elem tl = G.teichmuller(F.from_index(ia));
            CHECK(G.frobenius(tl) == G.pow(tl, p));
        }
        for (int it = 0; it < 200; ++it) {
            Elem a, b;
            for (int i = 0; i < n; ++i) {
                a.c[i] = rng() % G.characteristic_power();
                b.c[i] = rng() % G.characteristic_power();
            }
            CHECK(F.add(G.reduce(a), G.reduce(b)) == G.reduce(G.add(a, b)));
            CHECK(F.mul(G.reduce(a), G.reduce(b)) == G.reduce(G.mul(a, b)));
            CHECK(F.trace(G.reduce(a)) == G.trace(a) % p);
            CHECK(G.trace(G.scale(a, p)) == G.mod(p * G.trace(a)));
            CHECK(G.frobenius(G.mul(a, b)) == G.mul(G.frobenius(a), G.frobenius(b)));
            CHECK(G.frobenius_power(a, n) == a);
            if (G.is_unit(a)) CHECK(G.mul(a, G.inv(a)) == G.one());
        }
    }
    CHECK_THROWS_AS(R.inv(R.from_int(2)), NotInvertible);
}
