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
#include "hlf/embedding.hpp"
#include "hlf/poly1.hpp"

using namespace hlf;

namespace {

Poly1 random_poly(const GaloisRing& R, int deg, std::mt19937_64& rng) {
    Poly1 f(R);
    for (int k = 0; k < deg; ++k) f.c.push_back(R.from_index(rng() % R.residue_order()));
    f.c.push_back(R.one());
    f.trim();
    return f;
}

// No monic factor of degree 1..deg/2, by trying all of them.
bool irreducible_bruteforce(const Poly1& f) {
    const GaloisRing& R = *f.ring;
    const std::uint64_t q = R.residue_order();
    for (int d = 1; 2 * d <= f.degree(); ++d) {
        std::uint64_t count = 1;
        for (int i = 0; i < d; ++i) count *= q;
        for (std::uint64_t code = 0; code < count; ++code) {
            Poly1 g(R);
            std::uint64_t x = code;
            for (int i = 0; i < d; ++i) {
                g.c.push_back(R.from_index(x % q));
                x /= q;
            }
            g.c.push_back(R.one());
            if ((f % g).is_zero()) return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("polynomial arithmetic") {
    const auto& R = GaloisRing::field(5, 1);
    std::mt19937_64 rng(31);
    for (int it = 0; it < 50; ++it) {
        Poly1 a = random_poly(R, 1 + rng() % 6, rng), b = random_poly(R, 1 + rng() % 4, rng);
        auto [q, r] = divmod(a, b);
        CHECK(q * b + r == a);
        CHECK(r.degree() < b.degree());
        Poly1 g = gcd(a * b, b * b);
        CHECK((g % b.monic()).is_zero());
        CHECK(((b * b) % g).is_zero());
        CHECK(((a * b) % g).is_zero());
        CHECK((a * b).derivative() == a.derivative() * b + a * b.derivative());
    }
}

TEST_CASE("factorization") {
    std::mt19937_64 rng(32);
    for (auto [p, n] : {std::pair{2, 1}, {3, 1}, {5, 1}, {2, 2}, {3, 2}, {2, 3}}) {
        const auto& R = GaloisRing::field(p, n);
        for (int it = 0; it < 25; ++it) {
            Poly1 f = random_poly(R, 1 + rng() % 6, rng);
            if (it % 5 == 0) f = f * f * random_poly(R, 1 + rng() % 2, rng);
            if (it % 7 == 0) {
                Poly1 g = random_poly(R, 1, rng);
                Poly1 gp = Poly1::constant(R, R.one());
                for (int k = 0; k < p; ++k) gp = gp * g;
                f = f * gp;
            }
            auto fs = factor(f);
            Poly1 prod = Poly1::constant(R, R.one());
            for (const auto& [g, m] : fs) {
                CHECK(g.lead() == R.one());
                if (R.residue_order() <= 9) CHECK(irreducible_bruteforce(g));
                for (int k = 0; k < m; ++k) prod = prod * g;
            }
            CHECK(prod == f);
            // Roots against evaluation at every field element.
            std::vector<Elem> brute;
            for (std::uint64_t i = 0; i < R.residue_order(); ++i)
                if (R.is_zero(f.eval(R.from_index(i)))) brute.push_back(R.from_index(i));
            CHECK(roots(f) == brute);
        }
    }
    const auto& F2 = GaloisRing::field(2, 1);
    Poly1 x4x1(F2, {F2.one(), F2.one(), F2.zero(), F2.zero(), F2.one()});
    CHECK(is_irreducible(x4x1));
    CHECK_FALSE(is_irreducible(x4x1 * Poly1::x(F2)));
}

TEST_CASE("field embeddings") {
    for (auto [p, a, b] : {std::tuple{2, 1, 4}, {2, 2, 4}, {3, 1, 2}, {3, 2, 4}, {5, 1, 3}, {2, 3, 6}}) {
        const auto& S = GaloisRing::field(p, a);
        const auto& B = GaloisRing::field(p, b);
        const auto& e = embedding(S, B);
        for (std::uint64_t i = 0; i < S.residue_order(); ++i)
            for (std::uint64_t j = 0; j < S.residue_order(); j += 3) {
                Elem x = S.from_index(i), y = S.from_index(j);
                CHECK(e.map(S.mul(x, y)) == B.mul(e.map(x), e.map(y)));
                CHECK(e.map(S.add(x, y)) == B.add(e.map(x), e.map(y)));
                CHECK(e.preimage(e.map(x)) == x);
            }
        std::mt19937_64 rng(33);
        for (int it = 0; it < 20; ++it) {
            Elem z = B.from_index(rng() % B.residue_order());
            // Norm and trace against explicit conjugates.
            Elem prod = B.one(), sum = B.zero(), c = z;
            for (int k = 0; k < b / a; ++k) {
                prod = B.mul(prod, c);
                sum = B.add(sum, c);
                c = B.pow(c, S.residue_order());
            }
            CHECK(e.map(e.norm(z)) == prod);
            CHECK(e.map(e.trace(z)) == sum);
        }
    }
    // Tower compatibility relative to F_4.
    const auto& F4 = GaloisRing::field(2, 2);
    const auto& F16 = GaloisRing::field(2, 4);
    const auto& F256 = GaloisRing::field(2, 8);
    const auto& mid = embedding(F16, F256, &F4);
    for (std::uint64_t i = 0; i < 4; ++i) {
        Elem x = F4.from_index(i);
        CHECK(mid.map(embedding(F4, F16).map(x)) == embedding(F4, F256).map(x));
    }
    CHECK_THROWS_AS(embedding(F16, GaloisRing::field(2, 6)), InputError);
}
