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

/**
 * @file poly1.hpp
 * @brief Univariate polynomials over a finite field, with factorization.
 *
 * Factorization is square-free decomposition followed by distinct-degree and
 * Cantor-Zassenhaus equal-degree splitting. The splitting uses a fixed seed so
 * results are reproducible; factors are returned monic and sorted.
 */

#ifndef HLF_POLY1_HPP
#define HLF_POLY1_HPP

#include <string>
#include <utility>
#include <vector>

#include "hlf/galois_ring.hpp"

namespace hlf {

struct Poly1 {
    RingRef ring = nullptr;
    std::vector<Elem> c;  // low degree first, no trailing zeros

    Poly1() = default;
    explicit Poly1(const GaloisRing& r) : ring(&r) {}
    Poly1(const GaloisRing& r, std::vector<Elem> coeffs) : ring(&r), c(std::move(coeffs)) { trim(); }

    static Poly1 constant(const GaloisRing& r, const Elem& a) { return Poly1(r, {a}); }
    static Poly1 x(const GaloisRing& r) { return Poly1(r, {r.zero(), r.one()}); }
    /// x - a.
    static Poly1 linear(const GaloisRing& r, const Elem& a) { return Poly1(r, {r.neg(a), r.one()}); }

    int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c.empty(); }
    bool is_one() const { return c.size() == 1 && ring->is_one(c[0]); }
    Elem lead() const { return c.empty() ? ring->zero() : c.back(); }
    Elem coeff(int k) const { return k < static_cast<int>(c.size()) && k >= 0 ? c[k] : ring->zero(); }
    void trim();

    Elem eval(const Elem& a) const;
    Poly1 monic() const;
    Poly1 derivative() const;
    Poly1 scaled(const Elem& a) const;

    friend Poly1 operator+(const Poly1& a, const Poly1& b);
    friend Poly1 operator-(const Poly1& a, const Poly1& b);
    friend Poly1 operator*(const Poly1& a, const Poly1& b);
    friend bool operator==(const Poly1& a, const Poly1& b) { return a.c == b.c; }
    /// Ordering used for sorting factor lists: degree, then coefficients from the top.
    friend bool operator<(const Poly1& a, const Poly1& b);

    std::string to_string(const std::string& var = "x") const;
};

/// Quotient and remainder; b must be nonzero.
std::pair<Poly1, Poly1> divmod(const Poly1& a, const Poly1& b);
Poly1 operator/(const Poly1& a, const Poly1& b);
Poly1 operator%(const Poly1& a, const Poly1& b);
/// Monic gcd (zero if both are zero).
Poly1 gcd(const Poly1& a, const Poly1& b);
Poly1 powmod(Poly1 base, std::uint64_t e, const Poly1& m);

/// Monic irreducible factors with multiplicities, sorted.
std::vector<std::pair<Poly1, int>> factor(const Poly1& f);
/// Distinct roots in the coefficient field, sorted by index.
std::vector<Elem> roots(const Poly1& f);
bool is_irreducible(const Poly1& f);

}  // namespace hlf

#endif
