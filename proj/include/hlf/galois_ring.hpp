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
 * @file galois_ring.hpp
 * @brief Finite fields GF(p^n) and Galois rings GR(p^N, n) = (Z/p^N)[X]/(M).
 *
 * Both are handled by one class: a field is the Galois ring of precision 1. The
 * modulus M is the smallest monic irreducible of degree n over GF(p) in the
 * order given by the integer encoding c_0 + c_1 p + ... + c_{n-1} p^{n-1}; the
 * Galois ring of precision N uses the same integer coefficients read mod p^N.
 *
 * Rings are interned: GaloisRing::get returns a reference that lives for the
 * whole program, so series and polynomials can hold a plain pointer to their
 * coefficient ring. Elements (Elem) are raw coefficient arrays and carry no
 * ring; every operation goes through the ring object. RingElem bundles the two
 * for code that prefers operators.
 */

#ifndef HLF_GALOIS_RING_HPP
#define HLF_GALOIS_RING_HPP

#include <array>
#include <cstdint>
#include <mutex>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "hlf/errors.hpp"

namespace hlf {

/// Largest absolute extension degree n of any field or Galois ring.
inline constexpr int kMaxDegree = 16;

/// Upper bound on p^N so that coefficient products fit comfortably in 64 bits.
inline constexpr std::uint64_t kMaxCharacteristicPower = std::uint64_t{1} << 26;

struct Elem {
    std::array<std::uint32_t, kMaxDegree> c{};

    friend bool operator==(const Elem&, const Elem&) = default;
};

class GaloisRing;
using RingRef = const GaloisRing*;

bool is_prime(std::int64_t p);

class GaloisRing {
   public:
    /// Interned ring GR(p^precision, n). Throws InputError on bad parameters.
    static const GaloisRing& get(int p, int n, int precision = 1);
    static const GaloisRing& field(int p, int n) { return get(p, n, 1); }

    GaloisRing(const GaloisRing&) = delete;
    GaloisRing& operator=(const GaloisRing&) = delete;

    int p() const noexcept { return p_; }
    int degree() const noexcept { return n_; }
    int precision() const noexcept { return N_; }
    bool is_field() const noexcept { return N_ == 1; }
    /// p^N.
    std::int64_t characteristic_power() const noexcept { return pN_; }
    /// Size of the residue field, p^n.
    std::uint64_t residue_order() const noexcept { return q_; }
    /// Monic modulus, low degree first, coefficients in [0, p).
    const std::vector<std::int64_t>& modulus() const noexcept { return modulus_; }

    const GaloisRing& residue_field() const { return get(p_, n_, 1); }
    const GaloisRing& with_precision(int N) const { return get(p_, n_, N); }

    Elem zero() const noexcept { return Elem{}; }
    Elem one() const noexcept {
        Elem e;
        e.c[0] = 1;
        return e;
    }
    Elem from_int(std::int64_t v) const noexcept {
        Elem e;
        e.c[0] = static_cast<std::uint32_t>(mod(v));
        return e;
    }
    /// The class of X (for n = 1 this is 0, since the modulus is X).
    Elem generator() const;
    /// Coefficients low degree first; reduced mod p^N and mod the modulus.
    Elem from_coeffs(std::span<const std::int64_t> coeffs) const;

    bool is_zero(const Elem& a) const noexcept { return a == Elem{}; }
    bool is_one(const Elem& a) const noexcept { return a == one(); }
    /// A unit iff its reduction mod p is nonzero.
    bool is_unit(const Elem& a) const noexcept;

    Elem add(const Elem& a, const Elem& b) const noexcept {
        Elem r;
        for (int i = 0; i < n_; ++i) {
            std::uint64_t s = std::uint64_t{a.c[i]} + b.c[i];
            r.c[i] = static_cast<std::uint32_t>(s >= static_cast<std::uint64_t>(pN_) ? s - pN_ : s);
        }
        return r;
    }
    Elem sub(const Elem& a, const Elem& b) const noexcept {
        Elem r;
        for (int i = 0; i < n_; ++i) {
            std::int64_t s = std::int64_t{a.c[i]} - b.c[i];
            r.c[i] = static_cast<std::uint32_t>(s < 0 ? s + pN_ : s);
        }
        return r;
    }
    Elem neg(const Elem& a) const noexcept {
        Elem r;
        for (int i = 0; i < n_; ++i) r.c[i] = a.c[i] == 0 ? 0 : static_cast<std::uint32_t>(pN_ - a.c[i]);
        return r;
    }
    Elem mul(const Elem& a, const Elem& b) const noexcept {
        if (n_ == 1) {
            Elem r;
            r.c[0] = static_cast<std::uint32_t>((std::uint64_t{a.c[0]} * b.c[0]) % static_cast<std::uint64_t>(pN_));
            return r;
        }
        return mul_general(a, b);
    }
    /// a += b * c.
    void fma(Elem& acc, const Elem& b, const Elem& c) const noexcept { acc = add(acc, mul(b, c)); }
    Elem scale(const Elem& a, std::int64_t k) const noexcept;
    Elem pow(Elem a, std::uint64_t e) const noexcept;
    /// Signed power; negative exponents require a unit.
    Elem pow_signed(const Elem& a, std::int64_t e) const;
    Elem inv(const Elem& a) const;

    /// Field: a^p. Galois ring: the lift of Frobenius fixing Z/p^N.
    Elem frobenius(const Elem& a) const noexcept;
    Elem frobenius_power(const Elem& a, int k) const noexcept;
    /// Sum of the n Frobenius conjugates, as an element of Z/p^N.
    std::int64_t trace(const Elem& a) const noexcept;
    /// Field only: product of the Frobenius conjugates, an element of GF(p).
    std::int64_t norm_to_prime(const Elem& a) const;

    /// Reduction mod p into residue_field().
    Elem reduce(const Elem& a) const noexcept;
    /// Lift of a residue-field element with the same integer coefficients.
    Elem lift_naive(const Elem& a) const noexcept { return a; }
    /// The unique lift b with b^q = b and b = a mod p.
    Elem teichmuller(const Elem& a) const;

    /// Largest k <= precision with p^k dividing every coefficient.
    int p_adic_valuation(const Elem& a) const noexcept;
    /// a / p^k, assuming p^k divides a (caller checks p_adic_valuation).
    Elem divide_by_p_power(const Elem& a, int k) const noexcept;

    /// Integer encoding sum c_i (p^N)^i; a bijection on the ring for small rings.
    std::uint64_t index(const Elem& a) const noexcept;
    Elem from_index(std::uint64_t idx) const noexcept;
    /// Total order: compare coefficient vectors from the top degree down.
    bool less(const Elem& a, const Elem& b) const noexcept;

    std::string to_string(const Elem& a, const std::string& var = "w") const;
    std::string describe() const;

    std::int64_t mod(std::int64_t v) const noexcept {
        std::int64_t r = v % pN_;
        return r < 0 ? r + pN_ : r;
    }

   private:
    GaloisRing(int p, int n, int N);
    Elem mul_general(const Elem& a, const Elem& b) const noexcept;

    int p_;
    int n_;
    int N_;
    std::int64_t pN_;
    std::uint64_t q_;
    std::vector<std::int64_t> modulus_;
    std::vector<Elem> frob_images_;  // sigma(X)^i, i < n
    std::vector<std::int64_t> basis_traces_;

    mutable std::mutex teich_mutex_;
    mutable std::vector<Elem> teich_table_;
};

/// Smallest monic irreducible of degree n over GF(p), coefficients low first.
std::vector<std::int64_t> canonical_modulus(int p, int n);
/// Rabin irreducibility test over GF(p).
bool is_irreducible_mod_p(const std::vector<std::int64_t>& poly, int p);

/// Desk-scale public entry point: prime p, 1 <= n <= 8.
const GaloisRing& gf_make(int p, int n);

/// An element together with its ring, for operator-style code.
struct RingElem {
    RingRef ring = nullptr;
    Elem value{};

    RingElem() = default;
    RingElem(const GaloisRing& r, const Elem& v) : ring(&r), value(v) {}

    friend RingElem operator+(const RingElem& a, const RingElem& b) { return {*a.ring, a.ring->add(a.value, b.value)}; }
    friend RingElem operator-(const RingElem& a, const RingElem& b) { return {*a.ring, a.ring->sub(a.value, b.value)}; }
    friend RingElem operator*(const RingElem& a, const RingElem& b) { return {*a.ring, a.ring->mul(a.value, b.value)}; }
    RingElem operator-() const { return {*ring, ring->neg(value)}; }
    friend bool operator==(const RingElem& a, const RingElem& b) { return a.ring == b.ring && a.value == b.value; }
    bool is_zero() const { return ring->is_zero(value); }
    std::string to_string() const { return ring->to_string(value); }
};

using FqElem = RingElem;
using GrElem = RingElem;

FqElem gf_trace(const FqElem& a);
FqElem gf_norm(const FqElem& a);
GrElem gr_teichmuller(const FqElem& a, int precision);
/// Trace to Z/p^N = GR(p^N, 1).
GrElem gr_trace(const GrElem& a);

}  // namespace hlf

#endif
