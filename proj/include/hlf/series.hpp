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
 * @file series.hpp
 * @brief Truncated Laurent series in one variable and iterated series K((t1))((t2)).
 *
 * Precision is tracked explicitly. A Laurent1 knows every coefficient of
 * exponent below `hi`; coefficients at or above `hi` are unknown. A Laurent2 is
 * a list of t2-levels, each a Laurent1 in t1 with its own `hi`, and knows every
 * level below `jhi`. Asking for an unknown coefficient raises
 * InsufficientPrecision rather than returning zero.
 *
 * kExact as a bound means "no truncation": the value is an exact finite sum.
 */

#ifndef HLF_SERIES_HPP
#define HLF_SERIES_HPP

#include <compare>
#include <functional>
#include <string>
#include <vector>

#include "hlf/galois_ring.hpp"

namespace hlf {

inline constexpr int kExact = 1 << 28;

/// Saturating addition of precision bounds.
inline int bound_add(long a, long b) {
    if (a >= kExact || b >= kExact) return kExact;
    long r = a + b;
    return r >= kExact ? kExact : static_cast<int>(r);
}

/// How many terms to produce when an operation has to truncate an infinite expansion.
struct Window {
    int t1_terms = 32;
    int t2_levels = 16;

    Window doubled() const { return {t1_terms * 2, t2_levels * 2}; }
};

class Laurent1 {
   public:
    RingRef ring = nullptr;
    int lo = 0;                // exponent of coeffs[0]
    std::vector<Elem> coeffs;  // normalized: first and last entries nonzero
    int hi = kExact;           // coefficients of exponent >= hi are unknown

    Laurent1() = default;
    explicit Laurent1(const GaloisRing& r, int precision = kExact) : ring(&r), hi(precision) {}

    static Laurent1 zero(const GaloisRing& r, int precision = kExact) { return Laurent1(r, precision); }
    static Laurent1 monomial(const GaloisRing& r, const Elem& c, int e, int precision = kExact);
    static Laurent1 from_coeffs(const GaloisRing& r, int lo, std::vector<Elem> coeffs, int precision = kExact);

    bool is_exact() const { return hi >= kExact; }
    /// True when every known coefficient vanishes.
    bool is_zero_on_window() const { return coeffs.empty(); }
    /// Lower bound for the valuation: the true valuation when nonzero, hi when only zeros are known.
    int valuation_bound() const { return coeffs.empty() ? hi : lo; }
    int top() const { return lo + static_cast<int>(coeffs.size()); }

    /// Coefficient of t^e; throws InsufficientPrecision when e >= hi.
    Elem coeff(int e) const;

    void normalize();
    Laurent1 truncated(int new_hi) const;

    friend Laurent1 operator+(const Laurent1& a, const Laurent1& b);
    friend Laurent1 operator-(const Laurent1& a, const Laurent1& b);
    friend Laurent1 operator*(const Laurent1& a, const Laurent1& b);
    Laurent1 operator-() const;
    Laurent1 scaled(const Elem& c) const;
    Laurent1 shifted(int k) const;

    /// Inverse, producing `terms` terms past the valuation when the expansion is infinite.
    Laurent1 inv(int terms) const;
    Laurent1 derivative() const;

    std::string to_string(const std::string& var = "t") const;
};

/// Coefficient of t^e in a*b without forming the product.
Elem product_coeff(const Laurent1& a, const Laurent1& b, int e);

struct Valuation2 {
    int v1 = 0;
    int v2 = 0;

    friend bool operator==(const Valuation2&, const Valuation2&) = default;
    /// Lexicographic with v2 first.
    friend std::strong_ordering operator<=>(const Valuation2& a, const Valuation2& b) {
        if (auto c = a.v2 <=> b.v2; c != 0) return c;
        return a.v1 <=> b.v1;
    }
    friend Valuation2 operator+(const Valuation2& a, const Valuation2& b) { return {a.v1 + b.v1, a.v2 + b.v2}; }
};

class Laurent2 {
   public:
    RingRef ring = nullptr;
    int jlo = kExact;               // t2-exponent of levels[0]
    std::vector<Laurent1> levels;   // normalized: first and last levels are not exact zero
    int jhi = kExact;               // levels of exponent >= jhi are unknown

    Laurent2() = default;
    explicit Laurent2(const GaloisRing& r, int precision = kExact) : ring(&r), jlo(precision), jhi(precision) {}

    static Laurent2 zero(const GaloisRing& r, int precision = kExact) { return Laurent2(r, precision); }
    static Laurent2 constant(const GaloisRing& r, const Elem& c);
    static Laurent2 monomial(const GaloisRing& r, const Elem& c, int i, int j);
    /// A series concentrated in t2-degree j.
    static Laurent2 from_level(const Laurent1& level, int j, int precision = kExact);
    /// Sparse terms (i, j, c) inside the given windows; t1_hi(j) gives each level's bound.
    static Laurent2 from_terms(const GaloisRing& r, const std::vector<std::tuple<int, int, Elem>>& terms, int t2_hi,
                               const std::function<int(int)>& t1_hi);

    bool is_exact() const;
    bool is_zero_on_window() const;
    /// Level j: exact zero outside the stored range below jhi; throws at or above jhi.
    Laurent1 level(int j) const;
    /// Coefficient of t1^i t2^j; throws InsufficientPrecision outside the known window.
    Elem coeff(int i, int j) const;
    /// t1-bound of level j (kExact for exact levels); jhi itself is reported as unknown (returns lowest int).
    int t1_hi(int j) const;

    void normalize();
    /// Keep levels below t2_hi and, within each level, exponents below level.lo + t1_terms.
    Laurent2 truncated(int t2_hi) const;
    Laurent2 truncated_relative(const Window& w) const;

    friend Laurent2 operator+(const Laurent2& a, const Laurent2& b);
    friend Laurent2 operator-(const Laurent2& a, const Laurent2& b);
    friend Laurent2 operator*(const Laurent2& a, const Laurent2& b);
    Laurent2 operator-() const;
    Laurent2 scaled(const Elem& c) const;
    /// Multiply by t1^a t2^b.
    Laurent2 shifted(int a, int b) const;

    std::string to_string() const;
};

Laurent2 ls2_add(const Laurent2& f, const Laurent2& g);
Laurent2 ls2_mul(const Laurent2& f, const Laurent2& g);
Laurent2 ls2_inv(const Laurent2& f, const Window& w = {});
/// Signed power; negative exponents go through ls2_inv.
Laurent2 ls2_pow(const Laurent2& f, long e, const Window& w = {});
Valuation2 ls2_valuation(const Laurent2& f);
Elem ls2_coeff(const Laurent2& f, int i, int j);
Laurent2 ls2_derivative(const Laurent2& f, int axis);
/// Coefficient (i, j) of f*g, computed directly.
Elem ls2_product_coeff(const Laurent2& f, const Laurent2& g, int i, int j);
/// f(s1, s2). Requires v(s1) = (1, 0) with every level of s1 of t1-order >= 1, and s2 of t2-order e >= 1
/// whose leading level has t1-order 0 and whose other levels have t1-order >= 0.
Laurent2 ls2_substitute(const Laurent2& f, const Laurent2& s1, const Laurent2& s2, const Window& w = {});

/// Apply fn to every coefficient, producing a series over `target` with the same windows.
template <typename Fn>
Laurent2 map_coeffs(const Laurent2& f, const GaloisRing& target, Fn&& fn) {
    Laurent2 r = f;
    r.ring = &target;
    for (auto& L : r.levels) {
        L.ring = &target;
        for (auto& c : L.coeffs) c = fn(c);
        L.normalize();
    }
    r.normalize();
    return r;
}

/// Runs fn(window); after each InsufficientPrecision doubles the window along the axis that ran out
/// (both axes when unknown), giving up once a window would exceed `cap`.
template <typename Fn>
auto with_precision_retry(Fn&& fn, Window start = {}, int cap = 1024) {
    Window w = start;
    while (true) {
        try {
            return fn(w);
        } catch (const InsufficientPrecision& e) {
            Window next = w;
            if (e.axis() != 2) next.t1_terms *= 2;
            if (e.axis() != 1) next.t2_levels *= 2;
            if (next.t1_terms > cap || next.t2_levels > cap) throw;
            w = next;
        }
    }
}

}  // namespace hlf

#endif
