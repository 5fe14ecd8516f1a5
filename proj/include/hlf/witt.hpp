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
 * @file witt.hpp
 * @brief Truncated Witt vectors of length m over F_q and over F_q((t1))((t2)).
 *
 * Components live over a finite field. Arithmetic goes through ghost
 * coordinates: each component is lifted to the Galois ring GR(p^m, n), the
 * ghost map x(i) = sum_j p^j x_j^(p^(i-j)) is applied there, and components
 * are recovered by exact division. The working p-adic precision is N = m.
 *
 * WittVec<C> is written once for both coefficient kinds through WittTraits<C>:
 * C = RingElem for Witt vectors over F_q, C = Laurent2 for Witt vectors whose
 * components are iterated Laurent series.
 */

#ifndef HLF_WITT_HPP
#define HLF_WITT_HPP

#include <string>
#include <vector>

#include "hlf/galois_ring.hpp"
#include "hlf/series.hpp"

namespace hlf {

enum class LiftStrategy { Teichmuller, Naive };

/// Lift of a residue-field element into `gr`.
inline Elem lift_elem(const GaloisRing& gr, const Elem& a, LiftStrategy s) {
    return s == LiftStrategy::Teichmuller ? gr.teichmuller(a) : gr.lift_naive(a);
}

/// Coefficientwise lift of a series over F_q into GR(p^N, n).
Laurent2 lift_series(const Laurent2& f, const GaloisRing& gr, LiftStrategy s);
/// Coefficientwise reduction mod p.
Laurent2 reduce_series(const Laurent2& f);

template <typename C>
struct WittTraits;

template <>
struct WittTraits<RingElem> {
    static const GaloisRing& ring(const RingElem& a) { return *a.ring; }
    static RingElem lift(const RingElem& a, const GaloisRing& gr, LiftStrategy s) { return {gr, lift_elem(gr, a.value, s)}; }
    static RingElem reduce(const RingElem& a) { return {a.ring->residue_field(), a.ring->reduce(a.value)}; }
    static RingElem zero(const GaloisRing& r) { return {r, r.zero()}; }
    static RingElem add(const RingElem& a, const RingElem& b) { return a + b; }
    static RingElem sub(const RingElem& a, const RingElem& b) { return a - b; }
    static RingElem neg(const RingElem& a) { return -a; }
    static RingElem scale(const RingElem& a, std::int64_t k) { return {*a.ring, a.ring->scale(a.value, k)}; }
    static RingElem pow(const RingElem& a, std::uint64_t e) { return {*a.ring, a.ring->pow(a.value, e)}; }
    /// a / p^k; throws NonIntegralGhost when p^k does not divide a.
    static RingElem divide_p(const RingElem& a, int k);
    static bool equal(const RingElem& a, const RingElem& b) { return a == b; }
};

template <>
struct WittTraits<Laurent2> {
    static const GaloisRing& ring(const Laurent2& a) { return *a.ring; }
    static Laurent2 lift(const Laurent2& a, const GaloisRing& gr, LiftStrategy s) { return lift_series(a, gr, s); }
    static Laurent2 reduce(const Laurent2& a) { return reduce_series(a); }
    static Laurent2 zero(const GaloisRing& r) { return Laurent2::zero(r); }
    static Laurent2 add(const Laurent2& a, const Laurent2& b) { return a + b; }
    static Laurent2 sub(const Laurent2& a, const Laurent2& b) { return a - b; }
    static Laurent2 neg(const Laurent2& a) { return -a; }
    static Laurent2 scale(const Laurent2& a, std::int64_t k) { return a.scaled(a.ring->from_int(k)); }
    static Laurent2 pow(const Laurent2& a, std::uint64_t e) { return ls2_pow(a, static_cast<long>(e)); }
    static Laurent2 divide_p(const Laurent2& a, int k);
    /// Equal wherever both are known.
    static bool equal(const Laurent2& a, const Laurent2& b) { return (a - b).is_zero_on_window(); }
};

template <typename C>
struct WittVec {
    std::vector<C> comps;  // components over the residue field

    int length() const { return static_cast<int>(comps.size()); }
    const GaloisRing& base() const { return WittTraits<C>::ring(comps.at(0)); }

    static WittVec zero(const GaloisRing& field, int m) { return {std::vector<C>(m, WittTraits<C>::zero(field))}; }

    friend bool operator==(const WittVec& a, const WittVec& b) {
        if (a.length() != b.length()) return false;
        for (int i = 0; i < a.length(); ++i)
            if (!WittTraits<C>::equal(a.comps[i], b.comps[i])) return false;
        return true;
    }
};

using WittVector = WittVec<RingElem>;
using WittSeries = WittVec<Laurent2>;

/// Ghost coordinates in GR(p^N, n), N = precision (defaults to the length).
template <typename C>
std::vector<C> ghost(const WittVec<C>& w, LiftStrategy s = LiftStrategy::Teichmuller, int precision = 0) {
    using T = WittTraits<C>;
    const GaloisRing& F = w.base();
    const int m = w.length();
    const GaloisRing& gr = F.with_precision(precision > 0 ? precision : m);
    const std::uint64_t p = static_cast<std::uint64_t>(F.p());
    std::vector<C> lifts;
    lifts.reserve(m);
    for (const auto& x : w.comps) lifts.push_back(T::lift(x, gr, s));
    std::vector<C> gh;
    for (int i = 0; i < m; ++i) {
        // x(i) = sum_j p^j x_j^(p^(i-j)); powers built by repeated p-th powers.
        C acc = T::zero(gr);
        std::int64_t pj = 1;
        for (int j = 0; j <= i; ++j) {
            C term = lifts[j];
            for (int k = 0; k < i - j; ++k) term = T::pow(term, p);
            acc = T::add(acc, T::scale(term, pj));
            pj *= static_cast<std::int64_t>(p);
        }
        gh.push_back(acc);
    }
    return gh;
}

/// Components from ghost coordinates over GR(p^N, n), N >= length. Each x_i is obtained by exact
/// division x_i = (x(i) - sum_{j<i} p^j x_j^(p^(i-j))) / p^i; the result is reduced mod p.
template <typename C>
WittVec<C> from_ghost(const std::vector<C>& gh) {
    using T = WittTraits<C>;
    const int m = static_cast<int>(gh.size());
    const GaloisRing& gr = T::ring(gh.at(0));
    if (gr.precision() < m) throw InputError("ghost vector needs p-adic precision at least its length");
    const std::uint64_t p = static_cast<std::uint64_t>(gr.p());
    std::vector<C> xs;  // representatives in GR
    WittVec<C> out;
    for (int i = 0; i < m; ++i) {
        C acc = gh[i];
        std::int64_t pj = 1;
        for (int j = 0; j < i; ++j) {
            C term = xs[j];
            for (int k = 0; k < i - j; ++k) term = T::pow(term, p);
            acc = T::sub(acc, T::scale(term, pj));
            pj *= static_cast<std::int64_t>(p);
        }
        xs.push_back(T::divide_p(acc, i));
        out.comps.push_back(T::reduce(xs.back()));
    }
    return out;
}

template <typename C>
WittVec<C> witt_add(const WittVec<C>& a, const WittVec<C>& b, LiftStrategy s = LiftStrategy::Teichmuller) {
    if (a.length() != b.length()) throw InputError("Witt vectors of different lengths");
    auto ga = ghost(a, s), gb = ghost(b, s);
    for (std::size_t i = 0; i < ga.size(); ++i) ga[i] = WittTraits<C>::add(ga[i], gb[i]);
    return from_ghost(ga);
}

template <typename C>
WittVec<C> witt_neg(const WittVec<C>& a) {
    auto ga = ghost(a);
    for (auto& x : ga) x = WittTraits<C>::neg(x);
    return from_ghost(ga);
}

template <typename C>
WittVec<C> witt_sub(const WittVec<C>& a, const WittVec<C>& b) {
    return witt_add(a, witt_neg(b));
}

/// Componentwise p-th power.
template <typename C>
WittVec<C> witt_frobenius_power(const WittVec<C>& w) {
    WittVec<C> r = w;
    for (auto& x : r.comps) x = WittTraits<C>::pow(x, static_cast<std::uint64_t>(w.base().p()));
    return r;
}

/// (0, w_0, ..., w_{m-2}).
template <typename C>
WittVec<C> verschiebung(const WittVec<C>& w) {
    WittVec<C> r;
    r.comps.push_back(WittTraits<C>::zero(w.base()));
    for (int i = 0; i + 1 < w.length(); ++i) r.comps.push_back(w.comps[i]);
    return r;
}

template <typename C>
WittVec<C> witt_truncate(const WittVec<C>& w, int k) {
    if (k < 1 || k > w.length()) throw InputError("truncation length out of range");
    return {std::vector<C>(w.comps.begin(), w.comps.begin() + k)};
}

/// Witt vector over F_q from integer component encodings.
WittVector witt_from_ints(const GaloisRing& field, const std::vector<std::int64_t>& comps);
std::string to_string(const WittVector& w);

}  // namespace hlf

#endif
