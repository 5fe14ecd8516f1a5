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

#include "hlf/series.hpp"

#include <algorithm>
#include <climits>
#include <sstream>
#include <tuple>

namespace hlf {

// ---------------------------------------------------------------- Laurent1

Laurent1 Laurent1::monomial(const GaloisRing& r, const Elem& c, int e, int precision) {
    Laurent1 a(r, precision);
    a.lo = e;
    a.coeffs = {c};
    a.normalize();
    return a;
}

Laurent1 Laurent1::from_coeffs(const GaloisRing& r, int lo, std::vector<Elem> coeffs, int precision) {
    Laurent1 a(r, precision);
    a.lo = lo;
    a.coeffs = std::move(coeffs);
    a.normalize();
    return a;
}

void Laurent1::normalize() {
    if (!coeffs.empty() && top() > hi) coeffs.resize(std::max(0, hi - lo));
    while (!coeffs.empty() && ring->is_zero(coeffs.back())) coeffs.pop_back();
    std::size_t k = 0;
    while (k < coeffs.size() && ring->is_zero(coeffs[k])) ++k;
    if (k > 0) {
        coeffs.erase(coeffs.begin(), coeffs.begin() + static_cast<long>(k));
        lo += static_cast<int>(k);
    }
    if (coeffs.empty()) lo = 0;
}

Elem Laurent1::coeff(int e) const {
    if (e >= hi) throw InsufficientPrecision("coefficient t^" + std::to_string(e) + " beyond known precision t^" + std::to_string(hi), 1);
    if (coeffs.empty() || e < lo || e >= top()) return ring->zero();
    return coeffs[e - lo];
}

Laurent1 Laurent1::truncated(int new_hi) const {
    Laurent1 r = *this;
    r.hi = std::min(hi, new_hi);
    r.normalize();
    return r;
}

Laurent1 operator+(const Laurent1& a, const Laurent1& b) {
    const GaloisRing& R = *a.ring;
    Laurent1 r(R, std::min(a.hi, b.hi));
    if (a.coeffs.empty() && b.coeffs.empty()) return r;
    int lo = a.coeffs.empty() ? b.lo : b.coeffs.empty() ? a.lo : std::min(a.lo, b.lo);
    int top = std::min(r.hi, std::max(a.coeffs.empty() ? lo : a.top(), b.coeffs.empty() ? lo : b.top()));
    if (top <= lo) return r;
    r.lo = lo;
    r.coeffs.assign(top - lo, R.zero());
    for (std::size_t k = 0; k < a.coeffs.size() && a.lo + static_cast<int>(k) < top; ++k)
        r.coeffs[a.lo + k - lo] = a.coeffs[k];
    for (std::size_t k = 0; k < b.coeffs.size() && b.lo + static_cast<int>(k) < top; ++k)
        r.coeffs[b.lo + k - lo] = R.add(r.coeffs[b.lo + k - lo], b.coeffs[k]);
    r.normalize();
    return r;
}

Laurent1 Laurent1::operator-() const {
    Laurent1 r = *this;
    for (auto& c : r.coeffs) c = ring->neg(c);
    return r;
}

Laurent1 operator-(const Laurent1& a, const Laurent1& b) { return a + (-b); }

Laurent1 operator*(const Laurent1& a, const Laurent1& b) {
    const GaloisRing& R = *a.ring;
    int hi = std::min(bound_add(a.hi, b.valuation_bound()), bound_add(b.hi, a.valuation_bound()));
    Laurent1 r(R, hi);
    if (a.coeffs.empty() || b.coeffs.empty()) return r;
    int lo = a.lo + b.lo;
    int top = std::min(hi, a.top() + b.top() - 1);
    if (top <= lo) return r;
    r.lo = lo;
    r.coeffs.assign(top - lo, R.zero());
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
        if (R.is_zero(a.coeffs[i])) continue;
        int room = top - lo - static_cast<int>(i);
        int jmax = std::min(static_cast<int>(b.coeffs.size()), room);
        for (int j = 0; j < jmax; ++j) R.fma(r.coeffs[i + j], a.coeffs[i], b.coeffs[j]);
    }
    r.normalize();
    return r;
}

Elem product_coeff(const Laurent1& a, const Laurent1& b, int e) {
    const GaloisRing& R = *a.ring;
    int hi = std::min(bound_add(a.hi, b.valuation_bound()), bound_add(b.hi, a.valuation_bound()));
    if (e >= hi) throw InsufficientPrecision("product coefficient beyond known precision", 1);
    Elem s = R.zero();
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
        int j = e - a.lo - static_cast<int>(i) - b.lo;
        if (j < 0) break;
        if (j < static_cast<int>(b.coeffs.size())) R.fma(s, a.coeffs[i], b.coeffs[j]);
    }
    return s;
}

Laurent1 Laurent1::scaled(const Elem& c) const {
    Laurent1 r = *this;
    for (auto& x : r.coeffs) x = ring->mul(x, c);
    r.normalize();
    return r;
}

Laurent1 Laurent1::shifted(int k) const {
    Laurent1 r = *this;
    if (!r.coeffs.empty()) r.lo += k;
    r.hi = bound_add(hi, k);
    return r;
}

Laurent1 Laurent1::inv(int terms) const {
    if (coeffs.empty()) {
        if (is_exact()) throw NotInvertible("inverse of zero series");
        throw InsufficientPrecision("leading term of series not determined", 1);
    }
    const GaloisRing& R = *ring;
    Elem c0inv = R.inv(coeffs[0]);
    if (coeffs.size() == 1 && is_exact()) return monomial(R, c0inv, -lo);
    int rel = std::min(hi >= kExact ? kExact : hi - lo, terms);
    std::vector<Elem> b(rel, R.zero());
    Elem negc0inv = R.neg(c0inv);
    b[0] = c0inv;
    for (int k = 1; k < rel; ++k) {
        Elem s = R.zero();
        int lmax = std::min<int>(k, static_cast<int>(coeffs.size()) - 1);
        for (int l = 1; l <= lmax; ++l) R.fma(s, coeffs[l], b[k - l]);
        b[k] = R.mul(negc0inv, s);
    }
    return from_coeffs(R, -lo, std::move(b), -lo + rel);
}

Laurent1 Laurent1::derivative() const {
    Laurent1 r(*ring, bound_add(hi, -1));
    if (coeffs.empty()) return r;
    r.lo = lo - 1;
    r.coeffs.resize(coeffs.size());
    for (std::size_t k = 0; k < coeffs.size(); ++k) r.coeffs[k] = ring->scale(coeffs[k], lo + static_cast<long>(k));
    r.normalize();
    return r;
}

std::string Laurent1::to_string(const std::string& var) const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (ring->is_zero(coeffs[k])) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << ring->to_string(coeffs[k]) << ")*" << var << "^" << lo + static_cast<int>(k);
    }
    if (first) os << "0";
    if (!is_exact()) os << " + O(" << var << "^" << hi << ")";
    return os.str();
}

// ---------------------------------------------------------------- Laurent2

namespace {

bool exact_zero(const Laurent1& a) { return a.coeffs.empty() && a.is_exact(); }

}  // namespace

Laurent2 Laurent2::constant(const GaloisRing& r, const Elem& c) { return monomial(r, c, 0, 0); }

Laurent2 Laurent2::monomial(const GaloisRing& r, const Elem& c, int i, int j) {
    return from_level(Laurent1::monomial(r, c, i), j);
}

Laurent2 Laurent2::from_level(const Laurent1& level, int j, int precision) {
    Laurent2 f(*level.ring, precision);
    if (j < precision) {
        f.jlo = j;
        f.levels = {level};
    }
    f.normalize();
    return f;
}

Laurent2 Laurent2::from_terms(const GaloisRing& r, const std::vector<std::tuple<int, int, Elem>>& terms, int t2_hi,
                              const std::function<int(int)>& t1_hi) {
    int jmin = t2_hi;
    for (const auto& [i, j, c] : terms) jmin = std::min(jmin, j);
    Laurent2 f(r, t2_hi);
    if (jmin >= t2_hi) return f;
    int jtop = jmin;
    for (const auto& [i, j, c] : terms) jtop = std::max(jtop, j + 1);
    if (t2_hi < kExact) jtop = t2_hi;
    f.jlo = jmin;
    for (int j = jmin; j < jtop; ++j) f.levels.emplace_back(r, t1_hi(j));
    for (const auto& [i, j, c] : terms) {
        if (j >= t2_hi) throw InputError("term outside t2 window");
        Laurent1& L = f.levels[j - jmin];
        if (i >= L.hi) throw InputError("term outside t1 window");
        L = L + Laurent1::monomial(r, c, i);
    }
    f.normalize();
    return f;
}

void Laurent2::normalize() {
    if (static_cast<int>(levels.size()) > jhi - jlo) levels.resize(std::max(0, jhi - jlo));
    while (!levels.empty() && exact_zero(levels.back())) levels.pop_back();
    std::size_t k = 0;
    while (k < levels.size() && exact_zero(levels[k])) ++k;
    if (k > 0) {
        levels.erase(levels.begin(), levels.begin() + static_cast<long>(k));
        jlo += static_cast<int>(k);
    }
    if (levels.empty()) jlo = jhi;
}

bool Laurent2::is_exact() const {
    if (jhi < kExact) return false;
    return std::all_of(levels.begin(), levels.end(), [](const Laurent1& l) { return l.is_exact(); });
}

bool Laurent2::is_zero_on_window() const {
    return std::all_of(levels.begin(), levels.end(), [](const Laurent1& l) { return l.coeffs.empty(); });
}

Laurent1 Laurent2::level(int j) const {
    if (j >= jhi)
        throw InsufficientPrecision("t2-level " + std::to_string(j) + " beyond known precision t2^" + std::to_string(jhi), 2);
    if (levels.empty() || j < jlo || j >= jlo + static_cast<int>(levels.size())) return Laurent1(*ring);
    return levels[j - jlo];
}

int Laurent2::t1_hi(int j) const {
    if (j >= jhi) return INT_MIN;
    if (levels.empty() || j < jlo || j >= jlo + static_cast<int>(levels.size())) return kExact;
    return levels[j - jlo].hi;
}

Elem Laurent2::coeff(int i, int j) const {
    if (j >= jhi)
        throw InsufficientPrecision("coefficient t2^" + std::to_string(j) + " beyond known precision t2^" + std::to_string(jhi), 2);
    if (levels.empty() || j < jlo || j >= jlo + static_cast<int>(levels.size())) return ring->zero();
    return levels[j - jlo].coeff(i);
}

Laurent2 Laurent2::truncated(int t2_hi) const {
    Laurent2 r = *this;
    r.jhi = std::min(jhi, t2_hi);
    r.normalize();
    return r;
}

Laurent2 Laurent2::truncated_relative(const Window& w) const {
    Laurent2 r = *this;
    if (!levels.empty()) r.jhi = std::min(jhi, jlo + w.t2_levels);
    for (auto& L : r.levels)
        if (!L.coeffs.empty()) L = L.truncated(L.lo + w.t1_terms);
    r.normalize();
    return r;
}

Laurent2 operator+(const Laurent2& a, const Laurent2& b) {
    const GaloisRing& R = *a.ring;
    Laurent2 r(R, std::min(a.jhi, b.jhi));
    int lo = std::min(a.jlo, b.jlo);
    int top = std::max(a.levels.empty() ? lo : a.jlo + static_cast<int>(a.levels.size()),
                       b.levels.empty() ? lo : b.jlo + static_cast<int>(b.levels.size()));
    top = std::min(top, r.jhi);
    if (top <= lo) return r;
    r.jlo = lo;
    for (int j = lo; j < top; ++j) r.levels.push_back(a.level(j) + b.level(j));
    r.normalize();
    return r;
}

Laurent2 Laurent2::operator-() const {
    Laurent2 r = *this;
    for (auto& L : r.levels) L = -L;
    return r;
}

Laurent2 operator-(const Laurent2& a, const Laurent2& b) { return a + (-b); }

Laurent2 operator*(const Laurent2& a, const Laurent2& b) {
    const GaloisRing& R = *a.ring;
    int jhi = std::min(bound_add(a.jhi, b.jlo), bound_add(b.jhi, a.jlo));
    Laurent2 r(R, jhi);
    if (a.levels.empty() || b.levels.empty()) return r;
    int lo = a.jlo + b.jlo;
    int top = std::min<long>(jhi, static_cast<long>(a.jlo) + b.jlo + a.levels.size() + b.levels.size() - 1);
    if (top <= lo) return r;
    r.jlo = lo;
    r.levels.assign(top - lo, Laurent1(R));
    for (std::size_t x = 0; x < a.levels.size(); ++x)
        for (std::size_t y = 0; y < b.levels.size() && static_cast<int>(x + y) < top - lo; ++y)
            r.levels[x + y] = r.levels[x + y] + a.levels[x] * b.levels[y];
    r.normalize();
    return r;
}

Laurent2 Laurent2::scaled(const Elem& c) const {
    Laurent2 r = *this;
    for (auto& L : r.levels) L = L.scaled(c);
    r.normalize();
    return r;
}

Laurent2 Laurent2::shifted(int a, int b) const {
    Laurent2 r = *this;
    for (auto& L : r.levels) L = L.shifted(a);
    if (!r.levels.empty()) r.jlo += b;
    r.jhi = bound_add(jhi, b);
    if (r.levels.empty()) r.jlo = r.jhi;
    return r;
}

std::string Laurent2::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < levels.size(); ++k) {
        const Laurent1& L = levels[k];
        if (L.coeffs.empty() && L.is_exact()) continue;
        if (!first) os << " + ";
        first = false;
        os << "[" << L.to_string("t1") << "]*t2^" << jlo + static_cast<int>(k);
    }
    if (first) os << "0";
    if (jhi < kExact) os << " + O(t2^" << jhi << ")";
    return os.str();
}

Laurent2 ls2_add(const Laurent2& f, const Laurent2& g) { return f + g; }

Laurent2 ls2_mul(const Laurent2& f, const Laurent2& g) { return f * g; }

Laurent2 ls2_inv(const Laurent2& f, const Window& w) {
    const GaloisRing& R = *f.ring;
    if (f.levels.empty()) {
        if (f.jhi >= kExact) throw NotInvertible("inverse of zero series");
        throw InsufficientPrecision("leading t2-level not determined", 2);
    }
    const Laurent1& F0 = f.levels[0];
    if (F0.coeffs.empty()) throw InsufficientPrecision("leading t2-level is zero to its known precision", 1);
    int j0 = f.jlo;
    Laurent1 H0 = F0.inv(w.t1_terms);
    if (f.levels.size() == 1 && f.jhi >= kExact && H0.is_exact()) return Laurent2::from_level(H0, -j0);

    int rel = f.jhi >= kExact ? kExact : f.jhi - j0;
    int L = std::min(rel, w.t2_levels);
    std::vector<Laurent1> H;
    H.reserve(L);
    H.push_back(H0);
    Laurent1 negH0 = -H0;
    for (int k = 1; k < L; ++k) {
        Laurent1 s(R);
        for (int l = 1; l <= k; ++l) {
            if (l >= static_cast<int>(f.levels.size())) break;
            s = s + f.levels[l] * H[k - l];
        }
        H.push_back(negH0 * s);
    }
    Laurent2 h(R, -j0 + L);
    h.jlo = -j0;
    h.levels = std::move(H);
    h.normalize();
    return h;
}

Laurent2 ls2_pow(const Laurent2& f, long e, const Window& w) {
    if (e < 0) return ls2_pow(ls2_inv(f, w), -e, w);
    Laurent2 r = Laurent2::constant(*f.ring, f.ring->one());
    Laurent2 base = f;
    while (e > 0) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return r;
}

Valuation2 ls2_valuation(const Laurent2& f) {
    if (f.levels.empty()) {
        if (f.jhi >= kExact) throw InputError("valuation of zero");
        throw InsufficientPrecision("valuation not determined: zero up to t2^" + std::to_string(f.jhi), 2);
    }
    const Laurent1& F0 = f.levels[0];
    if (F0.coeffs.empty()) throw InsufficientPrecision("valuation not determined: leading level is zero to its precision", 1);
    return {F0.lo, f.jlo};
}

Elem ls2_coeff(const Laurent2& f, int i, int j) { return f.coeff(i, j); }

Laurent2 ls2_derivative(const Laurent2& f, int axis) {
    if (axis != 1 && axis != 2) throw InputError("derivative axis must be 1 or 2");
    Laurent2 r = f;
    if (axis == 1) {
        for (auto& L : r.levels) L = L.derivative();
    } else {
        for (std::size_t k = 0; k < r.levels.size(); ++k) r.levels[k] = r.levels[k].scaled(f.ring->from_int(f.jlo + static_cast<long>(k)));
        if (!r.levels.empty()) r.jlo -= 1;
        r.jhi = bound_add(f.jhi, -1);
    }
    r.normalize();
    return r;
}

Elem ls2_product_coeff(const Laurent2& f, const Laurent2& g, int i, int j) {
    const GaloisRing& R = *f.ring;
    int jhi = std::min(bound_add(f.jhi, g.jlo), bound_add(g.jhi, f.jlo));
    if (j >= jhi) throw InsufficientPrecision("product coefficient beyond known t2 precision", 2);
    Elem s = R.zero();
    for (std::size_t x = 0; x < f.levels.size(); ++x) {
        int y = j - f.jlo - static_cast<int>(x) - g.jlo;
        if (y < 0) break;
        if (y < static_cast<int>(g.levels.size())) s = R.add(s, product_coeff(f.levels[x], g.levels[y], i));
    }
    return s;
}

Laurent2 ls2_substitute(const Laurent2& f, const Laurent2& s1, const Laurent2& s2, const Window& w) {
    const GaloisRing& R = *f.ring;
    // Admissibility.
    if (ls2_valuation(s1) != Valuation2{1, 0}) throw InvalidParameterChange("t1-substitute must have valuation (1, 0)");
    for (const auto& L : s1.levels)
        if (L.valuation_bound() < 1) throw InvalidParameterChange("every t2-level of the t1-substitute must vanish at t1 = 0");
    Valuation2 v2 = ls2_valuation(s2);
    int e = v2.v2;
    if (e < 1 || v2.v1 != 0) throw InvalidParameterChange("t2-substitute must have valuation (0, e) with e >= 1");
    for (const auto& L : s2.levels)
        if (L.valuation_bound() < 0) throw InvalidParameterChange("t2-substitute must be integral in t1");

    long jbound_l = f.jhi >= kExact ? kExact : static_cast<long>(e) * f.jhi;
    int jbound = jbound_l >= kExact ? kExact : static_cast<int>(jbound_l);
    if (f.levels.empty()) return Laurent2::zero(R, jbound);
    Laurent2 s1_over_t1 = s1.shifted(-1, 0);
    Laurent2 result = Laurent2::zero(R);

    Laurent2 s2_pow = ls2_pow(s2, f.jlo, w);
    for (std::size_t k = 0; k < f.levels.size(); ++k) {
        const Laurent1& F = f.levels[k];
        if (!F.coeffs.empty()) {
            // F(s1) = s1^lo * P(s1), P a polynomial evaluated by Horner.
            Laurent2 P = Laurent2::zero(R);
            for (std::size_t i = F.coeffs.size(); i-- > 0;) P = P * s1 + Laurent2::constant(R, F.coeffs[i]);
            Laurent2 lead = ls2_pow(s1_over_t1, F.lo, w).shifted(F.lo, 0);
            Laurent2 term = lead * P * s2_pow;
            result = result + term;
        }
        if (k + 1 < f.levels.size()) s2_pow = s2_pow * s2;
    }
    // Unknown tails of the input: level j of f is only known below t1^hi_j, and since every t2-level of
    // s1^i has t1-order >= i, that bound carries over to every output level at or above t2^(e*j).
    // Levels of f at or above jhi reach t2^(e*jhi).
    result = result.truncated(jbound);
    bool finite_tail = false;
    for (const auto& L : f.levels) finite_tail = finite_tail || !L.is_exact();
    if (finite_tail) {
        int start = e * f.jlo;
        int top = result.levels.empty() ? start : result.jlo + static_cast<int>(result.levels.size());
        int jtop = result.jhi < kExact ? result.jhi : std::max(top, start + w.t2_levels);
        if (result.levels.empty()) result.jlo = start;
        for (int j = result.jlo - 1; j >= start; --j) {
            result.levels.insert(result.levels.begin(), Laurent1(R));
            result.jlo = j;
        }
        while (result.jlo + static_cast<int>(result.levels.size()) < jtop) result.levels.emplace_back(R);
        result.jhi = jtop;
        for (std::size_t k = 0; k < result.levels.size(); ++k) {
            int j_out = result.jlo + static_cast<int>(k);
            int bound = kExact;
            for (int j = f.jlo; static_cast<long>(e) * j <= j_out && j < f.jhi; ++j) bound = std::min(bound, f.t1_hi(j));
            if (bound < kExact) result.levels[k] = result.levels[k].truncated(bound);
        }
    }
    result.normalize();
    return result;
}

}  // namespace hlf
