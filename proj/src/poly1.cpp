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

#include "hlf/poly1.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace hlf {

void Poly1::trim() {
    while (!c.empty() && ring->is_zero(c.back())) c.pop_back();
}

Elem Poly1::eval(const Elem& a) const {
    Elem r = ring->zero();
    for (std::size_t k = c.size(); k-- > 0;) r = ring->add(ring->mul(r, a), c[k]);
    return r;
}

Poly1 Poly1::monic() const {
    if (c.empty()) return *this;
    return scaled(ring->inv(c.back()));
}

Poly1 Poly1::scaled(const Elem& a) const {
    Poly1 r = *this;
    for (auto& x : r.c) x = ring->mul(x, a);
    r.trim();
    return r;
}

Poly1 Poly1::derivative() const {
    Poly1 r(*ring);
    for (std::size_t k = 1; k < c.size(); ++k) r.c.push_back(ring->scale(c[k], static_cast<std::int64_t>(k)));
    r.trim();
    return r;
}

Poly1 operator+(const Poly1& a, const Poly1& b) {
    Poly1 r(*a.ring);
    r.c.resize(std::max(a.c.size(), b.c.size()), a.ring->zero());
    for (std::size_t k = 0; k < r.c.size(); ++k) r.c[k] = a.ring->add(a.coeff(k), b.coeff(k));
    r.trim();
    return r;
}

Poly1 operator-(const Poly1& a, const Poly1& b) {
    Poly1 r(*a.ring);
    r.c.resize(std::max(a.c.size(), b.c.size()), a.ring->zero());
    for (std::size_t k = 0; k < r.c.size(); ++k) r.c[k] = a.ring->sub(a.coeff(k), b.coeff(k));
    r.trim();
    return r;
}

Poly1 operator*(const Poly1& a, const Poly1& b) {
    Poly1 r(*a.ring);
    if (a.is_zero() || b.is_zero()) return r;
    r.c.assign(a.c.size() + b.c.size() - 1, a.ring->zero());
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < b.c.size(); ++j) a.ring->fma(r.c[i + j], a.c[i], b.c[j]);
    r.trim();
    return r;
}

bool operator<(const Poly1& a, const Poly1& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int k = a.degree(); k >= 0; --k)
        if (!(a.c[k] == b.c[k])) return a.ring->less(a.c[k], b.c[k]);
    return false;
}

std::string Poly1::to_string(const std::string& var) const {
    if (c.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        if (ring->is_zero(c[k])) continue;
        if (!first) os << " + ";
        first = false;
        bool unit = ring->is_one(c[k]);
        if (!unit || k == 0) os << (ring->degree() > 1 ? "(" + ring->to_string(c[k]) + ")" : ring->to_string(c[k]));
        if (k > 0) os << (unit ? "" : "*") << var << (k > 1 ? "^" + std::to_string(k) : "");
    }
    return os.str();
}

std::pair<Poly1, Poly1> divmod(const Poly1& a, const Poly1& b) {
    if (b.is_zero()) throw NotInvertible("polynomial division by zero");
    const GaloisRing& R = *a.ring;
    Poly1 rem = a;
    Poly1 q(R);
    if (a.degree() < b.degree()) return {q, rem};
    q.c.assign(a.degree() - b.degree() + 1, R.zero());
    Elem linv = R.inv(b.lead());
    for (int k = a.degree(); k >= b.degree(); --k) {
        Elem t = R.mul(rem.coeff(k), linv);
        if (R.is_zero(t)) continue;
        q.c[k - b.degree()] = t;
        for (int i = 0; i <= b.degree(); ++i) rem.c[k - b.degree() + i] = R.sub(rem.c[k - b.degree() + i], R.mul(t, b.c[i]));
    }
    rem.trim();
    q.trim();
    return {q, rem};
}

Poly1 operator/(const Poly1& a, const Poly1& b) { return divmod(a, b).first; }
Poly1 operator%(const Poly1& a, const Poly1& b) { return divmod(a, b).second; }

Poly1 gcd(const Poly1& a0, const Poly1& b0) {
    Poly1 a = a0, b = b0;
    while (!b.is_zero()) {
        Poly1 r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

Poly1 powmod(Poly1 base, std::uint64_t e, const Poly1& m) {
    Poly1 r = Poly1::constant(*m.ring, m.ring->one()) % m;
    base = base % m;
    while (e > 0) {
        if (e & 1) r = (r * base) % m;
        e >>= 1;
        if (e) base = (base * base) % m;
    }
    return r;
}

namespace {

// p-th root of a polynomial whose derivative vanishes.
Poly1 pth_root(const Poly1& f) {
    const GaloisRing& R = *f.ring;
    const int p = R.p();
    Poly1 r(R);
    for (int k = 0; k <= f.degree(); k += p) r.c.push_back(R.frobenius_power(f.c[k], R.degree() - 1));
    r.trim();
    return r;
}

void squarefree(const Poly1& f, int mult, std::vector<std::pair<Poly1, int>>& out) {
    const GaloisRing& R = *f.ring;
    Poly1 c = gcd(f, f.derivative());
    Poly1 w = f / c;
    int i = 1;
    while (w.degree() > 0) {
        Poly1 y = gcd(w, c);
        Poly1 fac = w / y;
        if (fac.degree() > 0) out.emplace_back(fac.monic(), i * mult);
        w = y;
        c = c / y;
        ++i;
    }
    if (c.degree() > 0) squarefree(pth_root(c), mult * R.p(), out);
}

// Distinct-degree split of a monic square-free f.
std::vector<std::pair<Poly1, int>> distinct_degree(Poly1 f) {
    const GaloisRing& R = *f.ring;
    std::vector<std::pair<Poly1, int>> out;
    Poly1 x = Poly1::x(R);
    Poly1 h = x % f;
    for (int d = 1; 2 * d <= f.degree(); ++d) {
        h = powmod(h, R.residue_order(), f);
        Poly1 g = gcd(h - x, f);
        if (g.degree() > 0) {
            out.emplace_back(g, d);
            f = f / g;
            h = h % f;
        }
    }
    if (f.degree() > 0) out.emplace_back(f.monic(), f.degree());
    return out;
}

// a^((q^d - 1)/2) mod f for odd q, or the absolute trace polynomial in characteristic 2.
Poly1 splitting_map(const Poly1& a, int d, const Poly1& f) {
    const GaloisRing& R = *f.ring;
    const std::uint64_t q = R.residue_order();
    if (R.p() == 2) {
        Poly1 s(R), t = a % f;
        for (int i = 0; i < d * R.degree(); ++i) {
            s = s + t;
            t = (t * t) % f;
        }
        return s;
    }
    Poly1 c = powmod(a, (q - 1) / 2, f);
    Poly1 prod = c, t = c;
    for (int i = 1; i < d; ++i) {
        t = powmod(t, q, f);
        prod = (prod * t) % f;
    }
    return prod;
}

void equal_degree(const Poly1& f, int d, std::mt19937_64& rng, std::vector<Poly1>& out) {
    if (f.degree() == d) {
        out.push_back(f.monic());
        return;
    }
    const GaloisRing& R = *f.ring;
    const Poly1 one = Poly1::constant(R, R.one());
    while (true) {
        Poly1 a(R);
        for (int k = 0; k < f.degree(); ++k) a.c.push_back(R.from_index(rng() % R.residue_order()));
        a.trim();
        if (a.degree() <= 0) continue;
        Poly1 s = splitting_map(a, d, f);
        Poly1 g = gcd(R.p() == 2 ? s : s - one, f);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree(g, d, rng, out);
            equal_degree(f / g, d, rng, out);
            return;
        }
    }
}

}  // namespace

std::vector<std::pair<Poly1, int>> factor(const Poly1& f) {
    if (f.is_zero()) throw InputError("factorization of the zero polynomial");
    std::vector<std::pair<Poly1, int>> sqf, out;
    if (f.degree() == 0) return out;
    squarefree(f.monic(), 1, sqf);
    std::mt19937_64 rng(0x5eed);
    for (const auto& [g, mult] : sqf) {
        for (const auto& [h, d] : distinct_degree(g)) {
            std::vector<Poly1> parts;
            equal_degree(h, d, rng, parts);
            for (auto& part : parts) out.emplace_back(std::move(part), mult);
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    // Merge equal factors coming from different square-free parts.
    std::vector<std::pair<Poly1, int>> merged;
    for (auto& fm : out) {
        if (!merged.empty() && merged.back().first == fm.first)
            merged.back().second += fm.second;
        else
            merged.push_back(std::move(fm));
    }
    return merged;
}

std::vector<Elem> roots(const Poly1& f) {
    std::vector<Elem> r;
    for (const auto& [g, m] : factor(f))
        if (g.degree() == 1) r.push_back(f.ring->neg(g.c[0]));
    std::sort(r.begin(), r.end(), [&](const Elem& a, const Elem& b) { return f.ring->index(a) < f.ring->index(b); });
    return r;
}

bool is_irreducible(const Poly1& f) {
    if (f.degree() < 1) return false;
    auto fs = factor(f);
    return fs.size() == 1 && fs[0].second == 1 && fs[0].first.degree() == f.degree();
}

}  // namespace hlf
