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

#include "hlf/form.hpp"

#include <algorithm>

#include "hlf/poly1.hpp"

namespace hlf {

Form Form::constant(const GaloisRing& r, const Elem& c) { return monomial(r, c, {0, 0, 0}); }

Form Form::variable(const GaloisRing& r, int i) {
    Exps e{0, 0, 0};
    e.at(i) = 1;
    return monomial(r, r.one(), e);
}

Form Form::monomial(const GaloisRing& r, const Elem& c, const Exps& e) {
    Form f(r, e[0] + e[1] + e[2]);
    if (!r.is_zero(c)) f.terms[e] = c;
    return f;
}

Elem Form::coeff(const Exps& e) const {
    auto it = terms.find(e);
    return it == terms.end() ? ring->zero() : it->second;
}

Form Form::normalized() const {
    if (is_zero()) return *this;
    return scaled(ring->inv(leading()));
}

Form Form::scaled(const Elem& c) const {
    Form r(*ring, degree);
    if (ring->is_zero(c)) return r;
    for (const auto& [e, v] : terms) r.terms[e] = ring->mul(v, c);
    return r;
}

Form Form::pow(int k) const {
    Form r = constant(*ring, ring->one()), b = *this;
    while (k > 0) {
        if (k & 1) r = r * b;
        k >>= 1;
        if (k) b = b * b;
    }
    return r;
}

Form Form::partial(int var) const {
    Form r(*ring, std::max(degree - 1, 0));
    for (const auto& [e, v] : terms) {
        if (e[var] == 0) continue;
        Exps d = e;
        d[var] -= 1;
        Elem c = ring->scale(v, e[var]);
        if (!ring->is_zero(c)) r.terms[d] = c;
    }
    return r;
}

Form Form::mapped(const FieldEmbedding& emb) const {
    Form r(emb.big(), degree);
    for (const auto& [e, v] : terms) r.terms[e] = emb.map(v);
    return r;
}

Elem Form::eval(const std::array<Elem, 3>& pt) const {
    Elem s = ring->zero();
    for (const auto& [e, v] : terms) {
        Elem m = v;
        for (int i = 0; i < 3; ++i) m = ring->mul(m, ring->pow(pt[i], static_cast<std::uint64_t>(e[i])));
        s = ring->add(s, m);
    }
    return s;
}

namespace {

Form combine(const Form& a, const Form& b, bool subtract) {
    if (b.is_zero()) return a;
    if (a.is_zero()) return subtract ? -b : b;
    if (a.degree != b.degree) throw InputError("sum of forms of different degrees (non-homogeneous)");
    const GaloisRing& R = *a.ring;
    Form r = a;
    for (const auto& [e, v] : b.terms) {
        Elem s = subtract ? R.sub(r.coeff(e), v) : R.add(r.coeff(e), v);
        if (R.is_zero(s))
            r.terms.erase(e);
        else
            r.terms[e] = s;
    }
    return r;
}

}  // namespace

Form operator+(const Form& a, const Form& b) { return combine(a, b, false); }
Form operator-(const Form& a, const Form& b) { return combine(a, b, true); }

Form operator*(const Form& a, const Form& b) {
    const GaloisRing& R = *a.ring;
    Form r(R, a.degree + b.degree);
    for (const auto& [ea, va] : a.terms)
        for (const auto& [eb, vb] : b.terms) {
            Exps e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]};
            Elem s = R.add(r.coeff(e), R.mul(va, vb));
            if (R.is_zero(s))
                r.terms.erase(e);
            else
                r.terms[e] = s;
        }
    return r;
}

bool operator<(const Form& a, const Form& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    auto ia = a.terms.rbegin(), ib = b.terms.rbegin();
    for (; ia != a.terms.rend() && ib != b.terms.rend(); ++ia, ++ib) {
        if (ia->first != ib->first) return ia->first < ib->first;
        auto xa = a.ring->index(ia->second), xb = b.ring->index(ib->second);
        if (xa != xb) return xa < xb;
    }
    return ia == a.terms.rend() && ib != b.terms.rend();
}

std::string Form::to_string() const {
    if (is_zero()) return "0";
    static const char* names[3] = {"X", "Y", "Z"};
    std::string out;
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        const auto& [e, v] = *it;
        if (!out.empty()) out += " + ";
        std::string mono;
        for (int i = 0; i < 3; ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += names[i];
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        std::string c = ring->to_string(v);
        if (c.find_first_of("+ ") != std::string::npos) c = "(" + c + ")";
        if (mono.empty())
            out += c;
        else if (ring->is_one(v))
            out += mono;
        else
            out += c + "*" + mono;
    }
    return out;
}

std::optional<Form> exact_div(const Form& a, const Form& b) {
    if (b.is_zero()) throw InputError("division by the zero form");
    const GaloisRing& R = *a.ring;
    if (a.is_zero()) return Form(R, std::max(a.degree - b.degree, 0));
    if (a.degree < b.degree) return std::nullopt;
    const auto& [lb, cb] = *b.terms.rbegin();
    const Elem cb_inv = R.inv(cb);
    Form r = a, q(R, a.degree - b.degree);
    while (!r.is_zero()) {
        const auto [lr, cr] = *r.terms.rbegin();
        Exps e{lr[0] - lb[0], lr[1] - lb[1], lr[2] - lb[2]};
        if (e[0] < 0 || e[1] < 0 || e[2] < 0) return std::nullopt;
        Form t = Form::monomial(R, R.mul(cr, cb_inv), e);
        q = q + t;
        r = r - t * b;
    }
    return q;
}

namespace {

// A nontrivial divisor of least degree of a normalized form g not divisible by Z, or nothing when g is
// irreducible. Candidates come from sub-products of the factorization of g(x, x^(D+1), 1).
std::optional<Form> smallest_factor(const Form& g) {
    const GaloisRing& R = *g.ring;
    const int D = g.degree;
    if (D < 2) return std::nullopt;
    const int B = D + 1;
    Poly1 u(R);
    for (const auto& [e, c] : g.terms) {
        std::size_t k = static_cast<std::size_t>(e[0] + B * e[1]);
        if (u.c.size() <= k) u.c.resize(k + 1, R.zero());
        u.c[k] = c;
    }
    u.trim();
    auto fac = factor(u);
    std::uint64_t combos = 1;
    for (const auto& [pi, m] : fac) {
        combos *= static_cast<std::uint64_t>(m + 1);
        if (combos > (1u << 16)) throw InputError("factorization of " + g.to_string() + " needs too many trials");
    }
    std::optional<Form> best;
    std::vector<int> cnt(fac.size(), 0);
    for (std::uint64_t n = 0; n < combos; ++n) {
        std::uint64_t rest = n;
        for (std::size_t i = 0; i < fac.size(); ++i) {
            cnt[i] = static_cast<int>(rest % static_cast<std::uint64_t>(fac[i].second + 1));
            rest /= static_cast<std::uint64_t>(fac[i].second + 1);
        }
        Poly1 P = Poly1::constant(R, R.one());
        for (std::size_t i = 0; i < fac.size(); ++i)
            for (int k = 0; k < cnt[i]; ++k) P = P * fac[i].first;
        if (P.degree() <= 0 || P.degree() == u.degree()) continue;
        int hd = 0;
        bool ok = true;
        for (int k = 0; k <= P.degree() && ok; ++k) {
            if (R.is_zero(P.c[k])) continue;
            int i = k % B, j = k / B;
            if (i + j > D) ok = false;
            hd = std::max(hd, i + j);
        }
        if (!ok || hd < 1 || 2 * hd > D) continue;
        if (best && hd > best->degree) continue;
        Form H(R, hd);
        for (int k = 0; k <= P.degree(); ++k)
            if (!R.is_zero(P.c[k])) H.terms[{k % B, k / B, hd - k % B - k / B}] = P.c[k];
        H = H.normalized();
        if (best && !(H < *best)) continue;
        if (exact_div(g, H)) best = H;
    }
    return best;
}

}  // namespace

FormFactorization factor_form(const Form& f) {
    if (f.is_zero()) throw InputError("cannot factor the zero form");
    const GaloisRing& R = *f.ring;
    FormFactorization out;
    out.unit = f.leading();
    Form g = f.normalized();
    std::map<Form, int> acc;
    int zc = 0;
    while (g.degree > 0 && std::all_of(g.terms.begin(), g.terms.end(), [](const auto& t) { return t.first[2] > 0; })) {
        Form h(R, g.degree - 1);
        for (const auto& [e, c] : g.terms) h.terms[{e[0], e[1], e[2] - 1}] = c;
        g = h;
        ++zc;
    }
    if (zc > 0) acc[Form::variable(R, 2)] = zc;
    while (g.degree > 0) {
        auto h = smallest_factor(g);
        if (!h) {
            acc[g]++;
            break;
        }
        while (auto q = exact_div(g, *h)) {
            acc[*h]++;
            g = *q;
            if (g.degree == 0) break;
        }
    }
    for (auto& [P, e] : acc) out.factors.emplace_back(P, e);
    return out;
}

bool is_irreducible(const Form& f) {
    if (f.is_zero() || f.degree == 0) return false;
    auto fac = factor_form(f);
    return fac.factors.size() == 1 && fac.factors[0].second == 1;
}

RationalFunction RationalFunction::zero(const GaloisRing& r) {
    RationalFunction f;
    f.ring = &r;
    f.unit = r.zero();
    return f;
}

RationalFunction RationalFunction::constant(const GaloisRing& r, const Elem& c) {
    RationalFunction f = zero(r);
    f.unit = c;
    return f;
}

RationalFunction RationalFunction::from_form(const Form& f) {
    if (f.is_zero()) return zero(*f.ring);
    auto fac = factor_form(f);
    RationalFunction r = constant(*f.ring, fac.unit);
    r.factors = std::move(fac.factors);
    return r;
}

RationalFunction RationalFunction::from_forms(const Form& num, const Form& den) {
    if (den.is_zero()) throw InputError("zero denominator");
    return from_form(num) / from_form(den);
}

int RationalFunction::degree() const {
    int d = 0;
    for (const auto& [P, e] : factors) d += e * P.degree;
    return d;
}

Form RationalFunction::numerator() const {
    Form r = Form::constant(*ring, unit);
    for (const auto& [P, e] : factors)
        if (e > 0) r = r * P.pow(e);
    return r;
}

Form RationalFunction::denominator() const {
    Form r = Form::constant(*ring, ring->one());
    for (const auto& [P, e] : factors)
        if (e < 0) r = r * P.pow(-e);
    return r;
}

int RationalFunction::order_along(const Form& curve) const {
    Form c = curve.normalized();
    for (const auto& [P, e] : factors)
        if (P == c) return e;
    return 0;
}

namespace {

RationalFunction merged(const RationalFunction& a, const RationalFunction& b, int sign) {
    const GaloisRing& R = *a.ring;
    RationalFunction r = RationalFunction::constant(R, sign > 0 ? R.mul(a.unit, b.unit) : R.mul(a.unit, R.inv(b.unit)));
    std::map<Form, int> acc;
    for (const auto& [P, e] : a.factors) acc[P] += e;
    for (const auto& [P, e] : b.factors) acc[P] += sign * e;
    for (const auto& [P, e] : acc)
        if (e != 0) r.factors.emplace_back(P, e);
    return r;
}

}  // namespace

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero() || b.is_zero()) return RationalFunction::zero(*a.ring);
    return merged(a, b, 1);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw NotInvertible("division by the zero function");
    if (a.is_zero()) return a;
    return merged(a, b, -1);
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.unit = ring->neg(unit);
    return r;
}

RationalFunction RationalFunction::pow(long e) const {
    if (is_zero()) {
        if (e <= 0) throw NotInvertible("non-positive power of the zero function");
        return *this;
    }
    RationalFunction r = *this;
    r.unit = ring->pow_signed(unit, e);
    r.factors.clear();
    if (e != 0)
        for (const auto& [P, k] : factors) r.factors.emplace_back(P, static_cast<int>(k * e));
    return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.degree() != b.degree()) throw InputError("sum of fractions of different degrees (non-homogeneous)");
    const GaloisRing& R = *a.ring;
    std::map<Form, int> lcm, ea, eb;
    for (const auto& [P, e] : a.factors) {
        ea[P] = e;
        if (e < 0) lcm[P] = std::max(lcm[P], -e);
    }
    for (const auto& [P, e] : b.factors) {
        eb[P] = e;
        if (e < 0) lcm[P] = std::max(lcm[P], -e);
    }
    auto scaled_num = [&](const RationalFunction& f, std::map<Form, int>& ef) {
        Form n = f.numerator();
        for (const auto& [P, k] : lcm) n = n * P.pow(k - std::max(0, -ef[P]));
        return n;
    };
    Form s = scaled_num(a, ea) + scaled_num(b, eb);
    if (s.is_zero()) return RationalFunction::zero(R);
    RationalFunction den = RationalFunction::constant(R, R.one());
    for (const auto& [P, k] : lcm) den.factors.emplace_back(P, -k);
    return RationalFunction::from_form(s) * den;
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

std::string RationalFunction::to_string() const {
    if (is_zero()) return "0";
    auto part = [&](bool positive) {
        std::string s;
        for (const auto& [P, e] : factors) {
            if ((e > 0) != positive) continue;
            int k = e > 0 ? e : -e;
            if (!s.empty()) s += "*";
            bool atom = P.terms.size() == 1 && P.degree == 1;
            s += atom ? P.to_string() : "(" + P.to_string() + ")";
            if (k > 1) s += "^" + std::to_string(k);
        }
        return s;
    };
    std::string num = part(true), den = part(false);
    std::string u = ring->to_string(unit);
    if (u.find_first_of("+ ") != std::string::npos) u = "(" + u + ")";
    std::string out;
    if (num.empty())
        out = u;
    else if (ring->is_one(unit))
        out = num;
    else
        out = u + "*" + num;
    if (!den.empty()) {
        bool single = std::count_if(factors.begin(), factors.end(), [](const auto& f) { return f.second < 0; }) == 1 &&
                      den.find('^') == std::string::npos;
        out += "/" + (single ? den : "(" + den + ")");
    }
    return out;
}

}  // namespace hlf
