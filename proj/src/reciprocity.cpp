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

#include "hlf/reciprocity.hpp"

#include <algorithm>
#include <set>

#include "hlf/mutation.hpp"
#include "hlf/symbols.hpp"

namespace hlf {

std::string law_name(Law law) {
    switch (law) {
        case Law::TamePoint:
            return "tame_point";
        case Law::WittPoint:
            return "witt_point";
        case Law::TameCurve:
            return "tame_curve";
        case Law::WittCurve:
            return "witt_curve";
        case Law::Weil1d:
            return "weil_1d";
    }
    return "unknown";
}

std::string ReciprocityReport::value_string(const PlaceTerm& t) const {
    return is_witt() ? to_string(t.witt) : t.tame.to_string();
}

std::string ReciprocityReport::aggregate_string() const {
    return is_witt() ? to_string(witt_aggregate) : tame_aggregate.to_string();
}

namespace {

struct Fold {
    bool witt;
    RingElem tame;
    WittVector sum;

    void add(const PlaceTerm& t) {
        if (witt)
            sum = witt_add(sum, t.witt);
        else
            tame = tame * t.tame;
    }
    bool identity() const {
        if (!witt) return tame.ring->is_one(tame.value);
        for (const auto& c : sum.comps)
            if (!c.is_zero()) return false;
        return true;
    }
};

Fold empty_fold(const ReciprocityReport& r, const GaloisRing& Fq) {
    Fold f{r.is_witt(), {Fq, Fq.one()}, {}};
    if (f.witt) f.sum = WittVector::zero(GaloisRing::field(Fq.p(), 1), r.witt_length);
    return f;
}

bool is_identity(const ReciprocityReport& r, const PlaceTerm& t) {
    if (!r.is_witt()) return t.tame.ring->is_one(t.tame.value);
    for (const auto& c : t.witt.comps)
        if (!c.is_zero()) return false;
    return true;
}

template <typename Fn>
auto retrying(Fn&& fn, const VerifyOptions& opt, Window* used) {
    Window start = opt.start;
    int cap = opt.retry_cap;
    if (mutations().window_shrink) {
        start = {1, 1};
        cap = 1;
    }
    Window last = start;
    auto value = with_precision_retry(
        [&](Window w) {
            last = w;
            return fn(w);
        },
        start, cap);
    if (used != nullptr) *used = last;
    return value;
}

void widen(Window& acc, const Window& w) {
    acc.t1_terms = std::max(acc.t1_terms, w.t1_terms);
    acc.t2_levels = std::max(acc.t2_levels, w.t2_levels);
}

std::string branch_label(const Branch& z, std::size_t k, std::size_t count) {
    std::string s;
    if (count > 1) s += " branch " + std::to_string(k + 1) + "/" + std::to_string(count);
    if (z.field != z.point.field) s += " over " + z.field->describe();
    return s;
}

// The identity test on the aggregate plus every spot check.
void finish(ReciprocityReport& r, const GaloisRing& Fq) {
    Fold fold = empty_fold(r, Fq);
    for (const auto& t : r.terms) fold.add(t);
    r.tame_aggregate = fold.tame;
    r.witt_aggregate = fold.sum;
    r.holds = fold.identity();
    for (const auto& t : r.spot_checks)
        if (!is_identity(r, t)) r.holds = false;
}

using FormSet = std::set<Form, decltype([](const Form& a, const Form& b) { return a < b; })>;

// Minimal polynomial over the base of c in the point's field, as the binary form
// mu(l / X_chart) X_chart^deg, where l is the given linear form.
Form min_poly_curve(const ClosedPoint& x, const Elem& c, const Form& l) {
    const GaloisRing& L = *x.field;
    const GaloisRing& F = *x.base;
    std::vector<Elem> conj{c};
    for (;;) {
        Elem nx = L.pow(conj.back(), F.residue_order());
        if (nx == c) break;
        conj.push_back(nx);
    }
    Poly1 mu = Poly1::constant(L, L.one());
    for (const auto& r : conj) mu = mu * Poly1::linear(L, r);
    const FieldEmbedding& e = embedding(F, L);
    const int k = mu.degree();
    const Form xc = Form::variable(F, x.chart);
    Form out(F, k);
    for (int i = 0; i <= k; ++i) out = out + l.pow(i) * xc.pow(k - i).scaled(e.preimage(mu.coeff(i)));
    return out.normalized();
}

std::vector<Form> spot_curves(const ClosedPoint& x, const std::vector<Curve>& support, int count) {
    const GaloisRing& F = *x.base;
    const GaloisRing& L = *x.field;
    const int va = x.chart == 0 ? 1 : 0, vb = x.chart == 2 ? 1 : 2;
    const Elem p0 = x.coords[va], p1 = x.coords[vb];
    const Form Xa = Form::variable(F, va), Xb = Form::variable(F, vb);
    const std::pair<Elem, Form> choices[] = {
        {p0, Xa}, {p1, Xb}, {L.add(p0, p1), Xa + Xb}, {L.sub(p0, p1), Xa - Xb}};
    FormSet skip;
    for (const auto& y : support) skip.insert(y.poly);
    std::vector<Form> out;
    for (const auto& [c, l] : choices) {
        if (static_cast<int>(out.size()) >= count) break;
        Form P = min_poly_curve(x, c, l);
        if (skip.count(P)) continue;
        skip.insert(P);
        out.push_back(P);
    }
    return out;
}

std::vector<ClosedPoint> spot_points(const Curve& y, const std::vector<ClosedPoint>& support, int count) {
    const GaloisRing& F = *y.poly.ring;
    std::vector<ClosedPoint> out;
    for (std::uint64_t i = 0; i < F.residue_order() && static_cast<int>(out.size()) < count; ++i) {
        Form line = Form::variable(F, 0) - Form::variable(F, 2).scaled(F.from_index(i));
        if (line.normalized() == y.poly) continue;
        for (const auto& x : intersection_points(y.poly, line)) {
            if (static_cast<int>(out.size()) >= count) break;
            if (x.degree > 2 || std::find(support.begin(), support.end(), x) != support.end() ||
                std::find(out.begin(), out.end(), x) != out.end())
                continue;
            out.push_back(x);
        }
    }
    return out;
}

std::vector<RationalFunction> nonzero(std::vector<RationalFunction> fs) {
    fs.erase(std::remove_if(fs.begin(), fs.end(), [](const RationalFunction& f) { return f.is_zero(); }), fs.end());
    return fs;
}

void check_functions(const std::vector<RationalFunction>& fs) {
    for (const auto& f : fs)
        if (f.degree() != 0) throw InputError("not a rational function (degree " + std::to_string(f.degree()) + "): " + f.to_string());
}

// Terms at every branch of every curve in `curves` through x.
template <typename Local>
void point_terms(ReciprocityReport& r, std::vector<PlaceTerm>& into, const ClosedPoint& x, const std::vector<Curve>& curves,
                 Local&& local) {
    for (const auto& y : curves) {
        auto zs = branches_at(y, x);
        for (std::size_t k = 0; k < zs.size(); ++k) {
            Window used;
            PlaceTerm t = local(zs[k], used);
            widen(r.window, used);
            t.place = "curve " + y.to_string() + branch_label(zs[k], k, zs.size());
            t.degree = zs[k].field->degree() / x.base->degree();
            into.push_back(std::move(t));
        }
    }
}

template <typename Local>
void curve_terms(ReciprocityReport& r, std::vector<PlaceTerm>& into, const Curve& y, const std::vector<ClosedPoint>& pts,
                 Local&& local) {
    for (const auto& x : pts) {
        auto zs = branches_at(y, x);
        for (std::size_t k = 0; k < zs.size(); ++k) {
            Window used;
            PlaceTerm t = local(zs[k], used);
            widen(r.window, used);
            t.place = "point " + x.to_string() + branch_label(zs[k], k, zs.size());
            t.degree = zs[k].field->degree() / x.base->degree();
            t.at_infinity = x.chart != 2;
            into.push_back(std::move(t));
        }
    }
}

}  // namespace

bool report_consistent(const ReciprocityReport& r) {
    const GaloisRing& Fq = r.is_witt() ? GaloisRing::field(r.witt_aggregate.comps.empty() ? 2 : r.witt_aggregate.base().p(), 1)
                                       : *r.tame_aggregate.ring;
    Fold fold = empty_fold(r, Fq);
    for (const auto& t : r.terms) fold.add(t);
    bool holds = fold.identity();
    for (const auto& t : r.spot_checks)
        if (!is_identity(r, t)) holds = false;
    if (r.is_witt()) return fold.sum == r.witt_aggregate && holds == r.holds;
    return fold.tame == r.tame_aggregate && holds == r.holds;
}

RingElem tame_at_branch(const Branch& z, const RationalFunction& f, const RationalFunction& g, const RationalFunction& h,
                        const VerifyOptions& opt, Window* used) {
    Elem v = retrying([&](Window w) { return tame2_det(expand(f, z, w), expand(g, z, w), expand(h, z, w)); }, opt, used);
    const GaloisRing& Fq = *z.point.base;
    return {Fq, embedding(Fq, *z.field).norm(v)};
}

WittVector witt_at_branch(const Branch& z, const RationalFunction& f, const RationalFunction& g,
                          const std::vector<RationalFunction>& h, const VerifyOptions& opt, Window* used) {
    if (h.empty()) throw InputError("Witt vector of length 0");
    const GaloisRing& K = *z.field;
    return retrying(
        [&](Window w) {
            WittSeries hs;
            for (const auto& c : h) hs.comps.push_back(c.is_zero() ? Laurent2::zero(K) : expand(c, z, w));
            return witt_pair(expand(f, z, w), expand(g, z, w), hs, w, opt.lift);
        },
        opt, used);
}

ReciprocityReport verify_tame_point(const ClosedPoint& x, const RationalFunction& f, const RationalFunction& g,
                                    const RationalFunction& h, const VerifyOptions& opt) {
    check_functions({f, g, h});
    if (f.is_zero() || g.is_zero() || h.is_zero()) throw InputError("the tame symbol needs nonzero functions");
    ReciprocityReport r;
    r.law = Law::TamePoint;
    auto local = [&](const Branch& z, Window& used) { return PlaceTerm{"", tame_at_branch(z, f, g, h, opt, &used), {}}; };
    auto curves = curves_through_point(x, {f, g, h});
    point_terms(r, r.terms, x, curves, local);
    std::vector<Curve> extra;
    for (const auto& P : spot_curves(x, curves, opt.spot_checks)) extra.push_back(Curve::trusted(P));
    point_terms(r, r.spot_checks, x, extra, local);
    finish(r, *x.base);
    return r;
}

ReciprocityReport verify_witt_point(const ClosedPoint& x, const RationalFunction& f, const RationalFunction& g,
                                    const std::vector<RationalFunction>& h, const VerifyOptions& opt) {
    check_functions(nonzero(h));
    check_functions({f, g});
    if (f.is_zero() || g.is_zero()) throw InputError("the Witt pairing needs nonzero f and g");
    ReciprocityReport r;
    r.law = Law::WittPoint;
    r.witt_length = static_cast<int>(h.size());
    auto local = [&](const Branch& z, Window& used) { return PlaceTerm{"", {}, witt_at_branch(z, f, g, h, opt, &used)}; };
    std::vector<RationalFunction> all = nonzero(h);
    all.push_back(f);
    all.push_back(g);
    auto curves = curves_through_point(x, all);
    point_terms(r, r.terms, x, curves, local);
    std::vector<Curve> extra;
    for (const auto& P : spot_curves(x, curves, opt.spot_checks)) extra.push_back(Curve::trusted(P));
    point_terms(r, r.spot_checks, x, extra, local);
    finish(r, *x.base);
    return r;
}

ReciprocityReport verify_tame_curve(const Curve& y, const RationalFunction& f, const RationalFunction& g,
                                    const RationalFunction& h, const VerifyOptions& opt) {
    check_functions({f, g, h});
    if (f.is_zero() || g.is_zero() || h.is_zero()) throw InputError("the tame symbol needs nonzero functions");
    ReciprocityReport r;
    r.law = Law::TameCurve;
    auto local = [&](const Branch& z, Window& used) { return PlaceTerm{"", tame_at_branch(z, f, g, h, opt, &used), {}}; };
    auto pts = points_on_curve(y, {f, g, h});
    curve_terms(r, r.terms, y, pts, local);
    curve_terms(r, r.spot_checks, y, spot_points(y, pts, opt.spot_checks), local);
    finish(r, *y.poly.ring);
    return r;
}

ReciprocityReport verify_witt_curve(const Curve& y, const RationalFunction& f, const RationalFunction& g,
                                    const std::vector<RationalFunction>& h, const VerifyOptions& opt) {
    check_functions(nonzero(h));
    check_functions({f, g});
    if (f.is_zero() || g.is_zero()) throw InputError("the Witt pairing needs nonzero f and g");
    ReciprocityReport r;
    r.law = Law::WittCurve;
    r.witt_length = static_cast<int>(h.size());
    auto local = [&](const Branch& z, Window& used) { return PlaceTerm{"", {}, witt_at_branch(z, f, g, h, opt, &used)}; };
    std::vector<RationalFunction> all = nonzero(h);
    all.push_back(f);
    all.push_back(g);
    auto pts = points_on_curve(y, all);
    curve_terms(r, r.terms, y, pts, local);
    curve_terms(r, r.spot_checks, y, spot_points(y, pts, opt.spot_checks), local);
    finish(r, *y.poly.ring);
    return r;
}

P1Function P1Function::make(const Poly1& num, const Poly1& den) {
    if (den.is_zero()) throw NotInvertible("zero denominator");
    const GaloisRing& R = *den.ring;
    if (num.is_zero()) return {&R, Poly1(R), Poly1::constant(R, R.one())};
    Poly1 g = gcd(num, den);
    Poly1 n = num / g, d = den / g;
    const Elem s = R.inv(d.lead());
    return {&R, n.scaled(s), d.scaled(s)};
}

P1Function P1Function::constant(const GaloisRing& r, const Elem& c) {
    return make(Poly1::constant(r, c), Poly1::constant(r, r.one()));
}

P1Function P1Function::x(const GaloisRing& r) { return make(Poly1::x(r), Poly1::constant(r, r.one())); }

P1Function operator+(const P1Function& a, const P1Function& b) {
    return P1Function::make(a.num * b.den + b.num * a.den, a.den * b.den);
}
P1Function operator-(const P1Function& a, const P1Function& b) {
    return P1Function::make(a.num * b.den - b.num * a.den, a.den * b.den);
}
P1Function operator*(const P1Function& a, const P1Function& b) { return P1Function::make(a.num * b.num, a.den * b.den); }
P1Function operator/(const P1Function& a, const P1Function& b) {
    if (b.is_zero()) throw NotInvertible("division by the zero function");
    return P1Function::make(a.num * b.den, a.den * b.num);
}

P1Function P1Function::pow(long e) const {
    P1Function base = e < 0 ? constant(*ring, ring->one()) / *this : *this;
    P1Function r = constant(*ring, ring->one());
    for (long k = e < 0 ? -e : e; k > 0; --k) r = r * base;
    return r;
}

std::string P1Function::to_string() const {
    if (den.degree() == 0) return num.to_string("x");
    return "(" + num.to_string("x") + ")/(" + den.to_string("x") + ")";
}

ReciprocityReport weil_1d(const P1Function& f, const P1Function& g) {
    if (f.is_zero() || g.is_zero()) throw InputError("Weil reciprocity needs nonzero functions");
    const GaloisRing& F = *f.ring;
    std::set<Poly1> places;
    for (const Poly1* P : {&f.num, &f.den, &g.num, &g.den})
        if (P->degree() >= 1)
            for (const auto& [pi, m] : factor(*P)) places.insert(pi);
    ReciprocityReport r;
    r.law = Law::Weil1d;
    const int terms = 8;
    for (const auto& pi : places) {
        const GaloisRing& K = GaloisRing::field(F.p(), F.degree() * pi.degree());
        const FieldEmbedding& e = embedding(F, K);
        Poly1 piK(K);
        for (const auto& c : pi.c) piK.c.push_back(e.map(c));
        const Elem alpha = roots(piK).at(0);
        // P(alpha + t) as an exact polynomial in t.
        auto local = [&](const Poly1& P) {
            const Laurent1 shift = Laurent1::from_coeffs(K, 0, {alpha, K.one()});
            Laurent1 acc = Laurent1::zero(K);
            for (int k = P.degree(); k >= 0; --k) acc = acc * shift + Laurent1::monomial(K, e.map(P.c[k]), 0);
            return acc;
        };
        Laurent1 fl = local(f.num) * local(f.den).inv(terms), gl = local(g.num) * local(g.den).inv(terms);
        r.terms.push_back({pi.to_string("x") + " = 0", {F, e.norm(tame1(fl, gl))}, {}, pi.degree()});
    }
    // At infinity t = 1/x and P(1/t) = t^(-deg P) rev(P)(t).
    auto at_inf = [&](const Poly1& P) {
        std::vector<Elem> rev(P.c.rbegin(), P.c.rend());
        return Laurent1::from_coeffs(F, -P.degree(), rev);
    };
    Laurent1 fl = at_inf(f.num) * at_inf(f.den).inv(terms), gl = at_inf(g.num) * at_inf(g.den).inv(terms);
    r.terms.push_back({"x = infinity", {F, tame1(fl, gl)}, {}, 1, true});
    finish(r, F);
    return r;
}

}  // namespace hlf
