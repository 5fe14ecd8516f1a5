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

#include "hlf/surface.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "hlf/poly1.hpp"

namespace hlf {

namespace {

const GaloisRing& extension(const GaloisRing& base, int rel_degree) {
    const int nd = base.degree() * rel_degree;
    if (nd > kMaxDegree)
        throw InputError("a point needs GF(" + std::to_string(base.p()) + "^" + std::to_string(nd) +
                         "), beyond the supported extension degree " + std::to_string(kMaxDegree));
    return GaloisRing::field(base.p(), nd);
}

Poly1 map_poly(const Poly1& f, const FieldEmbedding& e) {
    Poly1 r(e.big());
    for (const auto& c : f.c) r.c.push_back(e.map(c));
    r.trim();
    return r;
}

// The other two coordinates of a chart, in index order.
std::array<int, 2> affine_vars(int chart) {
    switch (chart) {
        case 0:
            return {1, 2};
        case 1:
            return {0, 2};
        default:
            return {0, 1};
    }
}

std::int64_t binom(int n, int k) {
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

Laurent1 cut(const Laurent1& f, int precision) {
    Laurent1 r = f.truncated(precision);
    r.hi = kExact;
    r.normalize();
    return r;
}

// Coefficients of f(x, y, 1) as a polynomial in y over F_q[x].
std::vector<Poly1> coeffs_in_y(const Form& f) {
    const GaloisRing& R = *f.ring;
    std::vector<Poly1> out(static_cast<std::size_t>(f.degree + 1), Poly1(R));
    for (const auto& [e, c] : f.terms) {
        Poly1& P = out[static_cast<std::size_t>(e[1])];
        if (P.c.size() <= static_cast<std::size_t>(e[0])) P.c.resize(static_cast<std::size_t>(e[0] + 1), R.zero());
        P.c[static_cast<std::size_t>(e[0])] = c;
    }
    for (auto& P : out) P.trim();
    while (!out.empty() && out.back().is_zero()) out.pop_back();
    return out;
}

// Sylvester determinant by fraction-free elimination over F_q[x].
Poly1 resultant(const std::vector<Poly1>& A, const std::vector<Poly1>& B, const GaloisRing& R) {
    const int m = static_cast<int>(A.size()) - 1, k = static_cast<int>(B.size()) - 1;
    const int n = m + k;
    if (n == 0) return Poly1::constant(R, R.one());
    std::vector<std::vector<Poly1>> M(static_cast<std::size_t>(n), std::vector<Poly1>(static_cast<std::size_t>(n), Poly1(R)));
    for (int i = 0; i < k; ++i)
        for (int t = 0; t <= m; ++t) M[i][i + t] = A[static_cast<std::size_t>(m - t)];
    for (int i = 0; i < m; ++i)
        for (int t = 0; t <= k; ++t) M[k + i][i + t] = B[static_cast<std::size_t>(k - t)];
    Poly1 prev = Poly1::constant(R, R.one());
    bool negate = false;
    for (int c = 0; c < n - 1; ++c) {
        if (M[c][c].is_zero()) {
            int r = c + 1;
            while (r < n && M[r][c].is_zero()) ++r;
            if (r == n) return Poly1(R);
            std::swap(M[c], M[r]);
            negate = !negate;
        }
        for (int i = c + 1; i < n; ++i) {
            for (int j = c + 1; j < n; ++j) M[i][j] = (M[i][j] * M[c][c] - M[i][c] * M[c][j]) / prev;
            M[i][c] = Poly1(R);
        }
        prev = M[c][c];
    }
    Poly1 det = M[n - 1][n - 1];
    return negate ? det.scaled(R.neg(R.one())) : det;
}

Poly1 common_factor(const Poly1& a, const Poly1& b) {
    if (a.is_zero() && b.is_zero()) throw InputError("the two curves share a component");
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    return gcd(a, b);
}

void sort_unique(std::vector<ClosedPoint>& pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
}

}  // namespace

std::array<Elem, 3> ClosedPoint::coords_in(const GaloisRing& K) const {
    if (&K == field) return coords;
    const FieldEmbedding& e = embedding(*field, K, base);
    return {e.map(coords[0]), e.map(coords[1]), e.map(coords[2])};
}

bool ClosedPoint::lies_on(const Form& f) const {
    if (f.is_zero()) return true;
    return field->is_zero(f.mapped(embedding(*base, *field)).eval(coords));
}

std::string ClosedPoint::to_string() const {
    const std::string var = degree > 1 ? "v" : "w";
    std::string s = "(" + field->to_string(coords[0], var) + " : " + field->to_string(coords[1], var) + " : " +
                    field->to_string(coords[2], var) + ")";
    if (degree > 1) s += " deg " + std::to_string(degree) + " in " + field->describe();
    return s;
}

bool operator<(const ClosedPoint& a, const ClosedPoint& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    for (int i = 0; i < 3; ++i) {
        auto xa = a.field->index(a.coords[i]), xb = b.field->index(b.coords[i]);
        if (xa != xb) return xa < xb;
    }
    return false;
}

ClosedPoint closed_point(const GaloisRing& base, const GaloisRing& K, std::array<Elem, 3> pt) {
    int chart = 2;
    while (chart >= 0 && K.is_zero(pt[chart])) --chart;
    if (chart < 0) throw InputError("a projective point needs a nonzero coordinate");
    const Elem s = K.inv(pt[chart]);
    for (auto& c : pt) c = K.mul(c, s);
    std::vector<std::array<Elem, 3>> orbit{pt};
    for (;;) {
        std::array<Elem, 3> next;
        for (int i = 0; i < 3; ++i) next[i] = K.pow(orbit.back()[i], base.residue_order());
        if (next == pt) break;
        orbit.push_back(next);
    }
    const int d = static_cast<int>(orbit.size());
    const GaloisRing& L = extension(base, d);
    const FieldEmbedding& e = embedding(L, K, &base);
    ClosedPoint best;
    bool have = false;
    for (const auto& q : orbit) {
        ClosedPoint c{&base, &L, d, chart, {e.preimage(q[0]), e.preimage(q[1]), e.preimage(q[2])}};
        if (!have || c < best) best = c;
        have = true;
    }
    return best;
}

Curve::Curve(const Form& f) {
    if (!is_irreducible(f)) throw InputError("curve polynomial " + f.to_string() + " is not irreducible");
    poly = f.normalized();
}

Curve Curve::trusted(const Form& f) {
    Curve c;
    c.poly = f;
    return c;
}

std::vector<ClosedPoint> intersection_points(const Form& f, const Form& g) {
    const GaloisRing& F = *f.ring;
    std::vector<ClosedPoint> out;
    // Affine part Z = 1: project to x through the resultant in y.
    auto Ay = coeffs_in_y(f), By = coeffs_in_y(g);
    Poly1 R = resultant(Ay, By, F);
    if (R.is_zero()) throw InputError("the forms " + f.to_string() + " and " + g.to_string() + " share a factor");
    if (R.degree() >= 1) {
        for (const auto& [pi, mult] : factor(R)) {
            const GaloisRing& K1 = extension(F, pi.degree());
            const FieldEmbedding& e1 = embedding(F, K1);
            const Elem x0 = roots(map_poly(pi, e1)).at(0);
            auto at_x0 = [&](const std::vector<Poly1>& C) {
                Poly1 r(K1);
                for (const auto& P : C) r.c.push_back(map_poly(P, e1).eval(x0));
                r.trim();
                return r;
            };
            Poly1 h = common_factor(at_x0(Ay), at_x0(By));
            if (h.degree() < 1) continue;
            for (const auto& [rho, m2] : factor(h)) {
                const GaloisRing& K2 = extension(F, pi.degree() * rho.degree());
                const FieldEmbedding& e12 = embedding(K1, K2, &F);
                const Elem y0 = roots(map_poly(rho, e12)).at(0);
                out.push_back(closed_point(F, K2, {e12.map(x0), y0, K2.one()}));
            }
        }
    }
    // The line Z = 0: points (x : 1 : 0) and (1 : 0 : 0).
    auto on_line = [&](const Form& h) {
        Poly1 r(F);
        for (const auto& [e, c] : h.terms) {
            if (e[2] != 0) continue;
            if (r.c.size() <= static_cast<std::size_t>(e[0])) r.c.resize(static_cast<std::size_t>(e[0] + 1), F.zero());
            r.c[static_cast<std::size_t>(e[0])] = c;
        }
        r.trim();
        return r;
    };
    Poly1 h = common_factor(on_line(f), on_line(g));
    if (h.degree() >= 1) {
        for (const auto& [rho, m] : factor(h)) {
            const GaloisRing& K = extension(F, rho.degree());
            const Elem x0 = roots(map_poly(rho, embedding(F, K))).at(0);
            out.push_back(closed_point(F, K, {x0, K.one(), K.zero()}));
        }
    }
    if (F.is_zero(f.coeff({f.degree, 0, 0})) && F.is_zero(g.coeff({g.degree, 0, 0})))
        out.push_back(closed_point(F, F, {F.one(), F.zero(), F.zero()}));
    sort_unique(out);
    return out;
}

std::vector<ClosedPoint> singular_points(const Curve& y) {
    const Form& F = y.poly;
    if (F.degree <= 1) return {};
    std::array<Form, 3> d{F.partial(0), F.partial(1), F.partial(2)};
    const Form* G = nullptr;
    for (const auto& g : d)
        if (!g.is_zero()) {
            G = &g;
            break;
        }
    if (G == nullptr) throw InputError("curve " + F.to_string() + " has all partial derivatives zero");
    std::vector<ClosedPoint> out;
    for (const auto& x : intersection_points(F, *G))
        if (x.lies_on(d[0]) && x.lies_on(d[1]) && x.lies_on(d[2])) out.push_back(x);
    return out;
}

int AffinePoly::total_degree() const {
    int d = -1;
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = 0; j < c[i].size(); ++j)
            if (!ring->is_zero(c[i][j])) d = std::max(d, static_cast<int>(i + j));
    return d;
}

int AffinePoly::order() const {
    int d = -1;
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = 0; j < c[i].size(); ++j)
            if (!ring->is_zero(c[i][j]) && (d < 0 || static_cast<int>(i + j) < d)) d = static_cast<int>(i + j);
    return d;
}

AffinePoly AffinePoly::transposed() const {
    AffinePoly t{ring, {}};
    const std::size_t n = c.size();
    t.c.assign(n, std::vector<Elem>(n, ring->zero()));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) t.c[j][i] = c[i][j];
    return t;
}

AffinePoly translate(const Form& f, int chart, const std::array<Elem, 3>& pt) {
    const GaloisRing& R = *f.ring;
    const auto [va, vb] = affine_vars(chart);
    const std::size_t n = static_cast<std::size_t>(f.degree + 1);
    AffinePoly A{&R, std::vector<std::vector<Elem>>(n, std::vector<Elem>(n, R.zero()))};
    for (const auto& [e, c] : f.terms) {
        const Elem scale = R.mul(c, R.pow(pt[chart], static_cast<std::uint64_t>(e[chart])));
        // (a + pt[va])^e[va] (b + pt[vb])^e[vb]
        for (int i = 0; i <= e[va]; ++i) {
            Elem ci = R.scale(R.pow(pt[va], static_cast<std::uint64_t>(e[va] - i)), binom(e[va], i));
            if (R.is_zero(ci)) continue;
            for (int j = 0; j <= e[vb]; ++j) {
                Elem cj = R.scale(R.pow(pt[vb], static_cast<std::uint64_t>(e[vb] - j)), binom(e[vb], j));
                A.c[i][j] = R.add(A.c[i][j], R.mul(scale, R.mul(ci, cj)));
            }
        }
    }
    return A;
}

std::vector<Branch> branches_at(const Curve& y, const ClosedPoint& x) {
    const GaloisRing& Fq = *x.base;
    const GaloisRing& L = *x.field;
    const AffinePoly T = translate(y.poly.mapped(embedding(Fq, L)), x.chart, x.coords);
    const int r = T.order();
    if (r < 0) throw InputError("zero curve polynomial");
    if (r == 0) throw NotOnCurve("point " + x.to_string() + " is not on " + y.to_string());
    // Tangent cone F_r(1, w); the vertical direction a = 0 appears as missing degree.
    Poly1 S(L);
    for (int j = 0; j <= r; ++j) S.c.push_back(T.c[static_cast<std::size_t>(r - j)][static_cast<std::size_t>(j)]);
    S.trim();
    const int vertical = r - S.degree();
    const std::string where = " of " + y.to_string() + " at " + x.to_string();
    if (vertical > 1) throw UnsupportedSingularity("repeated vertical tangent" + where);
    std::vector<Branch> out;
    if (S.degree() >= 1) {
        for (const auto& [pi, mult] : factor(S)) {
            if (mult > 1) throw UnsupportedSingularity("repeated tangent" + where);
            const GaloisRing& K = extension(L, pi.degree());
            const FieldEmbedding& e = embedding(L, K, &Fq);
            Branch z;
            z.point = x;
            z.curve = y;
            z.field = &K;
            z.chart = x.chart;
            z.multiplicity = r;
            z.slope = roots(map_poly(pi, e)).at(0);
            z.coords = x.coords_in(K);
            z.local = translate(y.poly.mapped(embedding(Fq, K)), x.chart, z.coords);
            out.push_back(std::move(z));
        }
    }
    if (vertical == 1) {
        Branch z;
        z.point = x;
        z.curve = y;
        z.field = &L;
        z.chart = x.chart;
        z.swapped = true;
        z.multiplicity = r;
        z.slope = L.zero();
        z.coords = x.coords;
        z.local = T.transposed();
        out.push_back(std::move(z));
    }
    return out;
}

Laurent1 Branch::phi(int precision) const {
    const GaloisRing& K = *field;
    const int r = multiplicity;
    const int P = std::max(precision - 1, 1);  // precision of s; phi = u (slope + s)
    const int D = local.total_degree();
    // G(a, s) = F(a, a (slope + s)) / a^r = sum_j Q_j(a) (slope + s)^j.
    std::vector<Laurent1> Q(static_cast<std::size_t>(D + 1), Laurent1::zero(K));
    for (std::size_t i = 0; i < local.c.size(); ++i)
        for (std::size_t j = 0; j < local.c[i].size(); ++j)
            if (!K.is_zero(local.c[i][j]))
                Q[j] = Q[j] + Laurent1::monomial(K, local.c[i][j], static_cast<int>(i + j) - r);
    auto eval = [&](const Laurent1& W, bool derivative) {
        Laurent1 acc = Laurent1::zero(K);
        for (int j = D; j >= (derivative ? 1 : 0); --j) {
            Laurent1 q = derivative ? Q[j].scaled(K.from_int(j)) : Q[j];
            acc = cut(acc * W, P) + q;
        }
        return cut(acc, P);
    };
    Laurent1 s = Laurent1::zero(K);
    Laurent1 G = Laurent1::zero(K);
    int steps = 2;
    for (int k = 1; k < P; k *= 2) ++steps;
    for (int it = 0; it < steps; ++it) {
        Laurent1 W = s + Laurent1::monomial(K, slope, 0);
        G = eval(W, false);
        if (G.coeffs.empty()) break;
        Laurent1 Gs = eval(W, true);
        s = cut(s - cut(G * Gs.inv(P), P), P);
    }
    G = eval(s + Laurent1::monomial(K, slope, 0), false);
    if (!G.coeffs.empty()) throw Error("Newton iteration for the branch" + to_string() + " did not converge");
    Laurent1 ph = (s + Laurent1::monomial(K, slope, 0)).shifted(1);
    return ph.truncated(P + 1);
}

std::string Branch::to_string() const {
    std::string s = "branch of " + curve.to_string() + " at " + point.to_string();
    s += " (tangent ";
    s += swapped ? "vertical" : "slope " + field->to_string(slope);
    if (field != point.field) s += ", over " + field->describe();
    return s + ")";
}

Laurent2 expand_form(const Form& f, const Branch& z, const Window& w) {
    const GaloisRing& K = *z.field;
    const int P = std::max(w.t1_terms, 2) + z.multiplicity;
    AffinePoly A = translate(f.mapped(embedding(*z.point.base, K)), z.chart, z.coords);
    if (z.swapped) A = A.transposed();
    const Laurent2 B = Laurent2::from_level(z.phi(P), 0) + Laurent2::monomial(K, K.one(), 0, 1);
    const int n = static_cast<int>(A.c.size());
    Laurent2 acc = Laurent2::zero(K);
    for (int j = n - 1; j >= 0; --j) {
        Laurent1 q = Laurent1::zero(K);
        for (int i = 0; i < n; ++i)
            if (!K.is_zero(A.c[i][j])) q = q + Laurent1::monomial(K, A.c[i][j], i);
        acc = acc * B + Laurent2::from_level(q, 0);
    }
    if (f.normalized() == z.curve.poly) {
        // The branch lies on the curve exactly; only the truncation of phi leaves a tail here.
        if (acc.jlo != 0 || acc.levels.empty() || !acc.levels[0].is_zero_on_window())
            throw Error("branch expansion does not satisfy its curve" + z.to_string());
        acc.levels[0] = Laurent1::zero(K);
        acc.normalize();
    }
    return acc;
}

Laurent2 expand(const RationalFunction& f, const Branch& z, const Window& w) {
    if (f.is_zero()) throw InputError("cannot expand the zero function");
    const GaloisRing& K = *z.field;
    Laurent2 E = Laurent2::constant(K, embedding(*z.point.base, K).map(f.unit));
    for (const auto& [P, e] : f.factors) E = E * ls2_pow(expand_form(P, z, w), e, w);
    return E;
}

std::vector<Curve> curves_through_point(const ClosedPoint& x, const std::vector<RationalFunction>& funcs) {
    std::set<Form, decltype([](const Form& a, const Form& b) { return a < b; })> seen;
    for (const auto& f : funcs) {
        if (f.is_zero()) continue;
        for (const auto& [P, e] : f.factors) seen.insert(P);
    }
    std::vector<Curve> out;
    for (const auto& P : seen)
        if (x.lies_on(P)) out.push_back(Curve::trusted(P));
    return out;
}

std::vector<ClosedPoint> points_on_curve(const Curve& y, const std::vector<RationalFunction>& funcs) {
    const GaloisRing& F = *y.poly.ring;
    std::set<Form, decltype([](const Form& a, const Form& b) { return a < b; })> others;
    for (const auto& f : funcs) {
        if (f.is_zero()) continue;
        for (const auto& [P, e] : f.factors)
            if (!(P == y.poly)) others.insert(P);
    }
    for (int i = 0; i < 3; ++i) {
        Form line = Form::variable(F, i);
        if (!(line == y.poly)) others.insert(line);
    }
    std::vector<ClosedPoint> out;
    for (const auto& P : others) {
        auto pts = intersection_points(y.poly, P);
        out.insert(out.end(), pts.begin(), pts.end());
    }
    auto sing = singular_points(y);
    out.insert(out.end(), sing.begin(), sing.end());
    sort_unique(out);
    return out;
}

}  // namespace hlf
