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

#include "hlf/symbols.hpp"

#include "hlf/mutation.hpp"

namespace hlf {

namespace {

// Only the leading coefficients matter for the symbol values; a few extra terms keep the series
// arithmetic honest without costing much.
constexpr Window kSymbolWindow{4, 2};

Laurent1 pow1(const Laurent1& f, long e, int terms) {
    const GaloisRing& R = *f.ring;
    Laurent1 base = e < 0 ? f.inv(terms) : f;
    unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
    Laurent1 r = Laurent1::monomial(R, R.one(), 0);
    while (k > 0) {
        if (k & 1) r = r * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return r;
}

Elem minus_one_pow(const GaloisRing& R, long e) { return e % 2 == 0 ? R.one() : R.neg(R.one()); }

}  // namespace

Elem tame1(const Laurent1& f, const Laurent1& g) {
    const GaloisRing& R = *f.ring;
    if (f.coeffs.empty() || g.coeffs.empty()) throw InsufficientPrecision("tame symbol argument has undetermined leading term", 1);
    const int vf = f.lo, vg = g.lo;
    const int terms = 4;
    Laurent1 ft = f.truncated(f.lo + terms), gt = g.truncated(g.lo + terms);
    Laurent1 prod = pow1(ft, vg, terms) * pow1(gt, -static_cast<long>(vf), terms);
    return R.mul(minus_one_pow(R, static_cast<long>(vf) * vg), prod.coeff(0));
}

TameExponents tame_exponents(const Laurent2& f1, const Laurent2& f2, const Laurent2& f3) {
    TameExponents t{};
    const Laurent2* fs[3] = {&f1, &f2, &f3};
    for (int j = 0; j < 3; ++j) {
        Valuation2 v = ls2_valuation(*fs[j]);
        t.M[0][j] = v.v1;
        t.M[1][j] = v.v2;
    }
    auto minor = [&](int skip) {
        int a = skip == 0 ? 1 : 0, b = skip == 2 ? 1 : 2;
        return static_cast<long>(t.M[0][a]) * t.M[1][b] - static_cast<long>(t.M[0][b]) * t.M[1][a];
    };
    for (int j = 0; j < 3; ++j) t.b[j] = (j % 2 == 0 ? 1 : -1) * minor(j);
    // b = sum over rows s and column pairs i < j of v_s(f_i) v_s(f_j) times the 1x1 minor left after
    // deleting row s and columns i, j.
    t.sign = 0;
    for (int s = 0; s < 2; ++s)
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) {
                int k = 3 - i - j;
                t.sign += static_cast<long>(t.M[s][i]) * t.M[s][j] * t.M[1 - s][k];
            }
    if (mutations().tame_sign_flip) t.sign += 1;
    return t;
}

Elem tame2_det(const Laurent2& f1, const Laurent2& f2, const Laurent2& f3) {
    const GaloisRing& R = *f1.ring;
    TameExponents t = tame_exponents(f1, f2, f3);
    const Laurent2* fs[3] = {&f1, &f2, &f3};
    Laurent2 prod = Laurent2::constant(R, R.one());
    for (int j = 0; j < 3; ++j)
        if (t.b[j] != 0) prod = prod * ls2_pow(fs[j]->truncated_relative(kSymbolWindow), t.b[j], kSymbolWindow);
    return R.mul(minus_one_pow(R, t.sign), ls2_coeff(prod, 0, 0));
}

Elem tame2_direct(const Laurent2& f, const Laurent2& g, const Laurent2& h) {
    const GaloisRing& R = *f.ring;
    Valuation2 vf = ls2_valuation(f), vg = ls2_valuation(g), vh = ls2_valuation(h);
    // Written with y = v2 and x = v1.
    long ef = static_cast<long>(vg.v2) * vh.v1 - static_cast<long>(vh.v2) * vg.v1;
    long eg = static_cast<long>(vf.v2) * vh.v1 - static_cast<long>(vh.v2) * vf.v1;
    long eh = static_cast<long>(vf.v2) * vg.v1 - static_cast<long>(vg.v2) * vf.v1;
    long alpha = static_cast<long>(vf.v2) * vg.v2 * vh.v1 + static_cast<long>(vf.v2) * vh.v2 * vg.v1 +
                 static_cast<long>(vg.v2) * vh.v2 * vf.v1 + static_cast<long>(vf.v2) * vg.v1 * vh.v1 +
                 static_cast<long>(vg.v2) * vf.v1 * vh.v1 + static_cast<long>(vh.v2) * vf.v1 * vg.v1;
    Laurent2 prod = ls2_pow(f.truncated_relative(kSymbolWindow), ef, kSymbolWindow) *
                    ls2_pow(g.truncated_relative(kSymbolWindow), -eg, kSymbolWindow) *
                    ls2_pow(h.truncated_relative(kSymbolWindow), eh, kSymbolWindow);
    Elem raw = R.mul(minus_one_pow(R, alpha), ls2_coeff(prod, 0, 0));
    // The exponents above are the negated cofactors, so this form is the inverse of the determinant form.
    return R.inv(raw);
}

Elem tame2_boundary_oracle(const Laurent2& f1, const Laurent2& f2, const Laurent2& f3) {
    const GaloisRing& R = *f1.ring;
    // f_i = t2^(a_i) u_i with u_i a unit for t2; the first boundary sends {f1, f2, f3} to a product of
    // symbols in the residue field of unit parts u_i mod t2, and the second boundary is tame1.
    long a[3];
    Laurent1 u[3];
    const Laurent2* fs[3] = {&f1, &f2, &f3};
    for (int i = 0; i < 3; ++i) {
        Valuation2 v = ls2_valuation(*fs[i]);
        a[i] = v.v2;
        u[i] = fs[i]->levels[0];
    }
    Laurent1 minus1 = Laurent1::monomial(R, R.neg(R.one()), 0);
    auto powe = [&](const Elem& x, long e) { return R.pow_signed(x, e); };
    Elem r = R.one();
    r = R.mul(r, powe(tame1(u[1], u[2]), a[0]));
    r = R.mul(r, powe(tame1(u[0], u[2]), -a[1]));
    r = R.mul(r, powe(tame1(u[0], u[1]), a[2]));
    r = R.mul(r, powe(tame1(minus1, u[2]), a[0] * a[1]));
    r = R.mul(r, powe(tame1(minus1, u[1]), -a[0] * a[2]));
    r = R.mul(r, powe(tame1(minus1, u[0]), a[1] * a[2]));
    return r;
}

Elem tame2_branch(const Laurent2& f, const Laurent2& g, const Laurent2& h, const FieldEmbedding& emb) {
    if (f.ring != &emb.big()) throw InputError("branch series are not over the embedding's big field");
    return emb.norm(tame2_det(f, g, h));
}

WittVector witt_pair(const Laurent2& f1, const Laurent2& f2, const WittSeries& g, const Window& w, LiftStrategy lift) {
    const GaloisRing& K = *f1.ring;
    const int m = g.length();
    const GaloisRing& gr = K.with_precision(m);
    const GaloisRing& zpm = GaloisRing::get(K.p(), 1, m);
    TwoForm omega = dlog_wedge(lift_series(f1, gr, lift), lift_series(f2, gr, lift), w);
    std::vector<Laurent2> gh = ghost(g, lift, m);
    std::vector<RingElem> traced;
    for (int i = 0; i < m; ++i) {
        Elem r = residue_of_product(gh[i], omega);
        // Tracing the ghost components gives the Witt-vector trace W_m(F_q) -> W_m(F_p).
        traced.push_back({zpm, zpm.from_int(gr.trace(r))});
    }
    return from_ghost(traced);
}

WittVector witt_pair_branch_sum(const std::vector<WittVector>& values) {
    if (values.empty()) throw InputError("empty branch list");
    WittVector acc = values[0];
    for (std::size_t i = 1; i < values.size(); ++i) acc = witt_add(acc, values[i]);
    return acc;
}

CombinedValue combined(const Laurent2& f, const Laurent2& g, const Laurent2& h, const WittSeries& gw, const Window& w) {
    return {{*f.ring, tame2_det(f, g, h)}, witt_pair(f, g, gw, w)};
}

}  // namespace hlf
