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

#include "hlf/galois_ring.hpp"

#include <map>
#include <memory>
#include <sstream>
#include <tuple>

namespace hlf {

bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

namespace {

// Dense polynomials over GF(p), low degree first, used only for modulus search.
using ModPoly = std::vector<std::int64_t>;

void trim(ModPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
    std::int64_t r = 1, e = p - 2;
    a %= p;
    while (e > 0) {
        if (e & 1) r = r * a % p;
        a = a * a % p;
        e >>= 1;
    }
    return r;
}

ModPoly poly_mod(ModPoly a, const ModPoly& m, std::int64_t p) {
    trim(a);
    const std::int64_t lead_inv = inv_mod(m.back(), p);
    const std::size_t dm = m.size() - 1;
    while (a.size() > dm) {
        std::int64_t t = a.back() * lead_inv % p;
        std::size_t shift = a.size() - 1 - dm;
        for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = ((a[shift + i] - t * m[i]) % p + p) % p;
        trim(a);
    }
    return a;
}

ModPoly poly_mulmod(const ModPoly& a, const ModPoly& b, const ModPoly& m, std::int64_t p) {
    if (a.empty() || b.empty()) return {};
    ModPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    return poly_mod(std::move(r), m, p);
}

ModPoly poly_powmod(ModPoly base, std::uint64_t e, const ModPoly& m, std::int64_t p) {
    ModPoly r{1};
    base = poly_mod(std::move(base), m, p);
    while (e > 0) {
        if (e & 1) r = poly_mulmod(r, base, m, p);
        base = poly_mulmod(base, base, m, p);
        e >>= 1;
    }
    return r;
}

ModPoly poly_gcd(ModPoly a, ModPoly b, std::int64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        ModPoly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// x^(p^k) mod m by k successive p-th powers.
ModPoly frobenius_iterate(int k, const ModPoly& m, std::int64_t p) {
    ModPoly x{0, 1};
    ModPoly r = poly_mod(x, m, p);
    for (int i = 0; i < k; ++i) r = poly_powmod(r, static_cast<std::uint64_t>(p), m, p);
    return r;
}

ModPoly sub_x(ModPoly a, std::int64_t p) {
    if (a.size() < 2) a.resize(2, 0);
    a[1] = ((a[1] - 1) % p + p) % p;
    trim(a);
    return a;
}

std::uint64_t checked_pow(std::uint64_t b, int e, std::uint64_t limit) {
    std::uint64_t r = 1;
    for (int i = 0; i < e; ++i) {
        if (r > limit / b) throw InputError("ring too large for 64-bit bookkeeping");
        r *= b;
    }
    return r;
}

}  // namespace

bool is_irreducible_mod_p(const std::vector<std::int64_t>& poly, int p) {
    ModPoly f = poly;
    for (auto& c : f) c = ((c % p) + p) % p;
    trim(f);
    if (f.size() < 2) return false;
    const int n = static_cast<int>(f.size()) - 1;
    if (n == 1) return true;
    // x^(p^n) = x mod f, and gcd(x^(p^(n/r)) - x, f) = 1 for each prime r | n.
    if (!sub_x(frobenius_iterate(n, f, p), p).empty()) return false;
    for (int r = 2; r <= n; ++r) {
        if (n % r != 0 || !is_prime(r)) continue;
        ModPoly g = poly_gcd(f, sub_x(frobenius_iterate(n / r, f, p), p), p);
        if (g.size() > 1) return false;
    }
    return true;
}

std::vector<std::int64_t> canonical_modulus(int p, int n) {
    if (n == 1) return {0, 1};
    const std::uint64_t count = checked_pow(static_cast<std::uint64_t>(p), n, ~std::uint64_t{0} / 4);
    for (std::uint64_t code = 0; code < count; ++code) {
        ModPoly f(n + 1, 0);
        std::uint64_t c = code;
        for (int i = 0; i < n; ++i) {
            f[i] = static_cast<std::int64_t>(c % p);
            c /= p;
        }
        f[n] = 1;
        if (f[0] == 0) continue;
        if (is_irreducible_mod_p(f, p)) return f;
    }
    throw InputError("no irreducible polynomial found");  // unreachable for prime p
}

const GaloisRing& gf_make(int p, int n) {
    if (!is_prime(p)) throw InputError("p = " + std::to_string(p) + " is not prime");
    if (n < 1 || n > 8) throw InputError("extension degree n must lie in [1, 8]");
    return GaloisRing::field(p, n);
}

const GaloisRing& GaloisRing::get(int p, int n, int precision) {
    static std::recursive_mutex registry_mutex;
    static std::map<std::tuple<int, int, int>, std::unique_ptr<GaloisRing>> registry;
    if (!is_prime(p)) throw InputError("p = " + std::to_string(p) + " is not prime");
    if (n < 1 || n > kMaxDegree) throw InputError("extension degree out of range: " + std::to_string(n));
    if (precision < 1) throw InputError("p-adic precision must be at least 1");
    std::lock_guard lock(registry_mutex);
    auto key = std::make_tuple(p, n, precision);
    auto it = registry.find(key);
    if (it != registry.end()) return *it->second;
    auto ring = std::unique_ptr<GaloisRing>(new GaloisRing(p, n, precision));
    auto& ref = *ring;
    registry.emplace(key, std::move(ring));
    return ref;
}

GaloisRing::GaloisRing(int p, int n, int N) : p_(p), n_(n), N_(N) {
    pN_ = static_cast<std::int64_t>(checked_pow(static_cast<std::uint64_t>(p), N, kMaxCharacteristicPower));
    if (static_cast<std::uint64_t>(pN_) > kMaxCharacteristicPower) throw InputError("p^N exceeds 2^26");
    q_ = checked_pow(static_cast<std::uint64_t>(p), n, ~std::uint64_t{0} / 4);
    modulus_ = canonical_modulus(p, n);

    // Frobenius lift: the root of M congruent to X^p, by Newton iteration.
    Elem x = generator();
    Elem sigma_x = pow(x, static_cast<std::uint64_t>(p));
    if (N > 1) {
        std::vector<std::int64_t> deriv(n_);
        for (int i = 1; i <= n_; ++i) deriv[i - 1] = mod(modulus_[i] * i);
        auto eval = [&](const std::vector<std::int64_t>& poly, const Elem& at) {
            Elem acc = zero();
            for (int i = static_cast<int>(poly.size()) - 1; i >= 0; --i) acc = add(mul(acc, at), from_int(poly[i]));
            return acc;
        };
        for (int it = 0; it < N + 1; ++it) {
            Elem fval = eval(modulus_, sigma_x);
            if (is_zero(fval)) break;
            sigma_x = sub(sigma_x, mul(fval, inv(eval(deriv, sigma_x))));
        }
    }
    frob_images_.resize(n_);
    Elem acc = one();
    for (int i = 0; i < n_; ++i) {
        frob_images_[i] = acc;
        acc = mul(acc, sigma_x);
    }
    // Trace of X^i as the trace of multiplication by X^i.
    basis_traces_.resize(n_);
    Elem xi = one();
    for (int i = 0; i < n_; ++i) {
        std::int64_t t = 0;
        Elem xk = one();
        for (int k = 0; k < n_; ++k) {
            t += mul(xi, xk).c[k];
            xk = mul(xk, x);
        }
        basis_traces_[i] = mod(t);
        xi = mul(xi, x);
    }
}

Elem GaloisRing::generator() const {
    if (n_ == 1) return zero();
    Elem e;
    e.c[1] = 1;
    return e;
}

Elem GaloisRing::from_coeffs(std::span<const std::int64_t> coeffs) const {
    std::vector<std::int64_t> work(std::max<std::size_t>(coeffs.size(), n_), 0);
    for (std::size_t i = 0; i < coeffs.size(); ++i) work[i] = mod(coeffs[i]);
    for (std::size_t k = work.size(); k-- > static_cast<std::size_t>(n_);) {
        std::int64_t t = work[k];
        work[k] = 0;
        if (t == 0) continue;
        for (int i = 0; i < n_; ++i) work[k - n_ + i] = mod(work[k - n_ + i] - t * modulus_[i]);
    }
    Elem e;
    for (int i = 0; i < n_; ++i) e.c[i] = static_cast<std::uint32_t>(work[i]);
    return e;
}

bool GaloisRing::is_unit(const Elem& a) const noexcept {
    for (int i = 0; i < n_; ++i)
        if (a.c[i] % p_ != 0) return true;
    return false;
}

Elem GaloisRing::mul_general(const Elem& a, const Elem& b) const noexcept {
    std::array<std::int64_t, 2 * kMaxDegree> prod{};
    for (int i = 0; i < n_; ++i) {
        if (a.c[i] == 0) continue;
        for (int j = 0; j < n_; ++j) prod[i + j] += std::int64_t{a.c[i]} * b.c[j] % pN_;
    }
    for (int k = 2 * n_ - 2; k >= 0; --k) prod[k] %= pN_;
    for (int k = 2 * n_ - 2; k >= n_; --k) {
        std::int64_t t = prod[k];
        if (t == 0) continue;
        for (int i = 0; i < n_; ++i) {
            if (modulus_[i] == 0) continue;
            prod[k - n_ + i] = (prod[k - n_ + i] - t * modulus_[i]) % pN_;
        }
    }
    Elem r;
    for (int i = 0; i < n_; ++i) {
        std::int64_t v = prod[i] % pN_;
        r.c[i] = static_cast<std::uint32_t>(v < 0 ? v + pN_ : v);
    }
    return r;
}

Elem GaloisRing::scale(const Elem& a, std::int64_t k) const noexcept {
    std::int64_t km = mod(k);
    Elem r;
    for (int i = 0; i < n_; ++i) r.c[i] = static_cast<std::uint32_t>(std::int64_t{a.c[i]} * km % pN_);
    return r;
}

Elem GaloisRing::pow(Elem a, std::uint64_t e) const noexcept {
    Elem r = one();
    while (e > 0) {
        if (e & 1) r = mul(r, a);
        e >>= 1;
        if (e) a = mul(a, a);
    }
    return r;
}

Elem GaloisRing::pow_signed(const Elem& a, std::int64_t e) const {
    if (e >= 0) return pow(a, static_cast<std::uint64_t>(e));
    return pow(inv(a), static_cast<std::uint64_t>(-e));
}

Elem GaloisRing::inv(const Elem& a) const {
    if (!is_unit(a)) throw NotInvertible("element " + to_string(a) + " is not a unit in " + describe());
    const GaloisRing& k = residue_field();
    Elem b = k.pow(k.reduce(a), q_ - 2);
    if (N_ == 1) return b;
    // Newton: b <- b (2 - a b), doubling the p-adic precision each step.
    Elem two = from_int(2);
    for (int prec = 1; prec < N_; prec *= 2) b = mul(b, sub(two, mul(a, b)));
    return b;
}

Elem GaloisRing::frobenius(const Elem& a) const noexcept {
    if (N_ == 1) return pow(a, static_cast<std::uint64_t>(p_));
    Elem r = zero();
    for (int i = 0; i < n_; ++i)
        if (a.c[i] != 0) r = add(r, scale(frob_images_[i], a.c[i]));
    return r;
}

Elem GaloisRing::frobenius_power(const Elem& a, int k) const noexcept {
    Elem r = a;
    for (int i = 0; i < ((k % n_) + n_) % n_; ++i) r = frobenius(r);
    return r;
}

std::int64_t GaloisRing::trace(const Elem& a) const noexcept {
    std::int64_t t = 0;
    for (int i = 0; i < n_; ++i) t = (t + std::int64_t{a.c[i]} * basis_traces_[i]) % pN_;
    return t;
}

std::int64_t GaloisRing::norm_to_prime(const Elem& a) const {
    if (!is_field()) throw InputError("norm is only provided for fields");
    Elem r = pow(a, (q_ - 1) / static_cast<std::uint64_t>(p_ - 1));
    return r.c[0];
}

Elem GaloisRing::reduce(const Elem& a) const noexcept {
    Elem r;
    for (int i = 0; i < n_; ++i) r.c[i] = a.c[i] % static_cast<std::uint32_t>(p_);
    return r;
}

Elem GaloisRing::teichmuller(const Elem& a) const {
    if (N_ == 1) return a;
    if (q_ <= (1u << 16)) {
        std::lock_guard lock(teich_mutex_);
        if (teich_table_.empty()) {
            const GaloisRing& k = residue_field();
            teich_table_.resize(q_);
            for (std::uint64_t idx = 0; idx < q_; ++idx) {
                Elem b = k.from_index(idx);
                for (int it = 0; it < N_; ++it) b = pow(b, q_);
                teich_table_[idx] = b;
            }
        }
        return teich_table_[residue_field().index(a)];
    }
    Elem b = a;
    for (int it = 0; it < N_; ++it) b = pow(b, q_);
    return b;
}

int GaloisRing::p_adic_valuation(const Elem& a) const noexcept {
    int v = N_;
    for (int i = 0; i < n_; ++i) {
        if (a.c[i] == 0) continue;
        int k = 0;
        std::uint32_t c = a.c[i];
        while (c % p_ == 0) {
            c /= p_;
            ++k;
        }
        v = std::min(v, k);
    }
    return v;
}

Elem GaloisRing::divide_by_p_power(const Elem& a, int k) const noexcept {
    std::uint32_t d = 1;
    for (int i = 0; i < k; ++i) d *= static_cast<std::uint32_t>(p_);
    Elem r;
    for (int i = 0; i < n_; ++i) r.c[i] = a.c[i] / d;
    return r;
}

std::uint64_t GaloisRing::index(const Elem& a) const noexcept {
    std::uint64_t idx = 0;
    for (int i = n_ - 1; i >= 0; --i) idx = idx * static_cast<std::uint64_t>(pN_) + a.c[i];
    return idx;
}

Elem GaloisRing::from_index(std::uint64_t idx) const noexcept {
    Elem e;
    for (int i = 0; i < n_; ++i) {
        e.c[i] = static_cast<std::uint32_t>(idx % static_cast<std::uint64_t>(pN_));
        idx /= static_cast<std::uint64_t>(pN_);
    }
    return e;
}

bool GaloisRing::less(const Elem& a, const Elem& b) const noexcept {
    for (int i = n_ - 1; i >= 0; --i)
        if (a.c[i] != b.c[i]) return a.c[i] < b.c[i];
    return false;
}

std::string GaloisRing::to_string(const Elem& a, const std::string& var) const {
    if (n_ == 1) return std::to_string(a.c[0]);
    std::ostringstream os;
    bool first = true;
    for (int i = n_ - 1; i >= 0; --i) {
        if (a.c[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0 || a.c[i] != 1) os << a.c[i];
        if (i > 0) {
            if (a.c[i] != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    if (first) os << "0";
    return os.str();
}

std::string GaloisRing::describe() const {
    std::ostringstream os;
    if (N_ == 1)
        os << "GF(" << p_ << "^" << n_ << ")";
    else
        os << "GR(" << p_ << "^" << N_ << ", " << n_ << ")";
    return os.str();
}

FqElem gf_trace(const FqElem& a) {
    const GaloisRing& prime = GaloisRing::field(a.ring->p(), 1);
    return {prime, prime.from_int(a.ring->trace(a.value))};
}

FqElem gf_norm(const FqElem& a) {
    const GaloisRing& prime = GaloisRing::field(a.ring->p(), 1);
    return {prime, prime.from_int(a.ring->norm_to_prime(a.value))};
}

GrElem gr_teichmuller(const FqElem& a, int precision) {
    const GaloisRing& gr = a.ring->with_precision(precision);
    return {gr, gr.teichmuller(a.value)};
}

GrElem gr_trace(const GrElem& a) {
    const GaloisRing& base = GaloisRing::get(a.ring->p(), 1, a.ring->precision());
    return {base, base.from_int(a.ring->trace(a.value))};
}

}  // namespace hlf
