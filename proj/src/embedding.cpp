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

#include "hlf/embedding.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <tuple>

#include "hlf/poly1.hpp"

namespace hlf {

FieldEmbedding::FieldEmbedding(const GaloisRing& small, const GaloisRing& big, const Elem& r) : small_(&small), big_(&big) {
    if (small.p() != big.p() || big.degree() % small.degree() != 0 || !small.is_field() || !big.is_field())
        throw InputError("no embedding " + small.describe() + " -> " + big.describe());
    Elem acc = big.one();
    for (int i = 0; i < small.degree(); ++i) {
        powers_.push_back(acc);
        acc = big.mul(acc, r);
    }
    if (small.degree() == 1) powers_.push_back(r);
}

Elem FieldEmbedding::map(const Elem& a) const {
    const GaloisRing& B = *big_;
    Elem r = B.zero();
    for (int i = 0; i < small_->degree(); ++i)
        if (a.c[i] != 0) r = B.add(r, B.scale(powers_[i], a.c[i]));
    return r;
}

bool FieldEmbedding::solve(const Elem& b, Elem& out) const {
    // Columns: coordinates of powers_[i]; solve sum a_i powers_[i] = b over GF(p).
    const int rows = big_->degree(), cols = small_->degree();
    const std::int64_t p = big_->p();
    std::vector<std::vector<std::int64_t>> M(rows, std::vector<std::int64_t>(cols + 1));
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) M[r][c] = powers_[c].c[r];
        M[r][cols] = b.c[r];
    }
    auto inv = [&](std::int64_t a) {
        std::int64_t res = 1, e = p - 2;
        while (e > 0) {
            if (e & 1) res = res * a % p;
            a = a * a % p;
            e >>= 1;
        }
        return res;
    };
    std::vector<int> pivot_col;
    int row = 0;
    for (int c = 0; c < cols && row < rows; ++c) {
        int piv = -1;
        for (int r = row; r < rows; ++r)
            if (M[r][c] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(M[piv], M[row]);
        std::int64_t s = inv(M[row][c]);
        for (auto& x : M[row]) x = x * s % p;
        for (int r = 0; r < rows; ++r) {
            if (r == row || M[r][c] == 0) continue;
            std::int64_t f = M[r][c];
            for (int k = 0; k <= cols; ++k) M[r][k] = ((M[r][k] - f * M[row][k]) % p + p) % p;
        }
        pivot_col.push_back(c);
        ++row;
    }
    for (int r = row; r < rows; ++r)
        if (M[r][cols] != 0) return false;
    out = small_->zero();
    for (int r = 0; r < row; ++r) out.c[pivot_col[r]] = static_cast<std::uint32_t>(M[r][cols]);
    return true;
}

bool FieldEmbedding::in_image(const Elem& b) const {
    Elem tmp;
    return solve(b, tmp);
}

Elem FieldEmbedding::preimage(const Elem& b) const {
    Elem out;
    if (!solve(b, out)) throw InputError("element " + big_->to_string(b) + " is not in the image of " + small_->describe());
    return out;
}

Elem FieldEmbedding::norm(const Elem& b) const {
    std::uint64_t e = (big_->residue_order() - 1) / (small_->residue_order() - 1);
    return preimage(big_->pow(b, e));
}

Elem FieldEmbedding::trace(const Elem& b) const {
    const GaloisRing& B = *big_;
    Elem s = B.zero(), t = b;
    for (int i = 0; i < relative_degree(); ++i) {
        s = B.add(s, t);
        t = B.pow(t, small_->residue_order());
    }
    return preimage(s);
}

const FieldEmbedding& embedding(const GaloisRing& small, const GaloisRing& big, const GaloisRing* base) {
    static std::recursive_mutex mu;
    static std::map<std::tuple<RingRef, RingRef, RingRef>, std::unique_ptr<FieldEmbedding>> cache;
    std::lock_guard lock(mu);
    if (base == &small || (base != nullptr && base->degree() == 1)) base = nullptr;
    auto key = std::make_tuple(&small, &big, base);
    if (auto it = cache.find(key); it != cache.end()) return *it->second;

    if (small.p() != big.p() || big.degree() % small.degree() != 0)
        throw InputError("no embedding " + small.describe() + " -> " + big.describe());
    if (&small == &big) {
        auto id = std::make_unique<FieldEmbedding>(small, big, small.generator());
        auto& ref = *id;
        cache.emplace(key, std::move(id));
        return ref;
    }
    Poly1 mod(big);
    for (auto c : small.modulus()) mod.c.push_back(big.from_int(c));
    mod.trim();
    std::unique_ptr<FieldEmbedding> chosen;
    for (const Elem& r : roots(mod)) {
        auto cand = std::make_unique<FieldEmbedding>(small, big, r);
        if (base != nullptr) {
            const FieldEmbedding& to_small = embedding(*base, small);
            const FieldEmbedding& to_big = embedding(*base, big);
            if (!(cand->map(to_small.generator_image()) == to_big.generator_image())) continue;
        }
        chosen = std::move(cand);
        break;
    }
    if (!chosen) throw InputError("no compatible embedding " + small.describe() + " -> " + big.describe());
    auto& ref = *chosen;
    cache.emplace(key, std::move(chosen));
    return ref;
}

}  // namespace hlf
