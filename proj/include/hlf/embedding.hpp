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
 * @file embedding.hpp
 * @brief Embeddings of finite fields GF(p^a) -> GF(p^b), a | b, with norms and traces.
 *
 * The canonical embedding sends the generator of the small field to the
 * smallest root (by index) of its modulus in the big field. Relative to a base
 * field F, the embedding K -> K' is the smallest root compatible with the
 * canonical embeddings of F into K and into K'.
 */

#ifndef HLF_EMBEDDING_HPP
#define HLF_EMBEDDING_HPP

#include <vector>

#include "hlf/galois_ring.hpp"

namespace hlf {

class FieldEmbedding {
   public:
    FieldEmbedding(const GaloisRing& small, const GaloisRing& big, const Elem& generator_image);

    const GaloisRing& small() const { return *small_; }
    const GaloisRing& big() const { return *big_; }
    const Elem& generator_image() const { return powers_.at(1 % powers_.size()); }
    int relative_degree() const { return big_->degree() / small_->degree(); }

    Elem map(const Elem& a) const;
    bool in_image(const Elem& b) const;
    /// The unique a with map(a) = b; throws InputError when b is not in the image.
    Elem preimage(const Elem& b) const;
    /// Norm and trace from the big field down to the small field.
    Elem norm(const Elem& b) const;
    Elem trace(const Elem& b) const;

   private:
    bool solve(const Elem& b, Elem& out) const;

    RingRef small_;
    RingRef big_;
    std::vector<Elem> powers_;  // images of X^i, i < small degree
};

/// Cached embedding small -> big. With a base field, the embedding is compatible with the canonical
/// embeddings of the base into both fields.
const FieldEmbedding& embedding(const GaloisRing& small, const GaloisRing& big, const GaloisRing* base = nullptr);

}  // namespace hlf

#endif
