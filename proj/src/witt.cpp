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

#include "hlf/witt.hpp"

#include <sstream>

namespace hlf {

Laurent2 lift_series(const Laurent2& f, const GaloisRing& gr, LiftStrategy s) {
    return map_coeffs(f, gr, [&](const Elem& c) { return lift_elem(gr, c, s); });
}

Laurent2 reduce_series(const Laurent2& f) {
    const GaloisRing& gr = *f.ring;
    return map_coeffs(f, gr.residue_field(), [&](const Elem& c) { return gr.reduce(c); });
}

RingElem WittTraits<RingElem>::divide_p(const RingElem& a, int k) {
    if (k == 0) return a;
    if (a.ring->p_adic_valuation(a.value) < k) throw NonIntegralGhost("ghost component not divisible by p^" + std::to_string(k));
    return {*a.ring, a.ring->divide_by_p_power(a.value, k)};
}

Laurent2 WittTraits<Laurent2>::divide_p(const Laurent2& a, int k) {
    if (k == 0) return a;
    const GaloisRing& gr = *a.ring;
    return map_coeffs(a, gr, [&](const Elem& c) {
        if (gr.p_adic_valuation(c) < k) throw NonIntegralGhost("ghost series coefficient not divisible by p^" + std::to_string(k));
        return gr.divide_by_p_power(c, k);
    });
}

WittVector witt_from_ints(const GaloisRing& field, const std::vector<std::int64_t>& comps) {
    WittVector w;
    for (auto c : comps) w.comps.push_back({field, field.from_index(static_cast<std::uint64_t>(c))});
    return w;
}

std::string to_string(const WittVector& w) {
    std::ostringstream os;
    os << "(";
    for (int i = 0; i < w.length(); ++i) os << (i ? ", " : "") << w.comps[i].to_string();
    os << ")";
    return os.str();
}

}  // namespace hlf
