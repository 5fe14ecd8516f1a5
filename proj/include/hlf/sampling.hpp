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
 * @file sampling.hpp
 * @brief Seeded random inputs for the property suites.
 *
 * Draws use `rng() % n` rather than std distributions so that a seed gives
 * the same instances with every standard library.
 */

#ifndef HLF_SAMPLING_HPP
#define HLF_SAMPLING_HPP

#include <random>

#include "hlf/form.hpp"
#include "hlf/series.hpp"

namespace hlf::sampling {

using Rng = std::mt19937_64;

inline int below(Rng& rng, int n) { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)); }

inline Elem random_elem(const GaloisRing& R, Rng& rng) {
    Elem e;
    for (int i = 0; i < R.degree(); ++i) e.c[i] = static_cast<std::uint32_t>(rng() % R.characteristic_power());
    return e;
}

inline Elem random_unit(const GaloisRing& R, Rng& rng) {
    while (true) {
        Elem e = random_elem(R, rng);
        if (R.is_unit(e)) return e;
    }
}

/// Random truncated series: levels jlo..jlo+nlev-1, each with t1-window [ilo, ilo+width).
/// With `unit_lead` the leading coefficient of the leading level is a unit.
inline Laurent2 random_series(const GaloisRing& R, Rng& rng, int jlo, int nlev, int ilo, int width,
                              bool unit_lead = true, bool exact = false) {
    Laurent2 f(R, exact ? kExact : jlo + nlev);
    f.jlo = jlo;
    for (int k = 0; k < nlev; ++k) {
        int lo = ilo + below(rng, 3) - 1;
        std::vector<Elem> c(width);
        for (auto& x : c) x = random_elem(R, rng);
        if (k == 0 && unit_lead) {
            lo = ilo;
            c[0] = random_unit(R, rng);
        }
        f.levels.push_back(Laurent1::from_coeffs(R, lo, c, exact ? kExact : lo + width));
    }
    f.normalize();
    return f;
}

/// Random unit of the integral ring: constant term a unit, every exponent nonnegative.
inline Laurent2 random_integral_unit(const GaloisRing& R, Rng& rng, int nlev, int width, bool exact = true) {
    Laurent2 f(R, exact ? kExact : nlev);
    f.jlo = 0;
    for (int k = 0; k < nlev; ++k) {
        std::vector<Elem> c(width);
        for (auto& x : c) x = random_elem(R, rng);
        if (k == 0) c[0] = random_unit(R, rng);
        f.levels.push_back(Laurent1::from_coeffs(R, 0, c, exact ? kExact : width));
    }
    f.normalize();
    return f;
}

/// Exact nonzero series with poles of order at most 2 in each variable.
inline Laurent2 random_exact(const GaloisRing& R, Rng& rng) {
    int jlo = below(rng, 5) - 2, ilo = below(rng, 5) - 2;
    return random_series(R, rng, jlo, 1 + below(rng, 3), ilo, 1 + below(rng, 4), true, true);
}

/// Nonzero homogeneous form of degree d over a field.
inline Form random_form(const GaloisRing& F, Rng& rng, int d) {
    while (true) {
        Form f(F, d);
        for (int i = 0; i <= d; ++i)
            for (int j = 0; i + j <= d; ++j)
                f = f + Form::monomial(F, F.from_index(rng() % F.residue_order()), {i, j, d - i - j});
        if (!f.is_zero()) return f;
    }
}

/// a and b agree wherever both are known.
inline bool agree(const Laurent2& a, const Laurent2& b) { return (a - b).is_zero_on_window(); }

}  // namespace hlf::sampling

#endif
