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
 * @file symbols.hpp
 * @brief Local symbols on F((t1))((t2)): the one-dimensional tame symbol, the
 * higher tame symbol in three forms, and the Witt pairing.
 *
 * The higher tame symbol is defined by the determinant formula with valuation
 * rows (v1, v2), where v2 is the t2-order and v1 the t1-order of the leading
 * t2-level. The other two forms are checked against it.
 */

#ifndef HLF_SYMBOLS_HPP
#define HLF_SYMBOLS_HPP

#include <vector>

#include "hlf/embedding.hpp"
#include "hlf/forms.hpp"
#include "hlf/witt.hpp"

namespace hlf {

/// (-1)^(v(f)v(g)) f^v(g) / g^v(f) evaluated at t = 0.
Elem tame1(const Laurent1& f, const Laurent1& g);

/// Determinant form: residue of f1^b1 f2^b2 f3^b3 (-1)^b.
Elem tame2_det(const Laurent2& f1, const Laurent2& f2, const Laurent2& f3);
/// The explicit exponent formula with sign (-1)^alpha, reconciled to the determinant orientation.
Elem tame2_direct(const Laurent2& f, const Laurent2& g, const Laurent2& h);
/// Composite of two one-dimensional boundary maps, built from tame1 on the residue field.
Elem tame2_boundary_oracle(const Laurent2& f, const Laurent2& g, const Laurent2& h);
/// Norm down to the small field of `emb` of the symbol computed over its big field.
Elem tame2_branch(const Laurent2& f, const Laurent2& g, const Laurent2& h, const FieldEmbedding& emb);

/// The Witt pairing (f1, f2 | g] with values in W_m(F_p), m = length of g.
WittVector witt_pair(const Laurent2& f1, const Laurent2& f2, const WittSeries& g, const Window& w = {},
                     LiftStrategy lift = LiftStrategy::Teichmuller);
/// Witt sum of branch values.
WittVector witt_pair_branch_sum(const std::vector<WittVector>& values);

struct CombinedValue {
    RingElem tame;
    WittVector witt;
};

CombinedValue combined(const Laurent2& f, const Laurent2& g, const Laurent2& h, const WittSeries& gw, const Window& w = {});

/// Valuation matrix rows (v1, v2) for three arguments; exposed for reporting.
struct TameExponents {
    int M[2][3];
    long b[3];
    long sign;
};
TameExponents tame_exponents(const Laurent2& f1, const Laurent2& f2, const Laurent2& f3);

}  // namespace hlf

#endif
