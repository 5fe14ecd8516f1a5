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

#ifndef HLF_FORMS_HPP
#define HLF_FORMS_HPP

#include "hlf/series.hpp"

namespace hlf {

/// a dt1 ^ dt2, always written in the fixed parameters (t1, t2).
struct TwoForm {
    Laurent2 density;

    friend TwoForm operator+(const TwoForm& a, const TwoForm& b) { return {a.density + b.density}; }
};

/// df1/f1 ^ df2/f2.
TwoForm dlog_wedge(const Laurent2& f1, const Laurent2& f2, const Window& w = {});

/// Coefficient of t1^-1 t2^-1 dt1 ^ dt2, untraced.
Elem residue(const TwoForm& omega);

/// Residue of h * omega without forming the product.
Elem residue_of_product(const Laurent2& h, const TwoForm& omega);

/// Pull omega back along t1 -> s1, t2 -> s2 (density a(s1, s2) times the Jacobian) and take the residue.
/// Only parameter changes with v2(s2) = 1 are accepted.
Elem residue_after_param_change(const TwoForm& omega, const Laurent2& s1, const Laurent2& s2, const Window& w = {});

}  // namespace hlf

#endif
