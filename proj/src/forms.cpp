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

#include "hlf/forms.hpp"

namespace hlf {

TwoForm dlog_wedge(const Laurent2& f1, const Laurent2& f2, const Window& w) {
    Laurent2 num = ls2_derivative(f1, 1) * ls2_derivative(f2, 2) - ls2_derivative(f1, 2) * ls2_derivative(f2, 1);
    return {num * ls2_inv(f1 * f2, w)};
}

Elem residue(const TwoForm& omega) { return ls2_coeff(omega.density, -1, -1); }

Elem residue_of_product(const Laurent2& h, const TwoForm& omega) { return ls2_product_coeff(h, omega.density, -1, -1); }

Elem residue_after_param_change(const TwoForm& omega, const Laurent2& s1, const Laurent2& s2, const Window& w) {
    if (ls2_valuation(s2).v2 != 1) throw InvalidParameterChange("t2-substitute must have t2-order 1");
    Laurent2 a = ls2_substitute(omega.density, s1, s2, w);
    Laurent2 jac = ls2_derivative(s1, 1) * ls2_derivative(s2, 2) - ls2_derivative(s1, 2) * ls2_derivative(s2, 1);
    return ls2_product_coeff(a, jac, -1, -1);
}

}  // namespace hlf
