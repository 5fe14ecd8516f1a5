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
 * @file text_io.hpp
 * @brief Parsers for the text forms of field elements, series, polynomials,
 * functions, points and Witt vectors.
 *
 * All expression grammars share one syntax: integers, variables, + - * / ^,
 * parentheses, and signed integer exponents. The constant w is the generator
 * of F_q (n > 1). Variables: t1, t2 for series; X, Y, Z for forms and
 * functions on P^2; x for functions on P^1; v for the generator of the point
 * field in point coordinates. Errors raise InputError with the column.
 */

#ifndef HLF_TEXT_IO_HPP
#define HLF_TEXT_IO_HPP

#include <string>
#include <vector>

#include "hlf/reciprocity.hpp"

namespace hlf {

Elem parse_element(const GaloisRing& F, const std::string& text);
Laurent2 parse_series(const GaloisRing& F, const std::string& text, const Window& w = {});
/// A homogeneous fraction of any degree.
RationalFunction parse_fraction(const GaloisRing& F, const std::string& text);
/// A homogeneous fraction of degree 0.
RationalFunction parse_function(const GaloisRing& F, const std::string& text);
/// A homogeneous polynomial (no division).
Form parse_form(const GaloisRing& F, const std::string& text);
P1Function parse_p1_function(const GaloisRing& F, const std::string& text);

/// "Z=1;(a,b)" or "Y=1;(a,b)" or "X=1;(a,b)", optionally followed by ";d=k". The affine coordinates
/// are the other two projective coordinates in X, Y, Z order; with d = k they are elements of
/// GF(p^(n k)) written in its generator v.
ClosedPoint parse_point(const GaloisRing& F, const std::string& text);

/// "[a, b, ...]": the top-level comma-separated items inside the brackets (brackets optional).
std::vector<std::string> split_vector(const std::string& text);

}  // namespace hlf

#endif
