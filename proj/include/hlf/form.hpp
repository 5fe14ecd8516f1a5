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
 * @file form.hpp
 * @brief Homogeneous polynomials in X, Y, Z over F_q, their factorization, and
 * homogeneous fractions (rational functions on P^2 when of degree 0).
 *
 * Factorization dehomogenizes at Z = 1 and uses the Kronecker substitution
 * y -> x^(D+1): the univariate image is factored and sub-products are tested
 * as bivariate divisors. Factors are normalized so that the coefficient of the
 * largest monomial (X-exponent first) is 1.
 */

#ifndef HLF_FORM_HPP
#define HLF_FORM_HPP

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hlf/embedding.hpp"
#include "hlf/galois_ring.hpp"

namespace hlf {

using Exps = std::array<int, 3>;

class Form {
   public:
    RingRef ring = nullptr;
    int degree = 0;
    std::map<Exps, Elem> terms;  // nonzero coefficients only

    Form() = default;
    Form(const GaloisRing& r, int d) : ring(&r), degree(d) {}

    static Form constant(const GaloisRing& r, const Elem& c);
    /// X, Y or Z for i = 0, 1, 2.
    static Form variable(const GaloisRing& r, int i);
    static Form monomial(const GaloisRing& r, const Elem& c, const Exps& e);

    bool is_zero() const { return terms.empty(); }
    Elem coeff(const Exps& e) const;
    /// Coefficient of the largest monomial.
    Elem leading() const { return terms.rbegin()->second; }
    Form normalized() const;
    Form scaled(const Elem& c) const;
    Form pow(int k) const;
    Form partial(int var) const;
    /// Coefficients pushed into the big field of `e`.
    Form mapped(const FieldEmbedding& e) const;
    Elem eval(const std::array<Elem, 3>& pt) const;

    friend Form operator+(const Form& a, const Form& b);
    friend Form operator-(const Form& a, const Form& b);
    friend Form operator*(const Form& a, const Form& b);
    Form operator-() const { return scaled(ring->neg(ring->one())); }
    friend bool operator==(const Form& a, const Form& b) { return a.degree == b.degree && a.terms == b.terms; }
    /// Degree, then terms from the largest monomial down.
    friend bool operator<(const Form& a, const Form& b);

    std::string to_string() const;
};

/// a / b when b divides a exactly.
std::optional<Form> exact_div(const Form& a, const Form& b);

struct FormFactorization {
    Elem unit{};
    std::vector<std::pair<Form, int>> factors;  // normalized irreducible forms, sorted
};

FormFactorization factor_form(const Form& f);
bool is_irreducible(const Form& f);

/// unit * prod factor^exponent with irreducible normalized factors. Degree 0 means a rational
/// function on P^2; other degrees appear while parsing. A zero unit is the zero function.
class RationalFunction {
   public:
    RingRef ring = nullptr;
    Elem unit{};
    std::vector<std::pair<Form, int>> factors;  // sorted, exponents nonzero

    RationalFunction() = default;

    static RationalFunction zero(const GaloisRing& r);
    static RationalFunction constant(const GaloisRing& r, const Elem& c);
    static RationalFunction from_form(const Form& f);
    static RationalFunction from_forms(const Form& num, const Form& den);

    bool is_zero() const { return ring->is_zero(unit); }
    bool is_constant() const { return !is_zero() && factors.empty(); }
    int degree() const;
    /// Product of the positive part, times the unit.
    Form numerator() const;
    Form denominator() const;
    /// Exponent of the (normalized) irreducible form in the factorization.
    int order_along(const Form& curve) const;

    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    RationalFunction operator-() const;
    RationalFunction pow(long e) const;
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.unit == b.unit && a.factors == b.factors;
    }

    std::string to_string() const;
};

}  // namespace hlf

#endif
