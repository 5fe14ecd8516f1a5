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
 * @file surface.hpp
 * @brief Closed points, curves and branches on P^2 over F_q, and the expansion
 * of rational functions in the local fields k_z(x)((u))((t)).
 *
 * Charts: chart c is the open set where coordinate c (0 = X, 1 = Y, 2 = Z) is
 * nonzero and scaled to 1; the affine coordinates (a, b) are the other two
 * coordinates in index order, translated so the point is at the origin.
 *
 * At a point of multiplicity r with squarefree tangent cone, each Galois orbit
 * of tangent directions over k(x) is one branch. For a tangent b = w a the
 * branch is b = phi(a) = a (w + s(a)) with s found by Newton iteration on
 * F(a, a (w + s)) / a^r; vertical tangents swap the roles of a and b. The
 * local parameters are u = a and t = b - phi(a), so F_{x,z} = K((u))((t)) with
 * K = k(x)(w).
 */

#ifndef HLF_SURFACE_HPP
#define HLF_SURFACE_HPP

#include <array>
#include <string>
#include <vector>

#include "hlf/embedding.hpp"
#include "hlf/form.hpp"
#include "hlf/series.hpp"

namespace hlf {

/// A Frobenius orbit of geometric points. Coordinates lie in field = GF(p^(n d)), reached from the
/// base F_q by the canonical embedding; coordinate `chart` is 1 and later coordinates are 0.
struct ClosedPoint {
    RingRef base = nullptr;
    RingRef field = nullptr;
    int degree = 1;
    int chart = 2;
    std::array<Elem, 3> coords{};

    /// Coordinates pushed into a bigger field K containing k(x) (embedding relative to the base).
    std::array<Elem, 3> coords_in(const GaloisRing& K) const;
    bool lies_on(const Form& f) const;
    std::string to_string() const;

    friend bool operator==(const ClosedPoint& a, const ClosedPoint& b) {
        return a.degree == b.degree && a.coords == b.coords;
    }
    friend bool operator<(const ClosedPoint& a, const ClosedPoint& b);
};

/// The closed point through the geometric point pt, whose coordinates lie in K (an extension of base).
ClosedPoint closed_point(const GaloisRing& base, const GaloisRing& K, std::array<Elem, 3> pt);

struct Curve {
    Form poly;  // irreducible, normalized

    Curve() = default;
    /// Checks irreducibility; throws InputError otherwise.
    explicit Curve(const Form& f);
    static Curve trusted(const Form& irreducible_normalized);

    int degree() const { return poly.degree; }
    std::string to_string() const { return poly.to_string(); }
    friend bool operator==(const Curve& a, const Curve& b) { return a.poly == b.poly; }
    friend bool operator<(const Curve& a, const Curve& b) { return a.poly < b.poly; }
};

/// Closed points of {f = 0} and {g = 0}; f and g must be coprime. Throws InputError when a point
/// would need an extension of absolute degree above kMaxDegree.
std::vector<ClosedPoint> intersection_points(const Form& f, const Form& g);
std::vector<ClosedPoint> singular_points(const Curve& y);

/// Polynomial in the affine coordinates (a, b): c[i][j] is the coefficient of a^i b^j.
struct AffinePoly {
    RingRef ring = nullptr;
    std::vector<std::vector<Elem>> c;

    int total_degree() const;
    /// Lowest total degree of a nonzero term, or -1 for the zero polynomial.
    int order() const;
    AffinePoly transposed() const;
};

/// f in chart `chart` with the point pt (over the ring of f) moved to the origin.
AffinePoly translate(const Form& f, int chart, const std::array<Elem, 3>& pt);

struct Branch {
    ClosedPoint point;
    Curve curve;
    RingRef field = nullptr;  // k_z(x)
    int chart = 2;
    bool swapped = false;  // u is the second affine coordinate
    int multiplicity = 1;  // of the point on the curve
    Elem slope{};          // tangent direction b = slope * a, after the swap
    std::array<Elem, 3> coords{};
    AffinePoly local;  // the curve at the point, over field, after the swap

    /// phi(u), known below u^precision.
    Laurent1 phi(int precision) const;
    std::string to_string() const;
};

/// Branches of y at x. Throws NotOnCurve, or UnsupportedSingularity for a tangent cone with
/// repeated factors.
std::vector<Branch> branches_at(const Curve& y, const ClosedPoint& x);

/// f(u, phi(u) + t) as a series over k_z(x); exact in t, known in u below the t1 window.
Laurent2 expand_form(const Form& f, const Branch& z, const Window& w = {});
/// The image of f in F_{x,z}. Throws InputError for the zero function.
Laurent2 expand(const RationalFunction& f, const Branch& z, const Window& w = {});

/// Irreducible factors of the numerators and denominators of funcs that pass through x.
std::vector<Curve> curves_through_point(const ClosedPoint& x, const std::vector<RationalFunction>& funcs);
/// Points of y meeting another factor of funcs, singular points of y, and points of y on the
/// coordinate lines X = 0, Y = 0, Z = 0.
std::vector<ClosedPoint> points_on_curve(const Curve& y, const std::vector<RationalFunction>& funcs);

}  // namespace hlf

#endif
