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
 * @file reciprocity.hpp
 * @brief Verifiers for the reciprocity laws of the tame symbol and the Witt
 * pairing around a closed point and along a curve of P^2, and for Weil
 * reciprocity on P^1.
 *
 * Each verifier enumerates the places where a term can be nontrivial, computes
 * every local term, and folds them (product in F_q^*, sum in W_m(F_p)). A few
 * places outside the enumerated support are also evaluated; they must give the
 * identity.
 */

#ifndef HLF_RECIPROCITY_HPP
#define HLF_RECIPROCITY_HPP

#include <string>
#include <vector>

#include "hlf/poly1.hpp"
#include "hlf/surface.hpp"
#include "hlf/witt.hpp"

namespace hlf {

enum class Law { TamePoint, WittPoint, TameCurve, WittCurve, Weil1d };
std::string law_name(Law law);

struct PlaceTerm {
    std::string place;
    RingElem tame;    // tame laws: value in F_q^*
    WittVector witt;  // Witt laws: value in W_m(F_p)
    int degree = 1;            // degree of the branch's residue field over F_q
    bool at_infinity = false;  // curve laws: the point lies on Z = 0
};

struct ReciprocityReport {
    Law law = Law::TamePoint;
    std::vector<PlaceTerm> terms;
    std::vector<PlaceTerm> spot_checks;  // places outside the support
    RingElem tame_aggregate;
    WittVector witt_aggregate;
    bool holds = false;
    Window window{0, 0};  // largest windows any term needed
    int witt_length = 0;

    bool is_witt() const { return law == Law::WittPoint || law == Law::WittCurve; }
    std::string value_string(const PlaceTerm& t) const;
    std::string aggregate_string() const;
};

/// Recomputes the aggregate from the terms and checks it against the stored one and the verdict.
bool report_consistent(const ReciprocityReport& r);

struct VerifyOptions {
    Window start{8, 4};
    int retry_cap = 1024;
    LiftStrategy lift = LiftStrategy::Teichmuller;
    int spot_checks = 2;
};

/// Local terms at one branch. `used` (optional) receives the windows that succeeded.
RingElem tame_at_branch(const Branch& z, const RationalFunction& f, const RationalFunction& g,
                        const RationalFunction& h, const VerifyOptions& opt = {}, Window* used = nullptr);
WittVector witt_at_branch(const Branch& z, const RationalFunction& f, const RationalFunction& g,
                          const std::vector<RationalFunction>& h, const VerifyOptions& opt = {}, Window* used = nullptr);

ReciprocityReport verify_tame_point(const ClosedPoint& x, const RationalFunction& f, const RationalFunction& g,
                                    const RationalFunction& h, const VerifyOptions& opt = {});
/// h is a Witt vector of functions; its length is m. Zero components are allowed.
ReciprocityReport verify_witt_point(const ClosedPoint& x, const RationalFunction& f, const RationalFunction& g,
                                    const std::vector<RationalFunction>& h, const VerifyOptions& opt = {});
ReciprocityReport verify_tame_curve(const Curve& y, const RationalFunction& f, const RationalFunction& g,
                                    const RationalFunction& h, const VerifyOptions& opt = {});
ReciprocityReport verify_witt_curve(const Curve& y, const RationalFunction& f, const RationalFunction& g,
                                    const std::vector<RationalFunction>& h, const VerifyOptions& opt = {});

/// A rational function num/den of x on P^1 over F_q, reduced.
struct P1Function {
    RingRef ring = nullptr;
    Poly1 num, den;

    static P1Function make(const Poly1& num, const Poly1& den);
    static P1Function constant(const GaloisRing& r, const Elem& c);
    static P1Function x(const GaloisRing& r);
    bool is_zero() const { return num.is_zero(); }

    friend P1Function operator+(const P1Function& a, const P1Function& b);
    friend P1Function operator-(const P1Function& a, const P1Function& b);
    friend P1Function operator*(const P1Function& a, const P1Function& b);
    friend P1Function operator/(const P1Function& a, const P1Function& b);
    P1Function pow(long e) const;
    std::string to_string() const;
};

/// Product over the closed points of P^1 of the normed tame symbols of f and g.
ReciprocityReport weil_1d(const P1Function& f, const P1Function& g);

}  // namespace hlf

#endif
