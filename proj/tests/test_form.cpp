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

#include <optional>

#include "doctest.h"
#include "hlf/text_io.hpp"
#include "test_util.hpp"

using namespace hlf;
using hlf::testing::random_form;

namespace {

// Every normalized linear form over F.
std::vector<Form> linear_forms(const GaloisRing& F) {
    std::vector<Form> out;
    const std::uint64_t q = F.residue_order();
    for (std::uint64_t a = 0; a < q; ++a)
        for (std::uint64_t b = 0; b < q; ++b)
            for (std::uint64_t c = 0; c < q; ++c) {
                Form l = Form::monomial(F, F.from_index(a), {1, 0, 0}) + Form::monomial(F, F.from_index(b), {0, 1, 0}) +
                         Form::monomial(F, F.from_index(c), {0, 0, 1});
                if (!l.is_zero() && F.is_one(l.leading())) out.push_back(l);
            }
    return out;
}

bool has_linear_factor(const Form& f, const std::vector<Form>& lines) {
    for (const auto& l : lines)
        if (exact_div(f, l)) return true;
    return false;
}

std::optional<Elem> eval(const RationalFunction& f, const std::array<Elem, 3>& pt) {
    const GaloisRing& F = *f.ring;
    Elem d = f.denominator().eval(pt);
    if (F.is_zero(d)) return std::nullopt;
    return F.mul(f.numerator().eval(pt), F.inv(d));
}

}  // namespace

TEST_CASE("form arithmetic") {
    const auto& F = GaloisRing::field(5, 1);
    Form x = Form::variable(F, 0), y = Form::variable(F, 1), z = Form::variable(F, 2);
    CHECK((x + y).pow(2) == x * x + (x * y).scaled(F.from_int(2)) + y * y);
    CHECK((x + y).pow(5) == x.pow(5) + y.pow(5));
    CHECK(parse_form(F, "X^2*Y + 3*Z^3").to_string() == "X^2*Y + 3*Z^3");
    CHECK((x * y - z * z).partial(0) == y);
    CHECK((x * y - z * z).partial(2) == z.scaled(F.from_int(-2)));
    CHECK(x.eval({F.from_int(2), F.one(), F.one()}) == F.from_int(2));
    CHECK(exact_div((x + y) * (x - z), x + y) == x - z);
    CHECK_FALSE(exact_div(x * x + y * y + z * z, x + y).has_value());
    CHECK_THROWS_AS(x + x * y, InputError);
}

TEST_CASE("irreducibility of small forms") {
    const auto& F2 = GaloisRing::field(2, 1);
    const auto& F3 = GaloisRing::field(3, 1);
    const auto& F5 = GaloisRing::field(5, 1);
    CHECK(is_irreducible(parse_form(F3, "X^2 + Y^2 + Z^2")));
    CHECK_FALSE(is_irreducible(parse_form(F2, "X^2 + Y^2 + Z^2")));
    CHECK(is_irreducible(parse_form(F5, "X*Z - Y^2")));
    CHECK(is_irreducible(parse_form(F5, "Y^2*Z - X^2*Z - X^3")));
    CHECK_FALSE(is_irreducible(parse_form(F5, "X^2 + Z^2")));
    CHECK(is_irreducible(parse_form(F3, "X^2 + Z^2")));
    CHECK(is_irreducible(parse_form(F5, "X^3 + X*Z^2 + Z^3")));
    auto fx = factor_form(parse_form(F5, "X^2*Z + 4*Z^3"));
    REQUIRE(fx.factors.size() == 3);
    CHECK(fx.factors[0].first.degree == 1);
}

TEST_CASE("factorization: multiplication oracle and brute-force irreducibility") {
    std::mt19937_64 rng(61);
    for (const GaloisRing* F : {&GaloisRing::field(2, 1), &GaloisRing::field(3, 1), &GaloisRing::field(5, 1), &GaloisRing::field(2, 2)}) {
        const auto lines = linear_forms(*F);
        for (int it = 0; it < 25; ++it) {
            Form f = Form::constant(*F, F->from_index(1 + rng() % (F->residue_order() - 1)));
            const int k = 1 + static_cast<int>(rng() % 3);
            for (int i = 0; i < k; ++i) f = f * random_form(*F, rng, 1 + static_cast<int>(rng() % 2));
            FormFactorization fx = factor_form(f);
            Form back = Form::constant(*F, fx.unit);
            for (const auto& [P, e] : fx.factors) {
                back = back * P.pow(e);
                CHECK(F->is_one(P.leading()));
                if (P.degree >= 2 && P.degree <= 3) CHECK_FALSE(has_linear_factor(P, lines));
            }
            CHECK(back == f);
        }
    }
}

TEST_CASE("rational functions") {
    const auto& F = GaloisRing::field(5, 1);
    RationalFunction a = parse_function(F, "(X^2 - Y^2)/((X - Y)*Z)");
    CHECK(a == parse_function(F, "(X + Y)/Z"));
    CHECK(a.degree() == 0);
    CHECK(parse_fraction(F, "X^2/Z").degree() == 1);
    CHECK(a.order_along(parse_form(F, "Z")) == -1);
    CHECK(parse_function(F, "Y^3/(X^2*Z)").order_along(parse_form(F, "Y")) == 3);
    CHECK((a - a).is_zero());
    CHECK((a / a) == RationalFunction::constant(F, F.one()));
    CHECK(a.pow(-2) == RationalFunction::constant(F, F.one()) / (a * a));
    CHECK_THROWS_AS(parse_function(F, "X/Z^2"), InputError);

    std::mt19937_64 rng(62);
    auto rf = [&] {
        int d = 1 + static_cast<int>(rng() % 2);
        return RationalFunction::from_forms(random_form(F, rng, d), random_form(F, rng, d));
    };
    for (int it = 0; it < 30; ++it) {
        RationalFunction f = rf(), g = rf();
        std::array<Elem, 3> pt{F.from_index(rng() % 5), F.from_index(rng() % 5), F.one()};
        auto fv = eval(f, pt), gv = eval(g, pt);
        if (!fv || !gv) continue;
        if (auto s = eval(f + g, pt)) CHECK(*s == F.add(*fv, *gv));
        if (auto p = eval(f * g, pt)) CHECK(*p == F.mul(*fv, *gv));
        if (!F.is_zero(*gv))
            if (auto q = eval(f / g, pt)) CHECK(*q == F.mul(*fv, F.inv(*gv)));
    }
}
