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

#include "doctest.h"
#include "hlf/json_io.hpp"
#include "hlf/text_io.hpp"

using namespace hlf;

namespace {

const GaloisRing& F5 = GaloisRing::field(5, 1);
const GaloisRing& F4 = GaloisRing::field(2, 2);

std::string error_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const InputError& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_CASE("field elements") {
    CHECK(parse_element(F5, "3") == F5.from_int(3));
    CHECK(parse_element(F5, "-1") == F5.from_int(4));
    CHECK(parse_element(F5, "2/3") == F5.mul(F5.from_int(2), F5.inv(F5.from_int(3))));
    CHECK(parse_element(F5, "2^-1") == F5.from_int(3));
    const Elem w = F4.generator();
    CHECK(parse_element(F4, "w^2 + 1") == F4.add(F4.mul(w, w), F4.one()));
    CHECK(parse_element(F4, "(w+1)^3") == F4.one());
    for (std::uint64_t i = 0; i < 4; ++i) {
        const Elem a = F4.from_index(i);
        CHECK(parse_element(F4, F4.to_string(a)) == a);
    }
    CHECK_THROWS_AS(parse_element(F5, "w"), InputError);
    CHECK_THROWS_AS(parse_element(F5, "1/0"), Error);
    CHECK_THROWS_AS(parse_element(F5, "t1"), InputError);
}

TEST_CASE("parse errors carry the column") {
    CHECK(error_of([] { parse_element(F5, "1 + * 2"); }).find("column 5") != std::string::npos);
    CHECK(error_of([] { parse_element(F5, "(1 + 2"); }).find("expected ')'") != std::string::npos);
    CHECK(error_of([] { parse_form(F5, "X + q"); }).find("column 5") != std::string::npos);
    CHECK(error_of([] { parse_element(F5, "2^x"); }).find("exponent") != std::string::npos);
    CHECK(error_of([] { parse_element(F5, ""); }).find("end of input") != std::string::npos);
}

TEST_CASE("series") {
    Laurent2 s = parse_series(F5, "t1^-1*t2 + 3*t2^2 + 2");
    CHECK(s.coeff(-1, 1) == F5.one());
    CHECK(s.coeff(0, 2) == F5.from_int(3));
    CHECK(s.coeff(0, 0) == F5.from_int(2));
    CHECK(F5.is_zero(s.coeff(1, 1)));
    // 1/(1 - t1) expands inside the window.
    Laurent2 g = parse_series(F5, "1/(1-t1)", {8, 4});
    for (int i = 0; i < 8; ++i) CHECK(g.coeff(i, 0) == F5.one());
    CHECK_THROWS_AS(parse_series(F5, "X", {8, 4}), InputError);
}

TEST_CASE("forms and functions") {
    const Form X = Form::variable(F5, 0), Y = Form::variable(F5, 1), Z = Form::variable(F5, 2);
    CHECK(parse_form(F5, "X^2 + 2*Y*Z") == X * X + Form::monomial(F5, F5.from_int(2), {0, 1, 1}));
    CHECK(parse_form(F5, "(X+Y)*(X-Y)") == X * X - Y * Y);
    CHECK_THROWS_AS(parse_form(F5, "X + Y^2"), InputError);
    CHECK_THROWS_AS(parse_form(F5, "X/Y"), InputError);
    CHECK(parse_function(F5, "X/Z") == RationalFunction::from_forms(X, Z));
    CHECK(parse_function(F5, "(X^2-Y^2)/(X+Y)/Z") == RationalFunction::from_forms(X - Y, Z));
    CHECK_THROWS_AS(parse_function(F5, "X"), InputError);
    CHECK_THROWS_AS(parse_function(F5, "X/(Z+1)"), InputError);
    CHECK(parse_fraction(F5, "X").degree() == 1);
    P1Function f = parse_p1_function(F5, "(x^2+1)/(x-1)");
    CHECK(f.num.degree() == 2);
    CHECK(f.den.degree() == 1);
}

TEST_CASE("points and vectors") {
    ClosedPoint o = parse_point(F5, "Z=1;(0,0)");
    CHECK(o.chart == 2);
    CHECK(o.degree == 1);
    ClosedPoint inf = parse_point(F5, "X=1;(2,0)");
    CHECK(inf.chart == 1);  // (1 : 2 : 0), normalized on its last nonzero coordinate
    CHECK(inf.lies_on(parse_form(F5, "Z")));
    CHECK(inf.lies_on(parse_form(F5, "Y - 2*X")));
    ClosedPoint q = parse_point(F5, "Z=1;(v,1);d=2");
    CHECK(q.degree == 2);
    CHECK_THROWS_AS(parse_point(F5, "W=1;(0,0)"), InputError);
    CHECK_THROWS_AS(parse_point(F5, "Z=1;(0)"), InputError);
    CHECK_THROWS_AS(parse_point(F5, "Z=1;(0,0);d=0"), InputError);
    CHECK_THROWS_AS(parse_point(F5, "Z=1;(v,0)"), InputError);

    CHECK(split_vector("[1, (X+Y)/Z, 2]") == std::vector<std::string>{"1", "(X+Y)/Z", "2"});
    CHECK(split_vector("a,b") == std::vector<std::string>{"a", "b"});
    CHECK(split_vector("[f(a,b), c]") == std::vector<std::string>{"f(a,b)", "c"});
    CHECK_THROWS_AS(split_vector("[1, (2]"), InputError);
}

TEST_CASE("report JSON round trip") {
    const ClosedPoint o = parse_point(F5, "Z=1;(0,0)");
    auto fn = [](const std::string& s) { return parse_function(F5, s); };
    std::vector<ReciprocityReport> reports = {
        verify_tame_point(o, fn("X/Z"), fn("Y/Z"), fn("(X+Y)/Z")),
        verify_witt_point(o, fn("X/Z"), fn("Y/Z"), {fn("X/(X+Y)"), fn("3")}),
        verify_tame_curve(Curve(parse_form(F5, "Y")), fn("X/Z"), fn("(X+Z)/Z"), fn("Y/Z")),
        weil_1d(parse_p1_function(F5, "x"), parse_p1_function(F5, "1-x")),
        verify_tame_point(parse_point(F4, "Z=1;(0,0)"), parse_function(F4, "X/Z"), parse_function(F4, "Y/Z"),
                          parse_function(F4, "(X+w*Y)/Z")),
    };
    for (const auto& r : reports) {
        nlohmann::ordered_json j = report_to_json(r);
        CHECK(j["holds"].get<bool>() == r.holds);
        CHECK(j["terms"].size() == r.terms.size());
        ReciprocityReport back = report_from_json(j);
        CHECK(report_to_json(back) == j);
        CHECK(report_consistent(back));
        CHECK(nlohmann::ordered_json::parse(j.dump()) == j);
    }
    nlohmann::ordered_json j = report_to_json(reports[0]);
    CHECK(j["aggregate"] == "1");
    CHECK(j["field"]["p"] == 5);

    nlohmann::ordered_json bad = j;
    bad.erase("terms");
    CHECK_THROWS_AS(report_from_json(bad), InputError);
    bad = j;
    bad["terms"][0]["value"] = "1 +";
    CHECK_THROWS_AS(report_from_json(bad), InputError);
    CHECK_THROWS_AS(report_from_json(nlohmann::ordered_json::array()), InputError);
}
