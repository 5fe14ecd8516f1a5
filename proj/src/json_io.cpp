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

#include "hlf/json_io.hpp"

#include "hlf/text_io.hpp"

namespace hlf {

using Json = nlohmann::ordered_json;

namespace {

const Law kLaws[] = {Law::TamePoint, Law::WittPoint, Law::TameCurve, Law::WittCurve, Law::Weil1d};

Json term_json(const ReciprocityReport& r, const PlaceTerm& t) {
    return Json{{"place", t.place}, {"value", r.value_string(t)}, {"degree", t.degree}, {"at_infinity", t.at_infinity}};
}

WittVector parse_witt_value(const GaloisRing& Fp, const std::string& text) {
    WittVector w;
    for (const auto& c : split_vector(text)) w.comps.push_back({Fp, parse_element(Fp, c)});
    return w;
}

PlaceTerm term_from_json(const ReciprocityReport& r, const GaloisRing& F, const Json& j) {
    PlaceTerm t;
    t.place = j.at("place").get<std::string>();
    const std::string v = j.at("value").get<std::string>();
    if (r.is_witt())
        t.witt = parse_witt_value(F, v);
    else
        t.tame = {F, parse_element(F, v)};
    t.degree = j.at("degree").get<int>();
    t.at_infinity = j.at("at_infinity").get<bool>();
    return t;
}

}  // namespace

Json report_to_json(const ReciprocityReport& r) {
    const GaloisRing& F = r.is_witt() ? r.witt_aggregate.base() : *r.tame_aggregate.ring;
    Json j;
    j["law"] = law_name(r.law);
    j["field"] = {{"p", F.p()}, {"n", F.degree()}};
    j["holds"] = r.holds;
    j["aggregate"] = r.aggregate_string();
    j["terms"] = Json::array();
    for (const auto& t : r.terms) j["terms"].push_back(term_json(r, t));
    j["spot_checks"] = Json::array();
    for (const auto& t : r.spot_checks) j["spot_checks"].push_back(term_json(r, t));
    j["precision"] = {{"t1_window", r.window.t1_terms}, {"t2_window", r.window.t2_levels}, {"witt_length", r.witt_length}};
    return j;
}

ReciprocityReport report_from_json(const Json& j) {
    try {
        ReciprocityReport r;
        const std::string law = j.at("law").get<std::string>();
        bool found = false;
        for (Law l : kLaws)
            if (law_name(l) == law) {
                r.law = l;
                found = true;
            }
        if (!found) throw InputError("unknown law \"" + law + "\"");
        const GaloisRing& F = GaloisRing::field(j.at("field").at("p").get<int>(), j.at("field").at("n").get<int>());
        r.holds = j.at("holds").get<bool>();
        r.witt_length = j.at("precision").at("witt_length").get<int>();
        r.window = {j.at("precision").at("t1_window").get<int>(), j.at("precision").at("t2_window").get<int>()};
        if (r.is_witt())
            r.witt_aggregate = parse_witt_value(F, j.at("aggregate").get<std::string>());
        else
            r.tame_aggregate = {F, parse_element(F, j.at("aggregate").get<std::string>())};
        for (const auto& t : j.at("terms")) r.terms.push_back(term_from_json(r, F, t));
        for (const auto& t : j.at("spot_checks")) r.spot_checks.push_back(term_from_json(r, F, t));
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed report: ") + e.what());
    }
}

Json criterion_to_json(const CriterionResult& c) {
    return Json{{"criterion", c.id},
                {"name", c.name},
                {"pass", c.pass()},
                {"cases", c.cases},
                {"wrong", c.failures},
                {"insufficient_precision", c.precision_failures},
                {"errors", c.other_errors},
                {"seconds", c.seconds},
                {"budget_seconds", c.budget_seconds},
                {"first_failure", c.first_failure}};
}

}  // namespace hlf
