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

#include "cli.hpp"

#include <algorithm>

#include "CLI11.hpp"
#include "hlf/acceptance.hpp"
#include "hlf/json_io.hpp"
#include "hlf/mutation.hpp"
#include "hlf/symbols.hpp"
#include "hlf/text_io.hpp"

namespace hlf {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
    std::string field = "5,1";
    int m = 2;
    int t1_window = 8;
    int t2_window = 4;
    int retry_cap = 1024;
    bool json = false;
    std::string mutate;
    std::string f, g, h, point, curve;
    std::string symbol = "tame";
    std::vector<int> criteria;
    std::uint64_t seed = AcceptanceOptions{}.seed;
};

const GaloisRing& field_of(const Options& o) {
    auto parts = split_vector(o.field);
    if (parts.size() != 2) throw InputError("--field expects p,n");
    try {
        return GaloisRing::field(std::stoi(parts[0]), std::stoi(parts[1]));
    } catch (const std::logic_error&) {
        throw InputError("--field expects two integers p,n, got \"" + o.field + "\"");
    }
}

Json field_json(const GaloisRing& F) { return {{"p", F.p()}, {"n", F.degree()}}; }

void require(const std::string& value, const char* flag) {
    if (value.empty()) throw InputError(std::string("missing ") + flag);
}

VerifyOptions verify_options(const Options& o) {
    VerifyOptions v;
    v.start = {o.t1_window, o.t2_window};
    v.retry_cap = o.retry_cap;
    return v;
}

template <typename Fn>
auto local_retry(const Options& o, Fn&& fn) {
    Window start{o.t1_window, o.t2_window};
    if (mutations().window_shrink) return with_precision_retry(fn, {1, 1}, 1);
    return with_precision_retry(fn, start, o.retry_cap);
}

// The Witt-vector argument: "[a, b, ...]" or a single item, padded with zeros to length m.
std::vector<std::string> witt_items(const Options& o) {
    if (o.m < 1) throw InputError("--m must be at least 1");
    std::vector<std::string> items{o.h};
    if (o.h.find('[') != std::string::npos) items = split_vector(o.h);
    if (static_cast<int>(items.size()) > o.m)
        throw InputError("--h has " + std::to_string(items.size()) + " components, more than m = " + std::to_string(o.m));
    items.resize(o.m, "0");
    return items;
}

void print_report(const ReciprocityReport& r, const Options& o, std::ostream& out) {
    if (o.json) {
        out << report_to_json(r).dump(2) << "\n";
        return;
    }
    out << "law: " << law_name(r.law) << "\n";
    out << "holds: " << (r.holds ? "true" : "false") << "\n";
    out << "aggregate: " << r.aggregate_string() << "\n";
    out << "terms:\n";
    if (r.terms.empty()) out << "  (none)\n";
    for (const auto& t : r.terms) out << "  " << t.place << " -> " << r.value_string(t) << "\n";
    if (!r.spot_checks.empty()) {
        out << "spot checks outside the support:\n";
        for (const auto& t : r.spot_checks) out << "  " << t.place << " -> " << r.value_string(t) << "\n";
    }
    if (r.law != Law::Weil1d) out << "precision: t1 window " << r.window.t1_terms << ", t2 window " << r.window.t2_levels << "\n";
    if (r.is_witt()) out << "witt length: " << r.witt_length << "\n";
}

int cmd_tame(const Options& o, std::ostream& out) {
    const GaloisRing& F = field_of(o);
    require(o.f, "--f");
    require(o.g, "--g");
    require(o.h, "--h");
    Elem v = local_retry(o, [&](Window w) {
        return tame2_det(parse_series(F, o.f, w), parse_series(F, o.g, w), parse_series(F, o.h, w));
    });
    if (o.json)
        out << Json{{"command", "tame"}, {"field", field_json(F)}, {"value", F.to_string(v)}}.dump(2) << "\n";
    else
        out << F.to_string(v) << "\n";
    return 0;
}

int cmd_witt(const Options& o, std::ostream& out) {
    const GaloisRing& F = field_of(o);
    require(o.f, "--f");
    require(o.g, "--g");
    require(o.h, "--h");
    auto items = witt_items(o);
    WittVector v = local_retry(o, [&](Window w) {
        WittSeries hs;
        for (const auto& s : items) hs.comps.push_back(parse_series(F, s, w));
        return witt_pair(parse_series(F, o.f, w), parse_series(F, o.g, w), hs, w);
    });
    if (o.json)
        out << Json{{"command", "witt"}, {"field", field_json(F)}, {"m", o.m}, {"value", to_string(v)}}.dump(2) << "\n";
    else
        out << to_string(v) << "\n";
    return 0;
}

int cmd_expand(const Options& o, std::ostream& out) {
    const GaloisRing& F = field_of(o);
    require(o.point, "--point");
    require(o.curve, "--curve");
    require(o.f, "--f");
    const Curve y(parse_form(F, o.curve));
    const ClosedPoint x = parse_point(F, o.point);
    const RationalFunction f = parse_function(F, o.f);
    const Window w{o.t1_window, o.t2_window};
    Json branches = Json::array();
    for (const auto& z : branches_at(y, x)) {
        Laurent2 e = expand(f, z, w);
        branches.push_back({{"branch", z.to_string()}, {"expansion", e.to_string()}});
    }
    if (o.json) {
        out << Json{{"command", "expand"}, {"field", field_json(F)}, {"point", x.to_string()}, {"curve", y.to_string()},
                    {"branches", branches}}
                   .dump(2)
            << "\n";
        return 0;
    }
    for (const auto& b : branches)
        out << b["branch"].get<std::string>() << "\n  " << b["expansion"].get<std::string>() << "\n";
    return 0;
}

int cmd_verify(const Options& o, bool at_point, std::ostream& out) {
    const GaloisRing& F = field_of(o);
    require(o.f, "--f");
    require(o.g, "--g");
    require(o.h, "--h");
    const RationalFunction f = parse_function(F, o.f), g = parse_function(F, o.g);
    const VerifyOptions vo = verify_options(o);
    ReciprocityReport r;
    if (o.symbol == "tame") {
        const RationalFunction h = parse_function(F, o.h);
        if (at_point) {
            require(o.point, "--point");
            r = verify_tame_point(parse_point(F, o.point), f, g, h, vo);
        } else {
            require(o.curve, "--curve");
            r = verify_tame_curve(Curve(parse_form(F, o.curve)), f, g, h, vo);
        }
    } else if (o.symbol == "witt") {
        std::vector<RationalFunction> h;
        for (const auto& s : witt_items(o)) h.push_back(parse_function(F, s));
        if (at_point) {
            require(o.point, "--point");
            r = verify_witt_point(parse_point(F, o.point), f, g, h, vo);
        } else {
            require(o.curve, "--curve");
            r = verify_witt_curve(Curve(parse_form(F, o.curve)), f, g, h, vo);
        }
    } else {
        throw InputError("--symbol must be tame or witt");
    }
    print_report(r, o, out);
    return r.holds ? 0 : 1;
}

int cmd_weil(const Options& o, std::ostream& out) {
    const GaloisRing& F = field_of(o);
    require(o.f, "--f");
    require(o.g, "--g");
    ReciprocityReport r = weil_1d(parse_p1_function(F, o.f), parse_p1_function(F, o.g));
    print_report(r, o, out);
    return r.holds ? 0 : 1;
}

int cmd_selftest(const Options& o, std::ostream& out) {
    AcceptanceOptions ao;
    ao.seed = o.seed;
    std::vector<CriterionResult> results;
    if (o.criteria.empty()) {
        results = run_acceptance(ao);
    } else {
        for (int id : o.criteria) results.push_back(run_criterion(id, ao));
    }
    bool all = true;
    for (const auto& c : results) all = all && c.pass();
    if (o.json) {
        Json arr = Json::array();
        for (const auto& c : results) arr.push_back(criterion_to_json(c));
        out << Json{{"command", "selftest"}, {"pass", all}, {"criteria", arr}}.dump(2) << "\n";
    } else {
        for (const auto& c : results) out << c.line() << "\n";
        out << (all ? "all criteria pass" : "some criteria FAIL") << "\n";
    }
    return all ? 0 : 1;
}

void set_mutation(const std::string& name) {
    if (name.empty()) return;
    if (name == "tame_sign_flip")
        mutations().tame_sign_flip = true;
    else if (name == "window_shrink")
        mutations().window_shrink = true;
    else
        throw InputError("unknown mutation \"" + name + "\" (tame_sign_flip or window_shrink)");
}

// Clears the mutation flags on every exit path.
struct MutationScope {
    ~MutationScope() {
        mutations().tame_sign_flip = false;
        mutations().window_shrink = false;
    }
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Higher tame symbols, Witt pairings and reciprocity laws on P^2 over finite fields."};
    app.name(args.empty() ? "hlfsym" : args[0]);
    app.set_help_flag("--help", "Print this help message and exit");
    app.require_subcommand(1);
    app.fallthrough();
    app.option_defaults()->always_capture_default();
    app.add_option("--field", o.field, "Base field F_q as p,n (q = p^n)");
    app.add_option("--m", o.m, "Witt vector length");
    app.add_option("--t1-window", o.t1_window, "Starting number of t1 terms per level");
    app.add_option("--t2-window", o.t2_window, "Starting number of t2 levels");
    app.add_option("--retry-cap", o.retry_cap, "Largest window tried before giving up");
    app.add_flag("--json", o.json, "Print JSON instead of text");
    app.add_option("--mutate", o.mutate, "Inject a fault: tame_sign_flip or window_shrink");

    auto fgh = [&](CLI::App* sub, bool with_h) {
        sub->add_option("--f", o.f, "First argument");
        sub->add_option("--g", o.g, "Second argument");
        if (with_h) sub->add_option("--h", o.h, "Third argument; for Witt symbols a vector [h0, h1, ...]");
    };
    auto* tame = app.add_subcommand("tame", "Higher tame symbol of three series in t1, t2");
    fgh(tame, true);
    auto* witt = app.add_subcommand("witt", "Witt pairing (f, g | h] of series in t1, t2");
    fgh(witt, true);
    auto* expand_cmd = app.add_subcommand("expand", "Expand a function at every branch of a curve at a point");
    expand_cmd->add_option("--point", o.point, "Point, e.g. \"Z=1;(0,0)\" or \"Z=1;(v,0);d=2\"");
    expand_cmd->add_option("--curve", o.curve, "Irreducible homogeneous polynomial in X, Y, Z");
    expand_cmd->add_option("--f", o.f, "Function, a degree-0 quotient of forms");
    auto* vpoint = app.add_subcommand("verify-point", "Reciprocity around a closed point");
    fgh(vpoint, true);
    vpoint->add_option("--point", o.point, "Point, e.g. \"Z=1;(0,0)\"");
    vpoint->add_option("--symbol", o.symbol, "tame or witt")->check(CLI::IsMember({"tame", "witt"}));
    auto* vcurve = app.add_subcommand("verify-curve", "Reciprocity along an irreducible curve");
    fgh(vcurve, true);
    vcurve->add_option("--curve", o.curve, "Irreducible homogeneous polynomial in X, Y, Z");
    vcurve->add_option("--symbol", o.symbol, "tame or witt")->check(CLI::IsMember({"tame", "witt"}));
    auto* weil = app.add_subcommand("weil", "Weil reciprocity for two functions of x on P^1");
    fgh(weil, false);
    auto* selftest = app.add_subcommand("selftest", "Run the acceptance suite");
    selftest->add_option("--criterion", o.criteria, "Criteria to run (1 to 9); default all");
    selftest->add_option("--seed", o.seed, "Seed for the randomized criteria");

    std::vector<std::string> rest(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
    std::reverse(rest.begin(), rest.end());
    try {
        app.parse(rest);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    MutationScope scope;
    try {
        set_mutation(o.mutate);
        if (*tame) return cmd_tame(o, out);
        if (*witt) return cmd_witt(o, out);
        if (*expand_cmd) return cmd_expand(o, out);
        if (*vpoint) return cmd_verify(o, true, out);
        if (*vcurve) return cmd_verify(o, false, out);
        if (*weil) return cmd_weil(o, out);
        if (*selftest) return cmd_selftest(o, out);
    } catch (const UnsupportedSingularity& e) {
        err << "unsupported singularity: " << e.what() << "\n";
        return 3;
    } catch (const InsufficientPrecision& e) {
        err << "insufficient precision: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace hlf
