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

#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    std::vector<std::string> argv = {"hlfsym"};
    argv.insert(argv.end(), args.begin(), args.end());
    int code = hlf::run_cli(argv, out, err);
    return {code, out.str(), err.str()};
}

const std::vector<std::string> kOrigin = {"verify-point", "--point", "Z=1;(0,0)", "--f", "X/Z", "--g", "Y/Z", "--h", "(X+Y)/Z"};

std::vector<std::string> with(std::vector<std::string> head, const std::vector<std::string>& tail) {
    head.insert(head.end(), tail.begin(), tail.end());
    return head;
}

}  // namespace

TEST_CASE("verify-point text and JSON output") {
    Run r = run(kOrigin);
    CHECK(r.code == 0);
    CHECK(r.out.find("holds: true") != std::string::npos);
    CHECK(r.out.find("curve X + Y -> 1") != std::string::npos);

    Run j = run(with({"--json"}, kOrigin));
    REQUIRE(j.code == 0);
    auto doc = nlohmann::json::parse(j.out);
    CHECK(doc["holds"] == true);
    CHECK(doc["terms"].size() == 3);
    CHECK(run(with({"--json"}, kOrigin)).out == j.out);

    Run w = run({"--json", "--m", "2", "verify-point", "--symbol", "witt", "--point", "Z=1;(0,0)", "--f", "X/Z", "--g",
                 "Y/Z", "--h", "[X/(X+Y), 3]"});
    REQUIRE(w.code == 0);
    CHECK(nlohmann::json::parse(w.out)["precision"]["witt_length"] == 2);
}

TEST_CASE("symbols, curves and Weil") {
    Run t = run({"tame", "--f", "t1", "--g", "t2", "--h", "3"});
    CHECK(t.code == 0);
    CHECK(t.out.find("3") != std::string::npos);
    Run w = run({"--field", "2,2", "--m", "1", "witt", "--f", "t1", "--g", "t2", "--h", "[w]"});
    CHECK(w.code == 0);
    CHECK(w.out.find("(1)") != std::string::npos);
    CHECK(run({"verify-curve", "--curve", "Y", "--f", "X/Z", "--g", "(X+Z)/Z", "--h", "Y/Z"}).code == 0);
    CHECK(run({"weil", "--f", "x", "--g", "1-x"}).code == 0);
    Run e = run({"expand", "--point", "Z=1;(0,0)", "--curve", "Y^2*Z - X^2*Z - X^3", "--f", "X/Z"});
    CHECK(e.code == 0);
    CHECK(e.out.find("branch") != std::string::npos);
}

TEST_CASE("exit codes") {
    CHECK(run({"verify-point", "--point", "Z=1;(0,0)", "--f", "X", "--g", "Y/Z", "--h", "Z/X"}).code == 2);
    CHECK(run({"verify-point", "--point", "Q=1;(0,0)", "--f", "X/Z", "--g", "Y/Z", "--h", "Z/X"}).code == 2);
    CHECK(run({"no-such-command"}).code == 2);
    CHECK(run({"--field", "6,1", "weil", "--f", "x", "--g", "x"}).code == 2);
    Run cusp = run({"verify-curve", "--curve", "Y^2*Z - X^3", "--f", "X/Z", "--g", "Y/Z", "--h", "(X+Z)/Z"});
    CHECK(cusp.code == 3);
    CHECK_FALSE(cusp.err.empty());
}

TEST_CASE("injected faults are caught") {
    Run flip = run(with({"--mutate", "tame_sign_flip"}, kOrigin));
    CHECK(flip.code == 1);
    CHECK(flip.out.find("holds: false") != std::string::npos);
    // The fault does not leak into the next run.
    CHECK(run(kOrigin).code == 0);
    Run shrink = run({"--mutate", "window_shrink", "--m", "2", "verify-point", "--symbol", "witt", "--point", "Z=1;(0,0)",
                      "--f", "X/(X+Z)", "--g", "Y/Z", "--h", "[(X+Y)/Z, X/(X+2*Y)]"});
    CHECK(shrink.code == 3);
    CHECK(run({"--mutate", "nonsense"}).code == 2);
}

TEST_CASE("selftest runs a chosen criterion") {
    Run s = run({"selftest", "--criterion", "1"});
    CHECK(s.code == 0);
    CHECK(s.out.find("criterion 1") != std::string::npos);
    CHECK(s.out.find("PASS") != std::string::npos);
}
