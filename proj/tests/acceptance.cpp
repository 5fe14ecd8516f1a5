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

// Runs acceptance criteria 1 to 9 and prints one line per criterion.

#include <iostream>

#include "hlf/acceptance.hpp"

int main() {
    bool ok = true;
    for (const auto& c : hlf::run_acceptance()) {
        std::cout << c.line() << std::endl;
        ok = ok && c.pass();
    }
    std::cout << (ok ? "acceptance: PASS" : "acceptance: FAIL") << std::endl;
    return ok ? 0 : 1;
}
