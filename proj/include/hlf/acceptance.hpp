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
 * @file acceptance.hpp
 * @brief The bundled acceptance suite run by `hlfsym selftest` and by the
 * acceptance test binary.
 *
 * Criteria:
 *   1 Witt-vector core, 2 residue core, 3 Witt pairing properties,
 *   4 tame-symbol agreement, 5 lift independence, 6 point reciprocity,
 *   7 curve reciprocity, 8 Weil reciprocity on P^1, 9 determinism.
 */

#ifndef HLF_ACCEPTANCE_HPP
#define HLF_ACCEPTANCE_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace hlf {

struct CriterionResult {
    int id = 0;
    std::string name;
    long cases = 0;
    long failures = 0;            // wrong values or a law that does not hold
    long precision_failures = 0;  // InsufficientPrecision after the retry cap
    long other_errors = 0;        // any other exception
    double seconds = 0;
    double budget_seconds = 0;
    std::string first_failure;
    std::uint64_t digest = 0;  // hash of every value the criterion computed

    bool pass() const { return failures == 0 && precision_failures == 0 && other_errors == 0 && seconds <= budget_seconds; }
    std::string line() const;
};

struct AcceptanceOptions {
    std::uint64_t seed = 20260101;
};

CriterionResult run_criterion(int id, const AcceptanceOptions& opt = {});
/// Criteria 1 to 9 in order. Criterion 9 reruns 1 to 8 and compares digests.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt = {});

}  // namespace hlf

#endif
