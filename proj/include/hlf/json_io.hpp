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
 * @file json_io.hpp
 * @brief JSON form of reciprocity reports and acceptance results.
 *
 * Report schema:
 *   {"law": "tame_point", "field": {"p": 5, "n": 1}, "holds": true, "aggregate": "1",
 *    "terms": [{"place": "...", "value": "4", "degree": 1, "at_infinity": false}],
 *    "spot_checks": [...same shape...],
 *    "precision": {"t1_window": 8, "t2_window": 4, "witt_length": 0}}
 * "field" is the field the values live in: F_q for tame laws, F_p for Witt laws.
 * Values use the element and Witt-vector text forms, so they parse back.
 */

#ifndef HLF_JSON_IO_HPP
#define HLF_JSON_IO_HPP

#include "hlf/acceptance.hpp"
#include "hlf/reciprocity.hpp"
#include "json.hpp"

namespace hlf {

nlohmann::ordered_json report_to_json(const ReciprocityReport& r);
/// Inverse of report_to_json. Throws InputError on a malformed document.
ReciprocityReport report_from_json(const nlohmann::ordered_json& j);

nlohmann::ordered_json criterion_to_json(const CriterionResult& c);

}  // namespace hlf

#endif
