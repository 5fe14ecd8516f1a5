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
 * @file cli.hpp
 * @brief The hlfsym command line, callable in-process.
 *
 * Exit codes: 0 success (and the law holds), 1 a verified law fails or a
 * self-test criterion fails, 2 input error, 3 unsupported singularity or
 * insufficient precision after retries.
 */

#ifndef HLF_CLI_HPP
#define HLF_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace hlf {

/// args includes the program name, as in argv.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hlf

#endif
