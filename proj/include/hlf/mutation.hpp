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
 * @file mutation.hpp
 * @brief Deliberate faults for checking that the self-test notices them.
 */

#ifndef HLF_MUTATION_HPP
#define HLF_MUTATION_HPP

#include <atomic>

namespace hlf {

struct Mutations {
    /// Flip the sign term of the determinant formula for the higher tame symbol.
    std::atomic<bool> tame_sign_flip{false};
    /// Clamp every expansion window to one term and disable precision retries.
    std::atomic<bool> window_shrink{false};
};

inline Mutations& mutations() {
    static Mutations m;
    return m;
}

}  // namespace hlf

#endif
