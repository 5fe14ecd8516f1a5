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

#ifndef HLF_ERRORS_HPP
#define HLF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hlf {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Malformed or out-of-range input (non-prime p, non-homogeneous form, ...).
class InputError : public Error {
   public:
    using Error::Error;
};

/// A requested coefficient lies outside the known window of a truncated series.
/// axis() names the variable whose window ran out: 1 for t1, 2 for t2, 0 if unknown.
class InsufficientPrecision : public Error {
   public:
    explicit InsufficientPrecision(const std::string& what, int axis = 0) : Error(what), axis_(axis) {}
    int axis() const noexcept { return axis_; }

   private:
    int axis_;
};

class InvalidParameterChange : public Error {
   public:
    using Error::Error;
};

/// Exact division by a power of p failed while recovering Witt components.
class NonIntegralGhost : public Error {
   public:
    using Error::Error;
};

class NotOnCurve : public Error {
   public:
    using Error::Error;
};

/// Branch resolution needs Puiseux expansions (tangent cone with repeated factors).
class UnsupportedSingularity : public Error {
   public:
    using Error::Error;
};

/// An element that had to be invertible was not (zero, or a multiple of p).
class NotInvertible : public Error {
   public:
    using Error::Error;
};

}  // namespace hlf

#endif
