/*
   Copyright 2026 The zdscheme Authors

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

#ifndef ZDSCHEME_ERRORS_HPP
#define ZDSCHEME_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace zds {

/// Malformed input text (polynomials, rationals, scheme files).
class ParseError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// A mathematical precondition of an operation does not hold
/// (duplicate points, point at infinity, quotient not a field, ...).
class PreconditionError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// A theorem-backed consistency check failed. Always a bug.
class InvariantError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

}  // namespace zds

#endif  // ZDSCHEME_ERRORS_HPP
