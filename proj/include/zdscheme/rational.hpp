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

#ifndef ZDSCHEME_RATIONAL_HPP
#define ZDSCHEME_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace zds {

/// Exact rational number, always kept in canonical form (gcd 1, positive
/// denominator, zero is 0/1).
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "-p", "p/q" (optional surrounding blanks). Throws ParseError.
Rational parse_rational(std::string_view text);

/// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& q);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

/// Least common multiple of the denominators of a vector.
Integer common_denominator(const std::vector<Rational>& v);

}  // namespace zds

#endif  // ZDSCHEME_RATIONAL_HPP
