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

#ifndef ZDSCHEME_CHECKS_HPP
#define ZDSCHEME_CHECKS_HPP

#include <string>
#include <vector>

#include "zdscheme/analysis.hpp"

namespace zds {

struct CheckResult {
    std::string name;
    bool passed = true;
    /// First counterexample found, empty when passed.
    std::string detail;
};

enum class CheckDepth {
    /// Checks on already computed data only.
    Standard,
    /// Adds checks that rebuild subschemes (separator regimes, uniformity).
    Full,
};

/// Theorem-backed invariants of an analysis. A failure indicates a bug.
std::vector<CheckResult> run_checks(const ZeroDimScheme& x, const Analysis& a,
                                    CheckDepth depth = CheckDepth::Standard);

/// Names of the failing checks, empty when all passed.
std::vector<std::string> failed_checks(const std::vector<CheckResult>& results);

}  // namespace zds

#endif  // ZDSCHEME_CHECKS_HPP
