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

#ifndef ZDSCHEME_CLI_HPP
#define ZDSCHEME_CLI_HPP

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "zdscheme/report.hpp"

namespace zds {

enum ExitCode : int {
    kExitOk = 0,
    kExitError = 1,
    kExitParse = 2,
    kExitPrecondition = 3,
    kExitInvariant = 4,
};

/// "i,j" -> (i, j). Throws ParseError.
std::pair<int, int> parse_uniformity_pair(const std::string& text);
/// "A..B" -> (A, B), where both ends may be negative. Throws ParseError.
std::pair<long long, long long> parse_range(const std::string& text);

/// Full pipeline on one scheme: build, analyze, run the invariant checks.
AnalysisReport analyze_input(const SchemeInput& input, const AnalysisOptions& options);

/// Entry point of the zdscheme executable; returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zds

#endif  // ZDSCHEME_CLI_HPP
