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

#ifndef ZDSCHEME_ANALYSIS_HPP
#define ZDSCHEME_ANALYSIS_HPP

#include <optional>
#include <utility>
#include <vector>

#include "zdscheme/classify.hpp"
#include "zdscheme/dedekind.hpp"
#include "zdscheme/kaehler.hpp"
#include "zdscheme/separators.hpp"

namespace zds {

struct AnalysisOptions {
    /// Kaehler window; negative selects default_kaehler_bound.
    int kaehler_bound = -1;
    std::vector<std::pair<int, int>> uniformity;
    /// Compute the Kaehler different when residue-field points are present.
    bool kaehler_for_nonrational = false;
};

/// Everything the report and the invariant checks need, computed once.
struct Analysis {
    std::vector<SeparatorSet> separators;
    std::vector<int> point_degrees;
    int cbp_max = -1;
    ComplementaryModule complementary;
    GradedSubspaceFamily delta;
    GradedSubspaceFamily conductor;
    /// F^2 on [0, 2 r_X].
    GradedSubspaceFamily conductor_square;
    GradedSubspaceFamily trace;
    bool sandwich = false;
    bool dedekind_formula = false;
    std::optional<KaehlerDifferent> kaehler;
    std::optional<ComparisonResult> comparison;
    ClassificationFlags flags;
};

Analysis analyze(const ZeroDimScheme& x, const AnalysisOptions& options = {});

}  // namespace zds

#endif  // ZDSCHEME_ANALYSIS_HPP
