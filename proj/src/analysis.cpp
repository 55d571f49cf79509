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

#include "zdscheme/analysis.hpp"

#include <algorithm>

namespace zds {

Analysis analyze(const ZeroDimScheme& x, const AnalysisOptions& options) {
    Analysis a;
    const int r = x.regularity_index();
    for (size_t j = 0; j < x.num_points(); ++j) {
        a.separators.push_back(separator_set(x, j));
        a.point_degrees.push_back(a.separators.back().mu);
    }
    a.cbp_max = std::min(r, *std::min_element(a.point_degrees.begin(), a.point_degrees.end())) - 1;

    a.complementary = complementary_module(x);
    a.delta = dedekind_different(x, a.complementary);
    a.conductor = conductor(x);
    a.conductor_square = ideal_product(x, a.conductor, a.conductor, 2 * r);
    a.trace = trace_ideal(x, a.delta, a.complementary);
    a.sandwich = check_sandwich(x, a.delta, a.conductor);
    a.dedekind_formula = check_dedekind_formula(x, a.conductor, a.complementary);

    if (x.all_rational() || options.kaehler_for_nonrational) {
        a.kaehler = kaehler_different(x, options.kaehler_bound);
        a.comparison = compare_differents(x, *a.kaehler, a.delta);
    }
    a.flags = classify(x, a.delta, a.trace, options.uniformity);
    return a;
}

}  // namespace zds
