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

#ifndef ZDSCHEME_KAEHLER_HPP
#define ZDSCHEME_KAEHLER_HPP

#include <vector>

#include "zdscheme/scheme.hpp"

namespace zds {

struct KaehlerDifferent {
    /// Nonzero normal forms of the n-minors of the Jacobian of the GB
    /// generators with respect to X1..Xn.
    std::vector<Polynomial> minors;
    /// Components on [0, bound].
    GradedSubspaceFamily family;
    int bound = 0;
    /// True when two consecutive components inside the window are full.
    bool stabilized = false;
    /// First full degree (meaningful when stabilized).
    int stabilization_degree = -1;

    int hf(int i) const { return family.hf(i); }
};

/// Default window: max(2 r + 2, n r + 1).
int default_kaehler_bound(const ZeroDimScheme& x);
/// degree_bound < 0 selects the default window.
KaehlerDifferent kaehler_different(const ZeroDimScheme& x, int degree_bound = -1);

/// Determinant of a square polynomial matrix by cofactor expansion.
Polynomial polynomial_determinant(const std::vector<std::vector<Polynomial>>& m);

enum class DifferentComparison { Equal, KaehlerStrictlySmaller, Incomparable };

struct ComparisonResult {
    DifferentComparison kind = DifferentComparison::Equal;
    /// First degree where the components differ; -1 when equal.
    int first_disagreement = -1;
};

/// Componentwise comparison of the Kaehler and Dedekind differents on the
/// Kaehler window. Throws PreconditionError if the window stops before
/// 2 r_X.
ComparisonResult compare_differents(const ZeroDimScheme& x, const KaehlerDifferent& theta,
                                    const GradedSubspaceFamily& delta);

const char* to_string(DifferentComparison c);

}  // namespace zds

#endif  // ZDSCHEME_KAEHLER_HPP
