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

#ifndef ZDSCHEME_CLASSIFY_HPP
#define ZDSCHEME_CLASSIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "zdscheme/scheme.hpp"

namespace zds {

/// HF_X(r_X) - HF_X(r_X - 1).
int delta_invariant(const ZeroDimScheme& x);

/// CB and HF_delta(r_X) > 0. A single point counts as Gorenstein.
bool is_arithmetically_gorenstein(const ZeroDimScheme& x, const GradedSubspaceFamily& delta);

/// Socle of R / x0 R concentrated in degree r_X.
bool is_level(const ZeroDimScheme& x);
/// Dimension of the socle of R / x0 R in degree i.
int socle_dimension(const ZeroDimScheme& x, int i);

/// R_1 contained in tr(C)_1.
bool is_nearly_gorenstein(const ZeroDimScheme& x, const GradedSubspaceFamily& trace);

/// CB and HF_delta(r_X + 1) = HF_X(1).
bool is_almost_gorenstein(const ZeroDimScheme& x, const GradedSubspaceFamily& delta);

/// CB, with the degree-1 convention (vacuously true).
bool cayley_bacharach_or_single(const ZeroDimScheme& x);

constexpr size_t kDefaultUniformityCap = 100000;

/// Every subscheme of degree deg(X) - i has the same HF at j.
/// Rational points only; requires 1 <= i < s and j >= 0.
bool is_uniform(const ZeroDimScheme& x, int i, int j, size_t cap = kDefaultUniformityCap);

struct UniformityResult {
    int i = 0;
    int j = 0;
    bool holds = false;
};

struct UniformAgDeltaCheck {
    /// Hypotheses: (2, r_X - 1)-uniform, almost Gorenstein, r_X >= 2.
    bool applicable = false;
    /// Delta_X = 1 whenever applicable.
    bool holds = true;
    int delta_invariant = 0;
};

UniformAgDeltaCheck check_uniform_ag_delta(const ZeroDimScheme& x, const GradedSubspaceFamily& delta);

struct ClassificationFlags {
    int delta_invariant = 0;
    bool arithmetically_gorenstein = false;
    bool level = false;
    bool nearly_gorenstein = false;
    bool almost_gorenstein = false;
    bool cayley_bacharach = false;
    bool minimal_different = false;
    std::vector<UniformityResult> uniformity;
};

ClassificationFlags classify(const ZeroDimScheme& x, const GradedSubspaceFamily& delta,
                             const GradedSubspaceFamily& trace,
                             const std::vector<std::pair<int, int>>& uniformity_pairs = {});

}  // namespace zds

#endif  // ZDSCHEME_CLASSIFY_HPP
