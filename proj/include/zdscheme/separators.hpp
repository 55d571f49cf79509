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

#ifndef ZDSCHEME_SEPARATORS_HPP
#define ZDSCHEME_SEPARATORS_HPP

#include <vector>

#include "zdscheme/scheme.hpp"

namespace zds {

struct SeparatorSet {
    size_t point = 0;
    size_t kappa = 0;
    /// Minimal separators, homogeneous in X0..Xn, by increasing degree.
    std::vector<Polynomial> minimal;
    std::vector<Vec> germs;
    std::vector<int> degrees;
    int alpha = 0;
    int mu = 0;
    /// X0^(r - deg) times the minimal separators, all of degree r_X.
    std::vector<Polynomial> standard;
};

/// (I_{Y/X})_i for Y = X \ {p_j}: elements of R_i vanishing at every other
/// point, on the window [0, up_to] (stable above).
GradedSubspaceFamily subscheme_ideal_components(const ZeroDimScheme& x, size_t j, int up_to);
Subspace subscheme_ideal_component(const ZeroDimScheme& x, size_t j, int i);

/// Degree by degree: keep the earlier separators (as X0-multiples), then
/// try X_k times earlier separators, then complete from the echelon basis.
SeparatorSet separator_set(const ZeroDimScheme& x, size_t j);

/// Degree of p_j in X (the largest minimal separator degree).
int point_degree(const ZeroDimScheme& x, size_t j);

/// CBP(d) for 0 <= d <= r_X - 1; throws PreconditionError otherwise.
bool has_cbp(const ZeroDimScheme& x, int d);
/// Largest d in [0, r_X - 1] with CBP(d); -1 if there is none.
int cbp_max(const ZeroDimScheme& x);
/// CBP(r_X - 1); throws PreconditionError for schemes of degree 1.
bool is_cayley_bacharach(const ZeroDimScheme& x);

}  // namespace zds

#endif  // ZDSCHEME_SEPARATORS_HPP
