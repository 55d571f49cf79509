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

#ifndef ZDSCHEME_DEDEKIND_HPP
#define ZDSCHEME_DEDEKIND_HPP

#include <vector>

#include "zdscheme/scheme.hpp"

namespace zds {

/// Gram matrix sigma(b * b') of the global trace (sum of the field traces)
/// on the germ space.
ExactMatrix trace_gram(const ZeroDimScheme& x);

/// The Dedekind complementary module as a K[x0]-module with generators
/// g_j = x0^(-shift) * numerators[j] of degree -n_j.
struct ComplementaryModule {
    int shift = 0;  // 2 r_X
    /// Germ vectors u_j, dual to the basis germs under the trace pairing.
    std::vector<Vec> duals;
    std::vector<int> degrees;  // -n_j
    /// Elements of R of degree shift - n_j with germ u_j.
    std::vector<Polynomial> numerators;
    /// Components on [-r_X, 0]; full above.
    GradedSubspaceFamily family;

    int hf(int m) const { return family.hf(m); }
};

ComplementaryModule complementary_module(const ZeroDimScheme& x);

/// delta_i = { y in V_i : u_j * y in V_{i - n_j} for all j }, on [0, 2 r_X].
GradedSubspaceFamily dedekind_different(const ZeroDimScheme& x, const ComplementaryModule& c);
bool has_minimal_different(const ZeroDimScheme& x, const GradedSubspaceFamily& delta);

/// F_i = { y in V_i : y * e stays in V_i for every unit vector e }, on [0, r_X].
GradedSubspaceFamily conductor(const ZeroDimScheme& x);
/// (F^2)_i spanned by products F_a * F_b with a + b = i, on [0, up_to].
GradedSubspaceFamily ideal_product(const ZeroDimScheme& x, const GradedSubspaceFamily& a,
                                   const GradedSubspaceFamily& b, int up_to);
/// tr(C) = delta * C on [0, 2 r_X].
GradedSubspaceFamily trace_ideal(const ZeroDimScheme& x, const GradedSubspaceFamily& delta,
                                 const ComplementaryModule& c);

/// F^2 in delta in F, componentwise on [0, 2 r_X].
bool check_sandwich(const ZeroDimScheme& x, const GradedSubspaceFamily& delta, const GradedSubspaceFamily& f);
/// The degree-zero part of F * C is the whole germ space.
bool check_dedekind_formula(const ZeroDimScheme& x, const GradedSubspaceFamily& f, const ComplementaryModule& c);
/// For every j, the block of p_j (that is, x0^(r-1) (I_{Y/X})_r) is not
/// contained in delta_{2r-1}.
bool cb_via_different(const ZeroDimScheme& x, const GradedSubspaceFamily& delta);

/// Homogeneous ideal generators of a family of R-ideal components, degree
/// by degree up to up_to, written on standard monomials.
std::vector<Polynomial> family_generators(const ZeroDimScheme& x, const GradedSubspaceFamily& f, int up_to);

}  // namespace zds

#endif  // ZDSCHEME_DEDEKIND_HPP
