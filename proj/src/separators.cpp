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

#include "zdscheme/separators.hpp"

#include <algorithm>

#include "zdscheme/errors.hpp"

namespace zds {

namespace {

void check_point(const ZeroDimScheme& x, size_t j) {
    if (j >= x.num_points())
        throw PreconditionError("point index " + std::to_string(j) + " out of range (scheme has " +
                                std::to_string(x.num_points()) + " points)");
}

}  // namespace

Subspace subscheme_ideal_component(const ZeroDimScheme& x, size_t j, int i) {
    check_point(x, j);
    const size_t d = x.degree();
    if (i < 0) return Subspace(d);
    std::vector<Vec> block;
    for (size_t b = 0; b < x.kappa(j); ++b) block.push_back(x.unit(j, b));
    return Subspace::span(d, constrained_combinations(block, x.component_annihilator(i)));
}

GradedSubspaceFamily subscheme_ideal_components(const ZeroDimScheme& x, size_t j, int up_to) {
    std::vector<Subspace> comps;
    for (int i = 0; i <= up_to; ++i) comps.push_back(subscheme_ideal_component(x, j, i));
    return GradedSubspaceFamily(x.degree(), 0, std::move(comps), GradedSubspaceFamily::Above::Stable);
}

SeparatorSet separator_set(const ZeroDimScheme& x, size_t j) {
    check_point(x, j);
    SeparatorSet s;
    s.point = j;
    s.kappa = x.kappa(j);
    const int r = x.regularity_index();
    const int n = x.n();
    std::vector<Vec> var_germs;
    for (int k = 0; k < n; ++k) var_germs.push_back(x.germ_affine(Polynomial::variable(n, k)));

    Subspace found(x.degree());
    for (int i = 0; i <= r && found.dim() < s.kappa; ++i) {
        const Subspace comp = subscheme_ideal_component(x, j, i);
        if (comp.dim() == found.dim()) continue;
        std::vector<Vec> candidates;
        for (const auto& g : s.germs)
            for (const auto& v : var_germs) candidates.push_back(x.multiply(v, g));
        for (const auto& b : comp.basis()) candidates.push_back(b);
        for (const auto& c : candidates) {
            if (found.dim() == comp.dim()) break;
            if (!comp.contains(c) || !found.insert(c)) continue;
            s.germs.push_back(c);
            s.degrees.push_back(i);
            s.minimal.push_back(x.lift(c, i));
        }
        if (found.dim() != comp.dim()) throw InvariantError("separator completion failed");
    }
    if (found.dim() != s.kappa) throw InvariantError("(I_Y/X)_r does not have dimension kappa_j");
    s.alpha = s.degrees.front();
    s.mu = s.degrees.back();
    const Polynomial x0 = Polynomial::variable(n + 1, 0);
    for (size_t k = 0; k < s.minimal.size(); ++k) {
        Polynomial f = s.minimal[k];
        for (int e = s.degrees[k]; e < r; ++e) f = f * x0;
        s.standard.push_back(std::move(f));
    }
    return s;
}

int point_degree(const ZeroDimScheme& x, size_t j) {
    check_point(x, j);
    // first degree where (I_{Y/X})_i has full dimension kappa_j
    for (int i = 0; i < x.regularity_index(); ++i)
        if (subscheme_ideal_component(x, j, i).dim() == x.kappa(j)) return i;
    return x.regularity_index();
}

bool has_cbp(const ZeroDimScheme& x, int d) {
    const int r = x.regularity_index();
    if (d < 0 || d > r - 1)
        throw PreconditionError("CBP(" + std::to_string(d) + ") needs 0 <= d <= r_X - 1 = " + std::to_string(r - 1));
    for (size_t j = 0; j < x.num_points(); ++j)
        if (subscheme_ideal_component(x, j, d).dim() >= x.kappa(j)) return false;
    return true;
}

int cbp_max(const ZeroDimScheme& x) {
    int m = x.regularity_index();
    for (size_t j = 0; j < x.num_points(); ++j) m = std::min(m, point_degree(x, j));
    return m - 1;
}

bool is_cayley_bacharach(const ZeroDimScheme& x) {
    if (x.degree() < 2) throw PreconditionError("the Cayley-Bacharach property needs a scheme of degree at least 2");
    return has_cbp(x, x.regularity_index() - 1);
}

}  // namespace zds
