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

#include "zdscheme/classify.hpp"

#include "zdscheme/dedekind.hpp"
#include "zdscheme/errors.hpp"
#include "zdscheme/separators.hpp"

namespace zds {

int delta_invariant(const ZeroDimScheme& x) {
    const int r = x.regularity_index();
    return x.hf(r) - x.hf(r - 1);
}

bool cayley_bacharach_or_single(const ZeroDimScheme& x) {
    return x.degree() < 2 || is_cayley_bacharach(x);
}

bool is_arithmetically_gorenstein(const ZeroDimScheme& x, const GradedSubspaceFamily& delta) {
    return cayley_bacharach_or_single(x) && delta.hf(x.regularity_index()) > 0;
}

int socle_dimension(const ZeroDimScheme& x, int i) {
    if (i < 0) return 0;
    const Subspace& vi = x.component(i);
    if (vi.is_full()) return static_cast<int>(vi.dim()) - x.hf(i - 1);
    // y in V_i with X_k y in V_i for all k; the classes modulo V_{i-1}
    std::vector<Vec> constraints;
    const auto ann = x.component_annihilator(i);
    for (const auto& g : x.component(1).basis()) {
        const ExactMatrix mt = x.multiplication_matrix(g).transpose();
        for (const auto& a : ann) constraints.push_back(mt * a);
    }
    Subspace socle(x.degree());
    for (const auto& y : constrained_combinations(vi.basis(), constraints)) socle.insert(y);
    return static_cast<int>(socle.dim()) - x.hf(i - 1);
}

bool is_level(const ZeroDimScheme& x) {
    for (int i = 0; i < x.regularity_index(); ++i)
        if (socle_dimension(x, i) != 0) return false;
    return true;
}

bool is_nearly_gorenstein(const ZeroDimScheme& x, const GradedSubspaceFamily& trace) {
    return x.component(1).is_subspace_of(trace.at(1));
}

bool is_almost_gorenstein(const ZeroDimScheme& x, const GradedSubspaceFamily& delta) {
    return cayley_bacharach_or_single(x) && delta.hf(x.regularity_index() + 1) == x.hf(1);
}

namespace {

// C(s, i), saturating at cap + 1
size_t bounded_binomial(size_t s, size_t i, size_t cap) {
    size_t c = 1;
    for (size_t k = 1; k <= i; ++k) {
        c = c * (s - i + k) / k;
        if (c > cap) return cap + 1;
    }
    return c;
}

}  // namespace

bool is_uniform(const ZeroDimScheme& x, int i, int j, size_t cap) {
    if (!x.all_rational()) throw PreconditionError("uniformity needs K-rational points");
    const size_t s = x.num_points();
    if (i < 1 || static_cast<size_t>(i) >= s)
        throw PreconditionError("uniformity index i = " + std::to_string(i) + " outside [1, " +
                                std::to_string(s - 1) + "]");
    if (j < 0) throw PreconditionError("uniformity degree j must be nonnegative");
    if (bounded_binomial(s, static_cast<size_t>(i), cap) > cap)
        throw PreconditionError("uniformity enumeration exceeds the cap of " + std::to_string(cap) + " subsets");

    // HF_Y(j) = HF_X(j) iff no nonzero element of V_j vanishes on Y
    const auto& basis = x.component(j).basis();
    const size_t h = basis.size();
    std::vector<size_t> removed(static_cast<size_t>(i));
    for (size_t k = 0; k < removed.size(); ++k) removed[k] = k;
    for (;;) {
        std::vector<Vec> rows;
        for (const auto& b : basis) {
            Vec row;
            size_t next = 0;
            for (size_t p = 0; p < s; ++p) {
                if (next < removed.size() && removed[next] == p) {
                    ++next;
                    continue;
                }
                row.push_back(b[p]);
            }
            rows.push_back(std::move(row));
        }
        if (h > 0 && ExactMatrix::from_rows(rows, s - static_cast<size_t>(i)).rank() < h) return false;
        int k = i - 1;
        while (k >= 0 && removed[static_cast<size_t>(k)] == s - static_cast<size_t>(i) + static_cast<size_t>(k)) --k;
        if (k < 0) break;
        ++removed[static_cast<size_t>(k)];
        for (int t = k + 1; t < i; ++t) removed[static_cast<size_t>(t)] = removed[static_cast<size_t>(t - 1)] + 1;
    }
    return true;
}

UniformAgDeltaCheck check_uniform_ag_delta(const ZeroDimScheme& x, const GradedSubspaceFamily& delta) {
    UniformAgDeltaCheck c;
    c.delta_invariant = delta_invariant(x);
    const int r = x.regularity_index();
    if (r < 2 || x.num_points() < 3) return c;
    if (!is_almost_gorenstein(x, delta)) return c;
    if (!is_uniform(x, 2, r - 1)) return c;
    c.applicable = true;
    c.holds = c.delta_invariant == 1;
    return c;
}

ClassificationFlags classify(const ZeroDimScheme& x, const GradedSubspaceFamily& delta,
                             const GradedSubspaceFamily& trace,
                             const std::vector<std::pair<int, int>>& uniformity_pairs) {
    ClassificationFlags f;
    f.delta_invariant = delta_invariant(x);
    f.cayley_bacharach = cayley_bacharach_or_single(x);
    f.arithmetically_gorenstein = f.cayley_bacharach && delta.hf(x.regularity_index()) > 0;
    f.level = is_level(x);
    f.nearly_gorenstein = is_nearly_gorenstein(x, trace);
    f.almost_gorenstein = f.cayley_bacharach && delta.hf(x.regularity_index() + 1) == x.hf(1);
    f.minimal_different = has_minimal_different(x, delta);
    for (const auto& [i, j] : uniformity_pairs) f.uniformity.push_back({i, j, is_uniform(x, i, j)});
    return f;
}

}  // namespace zds
