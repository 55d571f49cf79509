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

#include "zdscheme/kaehler.hpp"

#include <algorithm>

#include "zdscheme/errors.hpp"

namespace zds {

int default_kaehler_bound(const ZeroDimScheme& x) {
    const int r = x.regularity_index();
    return std::max(2 * r + 2, x.n() * r + 1);
}

Polynomial polynomial_determinant(const std::vector<std::vector<Polynomial>>& m) {
    const size_t k = m.size();
    if (k == 0) throw std::invalid_argument("determinant of an empty matrix");
    if (k == 1) return m[0][0];
    if (k == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    Polynomial det(m[0][0].nvars());
    for (size_t c = 0; c < k; ++c) {
        if (m[0][c].is_zero()) continue;
        std::vector<std::vector<Polynomial>> minor;
        for (size_t r = 1; r < k; ++r) {
            std::vector<Polynomial> row;
            for (size_t cc = 0; cc < k; ++cc)
                if (cc != c) row.push_back(m[r][cc]);
            minor.push_back(std::move(row));
        }
        const Polynomial term = m[0][c] * polynomial_determinant(minor);
        if (c % 2 == 0)
            det += term;
        else
            det -= term;
    }
    return det;
}

KaehlerDifferent kaehler_different(const ZeroDimScheme& x, int degree_bound) {
    const int n = x.n();
    KaehlerDifferent k;
    k.bound = degree_bound < 0 ? default_kaehler_bound(x) : degree_bound;
    const auto& gens = x.groebner_basis().generators();
    const size_t m = gens.size();
    if (m < static_cast<size_t>(n)) throw InvariantError("vanishing ideal has fewer than n generators");

    std::vector<std::vector<Polynomial>> jac(m);
    for (size_t a = 0; a < m; ++a)
        for (int i = 1; i <= n; ++i) jac[a].push_back(gens[a].derivative(i));

    // all n-subsets of the generator rows, in lexicographic order
    std::vector<size_t> rows(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) rows[static_cast<size_t>(i)] = static_cast<size_t>(i);
    std::vector<std::pair<int, Vec>> germs;
    for (;;) {
        std::vector<std::vector<Polynomial>> sub;
        for (size_t r : rows) sub.push_back(jac[r]);
        const Polynomial nf = normal_form(polynomial_determinant(sub), x.groebner_basis());
        if (!nf.is_zero()) {
            if (!nf.is_homogeneous()) throw InvariantError("Jacobian minor is not homogeneous");
            germs.emplace_back(nf.degree(), x.germ_homogeneous(nf));
            k.minors.push_back(nf);
        }
        int i = n - 1;
        while (i >= 0 && rows[static_cast<size_t>(i)] == m - static_cast<size_t>(n) + static_cast<size_t>(i)) --i;
        if (i < 0) break;
        ++rows[static_cast<size_t>(i)];
        for (int t = i + 1; t < n; ++t) rows[static_cast<size_t>(t)] = rows[static_cast<size_t>(t - 1)] + 1;
    }

    std::vector<Subspace> comps;
    for (int i = 0; i <= k.bound; ++i) {
        Subspace s(x.degree());
        for (const auto& [deg, g] : germs) {
            if (deg > i || s.is_full()) continue;
            for (const auto& b : x.component(i - deg).basis()) {
                if (s.is_full()) break;
                s.insert(x.multiply(g, b));
            }
        }
        comps.push_back(std::move(s));
    }
    for (int i = 0; i + 1 <= k.bound; ++i)
        if (comps[static_cast<size_t>(i)].is_full() && comps[static_cast<size_t>(i) + 1].is_full()) {
            k.stabilized = true;
            k.stabilization_degree = i;
            break;
        }
    k.family = GradedSubspaceFamily(x.degree(), 0, std::move(comps),
                                    k.stabilized ? GradedSubspaceFamily::Above::Full
                                                 : GradedSubspaceFamily::Above::Stable);
    return k;
}

ComparisonResult compare_differents(const ZeroDimScheme& x, const KaehlerDifferent& theta,
                                    const GradedSubspaceFamily& delta) {
    if (theta.family.hi() < 2 * x.regularity_index())
        throw PreconditionError("Kaehler window [0, " + std::to_string(theta.family.hi()) +
                                "] does not reach 2 r_X = " + std::to_string(2 * x.regularity_index()));
    ComparisonResult res;
    bool contained = true;
    for (int i = 0; i <= theta.family.hi(); ++i) {
        const Subspace& t = theta.family.at(i);
        const Subspace& d = delta.at(i);
        if (t == d) continue;
        if (res.first_disagreement < 0) res.first_disagreement = i;
        if (!t.is_subspace_of(d)) contained = false;
    }
    if (res.first_disagreement < 0 && !theta.stabilized) {
        // equal inside the window but the window did not see theta fill up
        res.first_disagreement = theta.family.hi() + 1;
    }
    if (res.first_disagreement < 0)
        res.kind = DifferentComparison::Equal;
    else
        res.kind = contained ? DifferentComparison::KaehlerStrictlySmaller : DifferentComparison::Incomparable;
    return res;
}

const char* to_string(DifferentComparison c) {
    switch (c) {
        case DifferentComparison::Equal:
            return "equal";
        case DifferentComparison::KaehlerStrictlySmaller:
            return "kaehler_strictly_smaller";
        case DifferentComparison::Incomparable:
            return "incomparable";
    }
    return "unknown";
}

}  // namespace zds
