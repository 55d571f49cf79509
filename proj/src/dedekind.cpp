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

#include "zdscheme/dedekind.hpp"

#include "zdscheme/errors.hpp"

namespace zds {

ExactMatrix trace_gram(const ZeroDimScheme& x) {
    const size_t d = x.degree();
    ExactMatrix m(d, d);
    for (size_t j = 0; j < x.num_points(); ++j) {
        const ExactMatrix g = x.field(j).trace_form();
        const size_t off = x.block_offset(j);
        for (size_t a = 0; a < g.rows(); ++a)
            for (size_t b = 0; b < g.cols(); ++b) m(off + a, off + b) = g(a, b);
    }
    return m;
}

ComplementaryModule complementary_module(const ZeroDimScheme& x) {
    const size_t d = x.degree();
    const int r = x.regularity_index();
    const auto minv = trace_gram(x).inverse();
    if (!minv) throw InvariantError("trace form is degenerate");
    ComplementaryModule c;
    c.shift = 2 * r;
    for (size_t j = 0; j < d; ++j) {
        c.duals.push_back(*minv * x.coordinate_functional(j));
        c.degrees.push_back(-x.kx0_degrees()[j]);
        c.numerators.push_back(x.lift(c.duals.back(), 2 * r - x.kx0_degrees()[j]));
    }
    for (size_t a = 0; a < d; ++a)
        for (size_t b = 0; b < d; ++b)
            if (x.trace(x.multiply(x.basis_germ(a), c.duals[b])) != (a == b ? 1 : 0))
                throw InvariantError("complementary module generators are not trace-dual to the basis");
    std::vector<Subspace> comps;
    for (int m = -r; m <= 0; ++m) {
        std::vector<Vec> gens;
        for (size_t j = 0; j < d; ++j)
            if (x.kx0_degrees()[j] >= -m) gens.push_back(c.duals[j]);
        comps.push_back(Subspace::span(d, gens));
    }
    c.family = GradedSubspaceFamily(d, -r, std::move(comps), GradedSubspaceFamily::Above::Full);
    return c;
}

namespace {

// { y in base : for each (matrix, target) pair, matrix * y lies in target }
Subspace preimage_in(const ZeroDimScheme& x, const Subspace& base,
                     const std::vector<std::pair<const ExactMatrix*, int>>& conditions) {
    std::vector<Vec> rows;
    for (const auto& [m, target] : conditions) {
        const auto ann = x.component_annihilator(target);
        if (ann.empty()) continue;
        const ExactMatrix mt = m->transpose();
        for (const auto& a : ann) rows.push_back(mt * a);
    }
    return Subspace::span(x.degree(), constrained_combinations(base.basis(), rows));
}

}  // namespace

GradedSubspaceFamily dedekind_different(const ZeroDimScheme& x, const ComplementaryModule& c) {
    const size_t d = x.degree();
    const int r = x.regularity_index();
    std::vector<ExactMatrix> mult;
    for (const auto& u : c.duals) mult.push_back(x.multiplication_matrix(u));
    std::vector<Subspace> comps;
    for (int i = 0; i <= 2 * r; ++i) {
        std::vector<std::pair<const ExactMatrix*, int>> cond;
        for (size_t j = 0; j < d; ++j) cond.emplace_back(&mult[j], i - x.kx0_degrees()[j]);
        comps.push_back(preimage_in(x, x.component(i), cond));
    }
    if (!comps.back().is_full()) throw InvariantError("x0^(2r) does not lie in the Dedekind different");
    return GradedSubspaceFamily(d, 0, std::move(comps), GradedSubspaceFamily::Above::Full);
}

bool has_minimal_different(const ZeroDimScheme& x, const GradedSubspaceFamily& delta) {
    for (int i = 0; i < 2 * x.regularity_index(); ++i)
        if (delta.hf(i) != 0) return false;
    return true;
}

GradedSubspaceFamily conductor(const ZeroDimScheme& x) {
    const size_t d = x.degree();
    const int r = x.regularity_index();
    std::vector<ExactMatrix> mult;
    for (size_t j = 0; j < x.num_points(); ++j)
        for (size_t b = 0; b < x.kappa(j); ++b) mult.push_back(x.multiplication_matrix(x.unit(j, b)));
    std::vector<Subspace> comps;
    for (int i = 0; i <= r; ++i) {
        std::vector<std::pair<const ExactMatrix*, int>> cond;
        for (const auto& m : mult) cond.emplace_back(&m, i);
        comps.push_back(preimage_in(x, x.component(i), cond));
    }
    if (!comps.back().is_full()) throw InvariantError("conductor is not full in degree r_X");
    return GradedSubspaceFamily(d, 0, std::move(comps), GradedSubspaceFamily::Above::Full);
}

GradedSubspaceFamily ideal_product(const ZeroDimScheme& x, const GradedSubspaceFamily& a,
                                   const GradedSubspaceFamily& b, int up_to) {
    std::vector<Subspace> comps;
    for (int i = 0; i <= up_to; ++i) {
        Subspace s(x.degree());
        for (int k = 0; k <= i && !s.is_full(); ++k) s = s.sum(x.product(a.at(k), b.at(i - k)));
        comps.push_back(std::move(s));
    }
    return GradedSubspaceFamily(x.degree(), 0, std::move(comps), GradedSubspaceFamily::Above::Full);
}

GradedSubspaceFamily trace_ideal(const ZeroDimScheme& x, const GradedSubspaceFamily& delta,
                                 const ComplementaryModule& c) {
    const int r = x.regularity_index();
    std::vector<Subspace> comps;
    for (int i = 0; i <= 2 * r; ++i) {
        Subspace s(x.degree());
        for (int a = 0; a <= i + r && !s.is_full(); ++a) s = s.sum(x.product(delta.at(a), c.family.at(i - a)));
        if (!s.is_subspace_of(x.component(i))) throw InvariantError("trace ideal leaves the ring");
        comps.push_back(std::move(s));
    }
    return GradedSubspaceFamily(x.degree(), 0, std::move(comps), GradedSubspaceFamily::Above::Full);
}

bool check_sandwich(const ZeroDimScheme& x, const GradedSubspaceFamily& delta, const GradedSubspaceFamily& f) {
    const int top = 2 * x.regularity_index();
    const auto f2 = ideal_product(x, f, f, top);
    for (int i = 0; i <= top; ++i)
        if (!f2.at(i).is_subspace_of(delta.at(i)) || !delta.at(i).is_subspace_of(f.at(i))) return false;
    return true;
}

bool check_dedekind_formula(const ZeroDimScheme& x, const GradedSubspaceFamily& f, const ComplementaryModule& c) {
    Subspace s(x.degree());
    for (int a = 0; a <= x.regularity_index() && !s.is_full(); ++a) s = s.sum(x.product(f.at(a), c.family.at(-a)));
    return s.is_full();
}

bool cb_via_different(const ZeroDimScheme& x, const GradedSubspaceFamily& delta) {
    const int r = x.regularity_index();
    const Subspace& target = delta.at(2 * r - 1);
    for (size_t j = 0; j < x.num_points(); ++j) {
        bool contained = true;
        for (size_t b = 0; b < x.kappa(j) && contained; ++b) contained = target.contains(x.unit(j, b));
        if (contained) return false;
    }
    return true;
}

std::vector<Polynomial> family_generators(const ZeroDimScheme& x, const GradedSubspaceFamily& f, int up_to) {
    std::vector<Polynomial> gens;
    const Subspace& v1 = x.component(1);
    for (int i = std::max(0, f.lo()); i <= up_to; ++i) {
        Subspace have = x.product(v1, f.at(i - 1));
        for (const auto& b : f.at(i).basis())
            if (have.insert(b)) gens.push_back(x.lift(b, i));
    }
    return gens;
}

}  // namespace zds
