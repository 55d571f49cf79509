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

// Brute-force model of the Dedekind different and the conductor for
// rational points. It works only with point evaluations: R_i is the row
// space of the degree-i monomial evaluation matrix, and membership in R is a
// rank test against that matrix.

#ifndef ZDSCHEME_TESTS_ORACLE_HPP
#define ZDSCHEME_TESTS_ORACLE_HPP

#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "test_support.hpp"
#include "zdscheme/dedekind.hpp"

namespace zds::testing {

using Point = std::vector<Rational>;  // affine coordinates, x0 = 1

class Oracle {
   public:
    Oracle(int n, std::vector<Point> pts) : n_(n), pts_(std::move(pts)) {
        // K[x0]-basis: affine monomials by degree, in lex order within a
        // degree, kept when their values are independent of earlier ones
        Subspace span(pts_.size());
        for (int d = 0; span.dim() < pts_.size(); ++d)
            for (const auto& m : exponent_vectors(d)) {
                const Vec v = values(m);
                if (span.insert(v)) {
                    basis_values_.push_back(v);
                    basis_degrees_.push_back(d);
                }
            }
        r_ = basis_degrees_.back();
        // trace-dual vectors: sum_k u_j(k) t_l(p_k) = [j == l]
        const size_t s = pts_.size();
        const auto t = ExactMatrix::from_columns(basis_values_, s);  // t(k, l) = t_l(p_k)
        const auto inv = t.inverse();
        if (!inv) throw std::logic_error("oracle basis is singular");
        for (size_t j = 0; j < s; ++j) duals_.push_back(inv->row(j));
    }

    int regularity() const { return r_; }

    /// Evaluation rows of the degree-i monomials.
    std::vector<Vec> evaluation_rows(int i) const {
        std::vector<Vec> rows;
        if (i < 0) return rows;
        for (int d = 0; d <= i; ++d)
            for (const auto& m : exponent_vectors(d)) rows.push_back(values(m));
        return rows;
    }

    /// Germ of a degree-i element lies in R_i: appending it to the
    /// evaluation matrix does not raise the rank. The echelon form of each
    /// matrix is cached.
    bool in_ring(const Vec& y, int i) const {
        if (is_zero_vec(y)) return true;
        if (i < 0) return false;
        auto it = echelon_.find(i);
        if (it == echelon_.end()) {
            Subspace e(pts_.size());
            for (const auto& v : evaluation_rows(i)) e.insert(v);
            it = echelon_.emplace(i, std::move(e)).first;
        }
        return it->second.contains(y);
    }

    /// f in delta_i: f * g_j in R for every generator g_j of degree -n_j.
    bool in_different(const Vec& f, int i) const {
        for (size_t j = 0; j < duals_.size(); ++j) {
            Vec prod(f.size());
            for (size_t k = 0; k < f.size(); ++k) prod[k] = f[k] * duals_[j][k];
            if (!in_ring(prod, i - basis_degrees_[j])) return false;
        }
        return true;
    }

    /// f in F_i: f * e_p in R_i for every point p.
    bool in_conductor(const Vec& f, int i) const {
        for (size_t p = 0; p < f.size(); ++p) {
            Vec prod(f.size());
            prod[p] = f[p];
            if (!in_ring(prod, i)) return false;
        }
        return true;
    }

    /// Basis of R_i as germs.
    std::vector<Vec> ring_basis(int i) const {
        Subspace s(pts_.size());
        std::vector<Vec> out;
        for (const auto& v : evaluation_rows(i))
            if (s.insert(v)) out.push_back(v);
        return out;
    }

    /// delta_i as an exact subspace, by solving the membership conditions.
    Subspace different_component(int i) const {
        const auto basis = ring_basis(i);
        // coefficient vectors c with sum c_b basis_b * u_j in R_{i - n_j}
        std::vector<Vec> constraints;
        for (size_t j = 0; j < duals_.size(); ++j) {
            Subspace target(pts_.size());
            for (const auto& v : evaluation_rows(i - basis_degrees_[j])) target.insert(v);
            for (const auto& a : target.annihilator()) {
                Vec c(pts_.size());
                for (size_t k = 0; k < c.size(); ++k) c[k] = a[k] * duals_[j][k];
                constraints.push_back(c);
            }
        }
        Subspace out(pts_.size());
        for (const auto& y : constrained_combinations(basis, constraints)) out.insert(y);
        return out;
    }

   private:
    std::vector<std::vector<int>> exponent_vectors(int d) const {
        std::vector<std::vector<int>> out;
        std::vector<int> e(static_cast<size_t>(n_), 0);
        std::function<void(size_t, int)> rec = [&](size_t k, int left) {
            if (k + 1 == e.size()) {
                e[k] = left;
                out.push_back(e);
                return;
            }
            for (int a = left; a >= 0; --a) {
                e[k] = a;
                rec(k + 1, left - a);
            }
        };
        rec(0, d);
        return out;
    }

    Vec values(const std::vector<int>& m) const {
        Vec v;
        for (const auto& p : pts_) {
            Rational x = 1;
            for (size_t k = 0; k < m.size(); ++k)
                for (int a = 0; a < m[k]; ++a) x *= p[k];
            v.push_back(x);
        }
        return v;
    }

    int n_;
    std::vector<Point> pts_;
    std::vector<Vec> basis_values_;
    std::vector<int> basis_degrees_;
    std::vector<Vec> duals_;
    int r_ = 0;
    mutable std::map<int, Subspace> echelon_;
};

/// Every {-1, 0, 1} combination of the basis (capped by a random subset when
/// the dimension is large).
inline std::vector<Vec> enumerate(const std::vector<Vec>& basis, size_t ambient, std::mt19937_64& rng) {
    std::vector<Vec> out;
    const size_t h = basis.size();
    if (h <= 6) {
        std::vector<int> c(h, -1);
        for (;;) {
            Vec v = zero_vec(ambient);
            for (size_t b = 0; b < h; ++b) axpy(v, Rational(c[b]), basis[b]);
            out.push_back(v);
            size_t b = 0;
            while (b < h && c[b] == 1) c[b++] = -1;
            if (b == h) break;
            ++c[b];
        }
    } else {
        for (int t = 0; t < 400; ++t) {
            Vec v = zero_vec(ambient);
            for (size_t b = 0; b < h; ++b) axpy(v, Rational(static_cast<long>(rng() % 3) - 1), basis[b]);
            out.push_back(v);
        }
    }
    return out;
}

struct Tally {
    int schemes = 0;
    int elements = 0;
    int members = 0;
    int intermediate = 0;  // components strictly between 0 and R_i
};

/// Compares delta and F of the library with the oracle; returns the first
/// mismatch, or an empty string.
inline std::string cross_check(int n, const std::vector<Point>& pts, std::mt19937_64& rng, Tally& tally) {
    std::vector<PointSpec> specs;
    for (const auto& p : pts) specs.push_back(PointSpec::from_affine(p));
    const auto x = build_scheme(n, specs);
    const auto delta = dedekind_different(x, complementary_module(x));
    const auto f = conductor(x);
    const Oracle o(n, pts);
    const int r = x.regularity_index();
    if (o.regularity() != r) return "regularity index " + std::to_string(o.regularity()) + " vs " + std::to_string(r);
    ++tally.schemes;

    for (int i = 0; i <= 2 * r + 1; ++i) {
        const Subspace od = o.different_component(i);
        if (!(od == delta.at(i))) return "delta_" + std::to_string(i) + " differs from the oracle subspace";
        if (od.dim() > 0 && od.dim() < x.component(i).dim()) ++tally.intermediate;
        std::vector<Vec> probes = enumerate(o.ring_basis(i), pts.size(), rng);
        for (const auto& v : enumerate(od.basis(), pts.size(), rng)) probes.push_back(v);
        for (const auto& y : probes) {
            const bool member = o.in_different(y, i);
            if (member != delta.at(i).contains(y)) return "membership in delta_" + std::to_string(i) + " differs";
            ++tally.elements;
            tally.members += member;
        }
    }
    for (int i = 0; i <= r + 1; ++i)
        for (const auto& y : enumerate(o.ring_basis(i), pts.size(), rng)) {
            if (o.in_conductor(y, i) != f.at(i).contains(y)) return "membership in F_" + std::to_string(i) + " differs";
            ++tally.elements;
        }
    return {};
}

inline std::vector<Point> random_affine(std::mt19937_64& rng, int n, int s, int c) {
    std::vector<Point> out;
    for (const auto& p : testing::random_points(rng, n, s, c)) {
        Point q;
        for (size_t k = 1; k < p.coords.size(); ++k) q.push_back(parse_rational(p.coords[k]));
        out.push_back(q);
    }
    return out;
}

}  // namespace zds::testing

#endif  // ZDSCHEME_TESTS_ORACLE_HPP
