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

#ifndef ZDSCHEME_LINALG_HPP
#define ZDSCHEME_LINALG_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "zdscheme/rational.hpp"

namespace zds {

using Vec = std::vector<Rational>;

Vec zero_vec(size_t n);
Vec unit_vec(size_t n, size_t k);
bool is_zero_vec(const Vec& v);
Rational dot(const Vec& a, const Vec& b);
/// y += c * x
void axpy(Vec& y, const Rational& c, const Vec& x);
Vec scaled(const Vec& v, const Rational& c);
/// Scales v so that its first nonzero entry is 1.
Vec normalized(const Vec& v);

/// Dense matrix of exact rationals. Rank, kernels, determinants and solves
/// go through fraction-free (Bareiss) elimination on row-integerized copies.
class ExactMatrix {
   public:
    ExactMatrix() = default;
    ExactMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static ExactMatrix identity(size_t n);
    static ExactMatrix from_rows(const std::vector<Vec>& rows, size_t cols);
    static ExactMatrix from_columns(const std::vector<Vec>& cols, size_t rows);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    Rational& operator()(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const Rational& operator()(size_t i, size_t j) const { return a_[i * cols_ + j]; }

    Vec row(size_t i) const;
    Vec column(size_t j) const;

    ExactMatrix transpose() const;
    ExactMatrix operator*(const ExactMatrix& other) const;
    Vec operator*(const Vec& v) const;
    bool operator==(const ExactMatrix& other) const = default;

    size_t rank() const;
    /// Basis of the right null space {v : M v = 0}; one vector per non-pivot
    /// column, with a 1 in that column and 0 in the other non-pivot columns.
    std::vector<Vec> kernel_basis() const;
    Rational determinant() const;
    /// Some x with M x = b, or nullopt when the system is inconsistent.
    std::optional<Vec> solve(const Vec& b) const;
    std::optional<ExactMatrix> inverse() const;

   private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<Rational> a_;
};

/// Linear subspace of K^N kept as a reduced row echelon basis.
class Subspace {
   public:
    Subspace() = default;
    explicit Subspace(size_t ambient) : ambient_(ambient) {}

    static Subspace span(size_t ambient, const std::vector<Vec>& vectors);
    static Subspace full(size_t ambient);

    size_t ambient() const { return ambient_; }
    size_t dim() const { return rows_.size(); }
    bool is_zero() const { return rows_.empty(); }
    bool is_full() const { return rows_.size() == ambient_; }
    const std::vector<Vec>& basis() const { return rows_; }
    const std::vector<size_t>& pivots() const { return pivots_; }

    /// Remainder of v after elimination against the echelon basis; zero iff
    /// v lies in the subspace.
    Vec reduce(const Vec& v) const;
    bool contains(const Vec& v) const;
    /// Adds v; returns true when the dimension grew.
    bool insert(const Vec& v);

    bool is_subspace_of(const Subspace& other) const;
    Subspace intersection(const Subspace& other) const;
    Subspace sum(const Subspace& other) const;
    /// Basis of {w : w . v = 0 for every v in the subspace}.
    std::vector<Vec> annihilator() const;

    bool operator==(const Subspace& other) const { return ambient_ == other.ambient_ && rows_ == other.rows_; }

   private:
    size_t ambient_ = 0;
    std::vector<Vec> rows_;
    std::vector<size_t> pivots_;
};

/// Coefficients c with sum_k c_k basis[k] ranging over all solutions of
/// constraints * (sum_k c_k basis[k]) = 0, mapped back into K^N.
std::vector<Vec> constrained_combinations(const std::vector<Vec>& basis, const std::vector<Vec>& constraints);

}  // namespace zds

#endif  // ZDSCHEME_LINALG_HPP
