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

#include "zdscheme/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace zds {

Vec zero_vec(size_t n) { return Vec(n); }

Vec unit_vec(size_t n, size_t k) {
    Vec v(n);
    v[k] = 1;
    return v;
}

bool is_zero_vec(const Vec& v) {
    for (const auto& x : v)
        if (!is_zero(x)) return false;
    return true;
}

Rational dot(const Vec& a, const Vec& b) {
    Rational s = 0;
    for (size_t i = 0; i < a.size(); ++i)
        if (!is_zero(a[i]) && !is_zero(b[i])) s += a[i] * b[i];
    return s;
}

void axpy(Vec& y, const Rational& c, const Vec& x) {
    if (is_zero(c)) return;
    for (size_t i = 0; i < y.size(); ++i)
        if (!is_zero(x[i])) y[i] += c * x[i];
}

Vec scaled(const Vec& v, const Rational& c) {
    Vec r(v);
    for (auto& x : r) x *= c;
    return r;
}

Vec normalized(const Vec& v) {
    for (const auto& x : v)
        if (!is_zero(x)) return scaled(v, Rational(1 / x));
    return v;
}

namespace {

using IntRow = std::vector<Integer>;

struct Echelon {
    std::vector<IntRow> m;
    std::vector<size_t> pivots;  // pivot column of row r, r < rank
    int sign = 1;
    Integer scale = 1;           // product of the row integerization factors
};

// Fraction-free row echelon form. Pivots are only searched in columns
// below pivot_limit; all columns are eliminated.
Echelon bareiss(const ExactMatrix& a, size_t pivot_limit) {
    Echelon e;
    const size_t nr = a.rows(), nc = a.cols();
    e.m.assign(nr, IntRow(nc));
    for (size_t i = 0; i < nr; ++i) {
        Integer l = 1;
        for (size_t j = 0; j < nc; ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(i, j).get_den().get_mpz_t());
        for (size_t j = 0; j < nc; ++j) e.m[i][j] = a(i, j).get_num() * (l / a(i, j).get_den());
        e.scale *= l;
    }
    Integer prev = 1;
    size_t r = 0;
    for (size_t c = 0; c < pivot_limit && r < nr; ++c) {
        size_t p = r;
        while (p < nr && e.m[p][c] == 0) ++p;
        if (p == nr) continue;
        if (p != r) {
            std::swap(e.m[p], e.m[r]);
            e.sign = -e.sign;
        }
        const Integer& piv = e.m[r][c];
        for (size_t i = r + 1; i < nr; ++i) {
            const Integer f = e.m[i][c];
            for (size_t j = c + 1; j < nc; ++j) {
                Integer t = piv * e.m[i][j] - f * e.m[r][j];
                mpz_divexact(e.m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            e.m[i][c] = 0;
        }
        prev = piv;
        e.pivots.push_back(c);
        ++r;
    }
    return e;
}

// Solution of the echelon system for the right-hand side stored in column
// rhs (free variables set to 0); nullopt if inconsistent.
std::optional<Vec> back_substitute(const Echelon& e, size_t nvars, size_t rhs) {
    const size_t rank = e.pivots.size();
    for (size_t r = rank; r < e.m.size(); ++r)
        if (e.m[r][rhs] != 0) return std::nullopt;
    Vec x(nvars);
    for (size_t r = rank; r-- > 0;) {
        const size_t p = e.pivots[r];
        Rational s = Rational(e.m[r][rhs]);
        for (size_t c = p + 1; c < nvars; ++c)
            if (e.m[r][c] != 0 && !is_zero(x[c])) s -= Rational(e.m[r][c]) * x[c];
        x[p] = s / Rational(e.m[r][p]);
    }
    return x;
}

}  // namespace

ExactMatrix ExactMatrix::identity(size_t n) {
    ExactMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

ExactMatrix ExactMatrix::from_rows(const std::vector<Vec>& rows, size_t cols) {
    ExactMatrix m(rows.size(), cols);
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw std::invalid_argument("row length mismatch");
        for (size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

ExactMatrix ExactMatrix::from_columns(const std::vector<Vec>& cols, size_t rows) {
    ExactMatrix m(rows, cols.size());
    for (size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows) throw std::invalid_argument("column length mismatch");
        for (size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
}

Vec ExactMatrix::row(size_t i) const { return Vec(a_.begin() + static_cast<long>(i * cols_), a_.begin() + static_cast<long>((i + 1) * cols_)); }

Vec ExactMatrix::column(size_t j) const {
    Vec v(rows_);
    for (size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix t(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix dimension mismatch in product");
    ExactMatrix p(rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            const Rational& a = (*this)(i, k);
            if (is_zero(a)) continue;
            for (size_t j = 0; j < o.cols_; ++j)
                if (!is_zero(o(k, j))) p(i, j) += a * o(k, j);
        }
    return p;
}

Vec ExactMatrix::operator*(const Vec& v) const {
    if (v.size() != cols_) throw std::invalid_argument("matrix-vector dimension mismatch");
    Vec r(rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j)
            if (!is_zero(v[j]) && !is_zero((*this)(i, j))) r[i] += (*this)(i, j) * v[j];
    return r;
}

size_t ExactMatrix::rank() const { return bareiss(*this, cols_).pivots.size(); }

std::vector<Vec> ExactMatrix::kernel_basis() const {
    const Echelon e = bareiss(*this, cols_);
    std::vector<bool> is_pivot(cols_, false);
    for (size_t p : e.pivots) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (size_t f = 0; f < cols_; ++f) {
        if (is_pivot[f]) continue;
        Vec x(cols_);
        x[f] = 1;
        for (size_t r = e.pivots.size(); r-- > 0;) {
            const size_t p = e.pivots[r];
            Rational s = 0;
            for (size_t c = p + 1; c < cols_; ++c)
                if (e.m[r][c] != 0 && !is_zero(x[c])) s -= Rational(e.m[r][c]) * x[c];
            x[p] = s / Rational(e.m[r][p]);
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

Rational ExactMatrix::determinant() const {
    if (rows_ != cols_) throw std::invalid_argument("determinant of a non-square matrix");
    if (rows_ == 0) return 1;
    const Echelon e = bareiss(*this, cols_);
    if (e.pivots.size() < rows_) return 0;
    return Rational(e.sign * e.m[rows_ - 1][cols_ - 1]) / Rational(e.scale);
}

std::optional<Vec> ExactMatrix::solve(const Vec& b) const {
    if (b.size() != rows_) throw std::invalid_argument("right-hand side has wrong length");
    ExactMatrix aug(rows_, cols_ + 1);
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
        aug(i, cols_) = b[i];
    }
    return back_substitute(bareiss(aug, cols_), cols_, cols_);
}

std::optional<ExactMatrix> ExactMatrix::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("inverse of a non-square matrix");
    const size_t n = rows_;
    ExactMatrix aug(n, 2 * n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) aug(i, j) = (*this)(i, j);
        aug(i, n + i) = 1;
    }
    const Echelon e = bareiss(aug, n);
    if (e.pivots.size() < n) return std::nullopt;
    ExactMatrix inv(n, n);
    for (size_t k = 0; k < n; ++k) {
        const Vec x = *back_substitute(e, n, n + k);
        for (size_t i = 0; i < n; ++i) inv(i, k) = x[i];
    }
    return inv;
}

// ---------------------------------------------------------------- Subspace

Subspace Subspace::span(size_t ambient, const std::vector<Vec>& vectors) {
    Subspace s(ambient);
    for (const auto& v : vectors) {
        if (s.is_full()) break;
        s.insert(v);
    }
    return s;
}

Subspace Subspace::full(size_t ambient) {
    Subspace s(ambient);
    for (size_t k = 0; k < ambient; ++k) {
        s.rows_.push_back(unit_vec(ambient, k));
        s.pivots_.push_back(k);
    }
    return s;
}

Vec Subspace::reduce(const Vec& v) const {
    if (v.size() != ambient_) throw std::invalid_argument("vector does not live in the ambient space");
    Vec w(v);
    for (size_t r = 0; r < rows_.size(); ++r) {
        const Rational c = w[pivots_[r]];
        if (!zds::is_zero(c)) axpy(w, Rational(-c), rows_[r]);
    }
    return w;
}

bool Subspace::contains(const Vec& v) const {
    if (is_full()) return true;
    return is_zero_vec(reduce(v));
}

bool Subspace::insert(const Vec& v) {
    Vec w = reduce(v);
    size_t p = 0;
    while (p < ambient_ && zds::is_zero(w[p])) ++p;
    if (p == ambient_) return false;
    w = scaled(w, Rational(1 / w[p]));
    for (auto& row : rows_) {
        const Rational c = row[p];
        if (!zds::is_zero(c)) axpy(row, Rational(-c), w);
    }
    size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
    rows_.insert(rows_.begin() + static_cast<long>(pos), std::move(w));
    pivots_.insert(pivots_.begin() + static_cast<long>(pos), p);
    return true;
}

bool Subspace::is_subspace_of(const Subspace& other) const {
    if (dim() > other.dim()) return false;
    for (const auto& row : rows_)
        if (!other.contains(row)) return false;
    return true;
}

Subspace Subspace::sum(const Subspace& other) const {
    Subspace s(*this);
    for (const auto& row : other.rows_) s.insert(row);
    return s;
}

std::vector<Vec> Subspace::annihilator() const {
    std::vector<bool> is_pivot(ambient_, false);
    for (size_t p : pivots_) is_pivot[p] = true;
    std::vector<Vec> out;
    for (size_t f = 0; f < ambient_; ++f) {
        if (is_pivot[f]) continue;
        Vec w(ambient_);
        w[f] = 1;
        for (size_t r = 0; r < rows_.size(); ++r) w[pivots_[r]] = -rows_[r][f];
        out.push_back(std::move(w));
    }
    return out;
}

Subspace Subspace::intersection(const Subspace& other) const {
    return span(ambient_, constrained_combinations(rows_, other.annihilator()));
}

std::vector<Vec> constrained_combinations(const std::vector<Vec>& basis, const std::vector<Vec>& constraints) {
    if (basis.empty()) return {};
    const size_t n = basis.front().size();
    if (constraints.empty()) return basis;
    ExactMatrix m(constraints.size(), basis.size());
    for (size_t i = 0; i < constraints.size(); ++i)
        for (size_t k = 0; k < basis.size(); ++k) m(i, k) = dot(constraints[i], basis[k]);
    std::vector<Vec> out;
    for (const auto& c : m.kernel_basis()) {
        Vec v(n);
        for (size_t k = 0; k < basis.size(); ++k) axpy(v, c[k], basis[k]);
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace zds
