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

#include "zdscheme/scheme.hpp"

#include <algorithm>
#include <stdexcept>

#include "zdscheme/errors.hpp"

namespace zds {

PointSpec PointSpec::from_affine(const std::vector<Rational>& a) {
    PointSpec p;
    p.coords.push_back("1");
    for (const auto& x : a) p.coords.push_back(to_string(x));
    return p;
}

ResidueField point_residue_field(int n, const PointSpec& entry) {
    if (entry.has_coords() == !entry.maximal_ideal.empty())
        throw ParseError("a point needs exactly one of \"coords\" or \"maximal_ideal\"");
    if (entry.has_coords()) {
        if (static_cast<int>(entry.coords.size()) != n + 1)
            throw ParseError("point has " + std::to_string(entry.coords.size()) + " coordinates, expected " +
                             std::to_string(n + 1));
        std::vector<Rational> c;
        for (const auto& s : entry.coords) c.push_back(parse_rational(s));
        if (is_zero(c[0]))
            throw PreconditionError("point (" + entry.coords[0] + ":...) lies on the hyperplane x0 = 0");
        std::vector<Rational> a;
        for (int i = 1; i <= n; ++i) a.push_back(c[static_cast<size_t>(i)] / c[0]);
        return rational_residue_field(a);
    }
    std::vector<Polynomial> gens;
    for (const auto& s : entry.maximal_ideal)
        gens.push_back(dehomogenize(parse_polynomial(s, n + 1, VariableNames{"x", 0}), 0));
    return residue_field(gens);
}

// --------------------------------------------------------- HilbertFunction

HilbertFunction::HilbertFunction(std::vector<int> values) : values_(std::move(values)) {
    if (values_.empty()) throw std::invalid_argument("empty Hilbert function");
}

int HilbertFunction::operator()(int i) const {
    if (i < 0) return 0;
    if (i >= static_cast<int>(values_.size())) return values_.back();
    return values_[static_cast<size_t>(i)];
}

// ---------------------------------------------------- GradedSubspaceFamily

GradedSubspaceFamily::GradedSubspaceFamily(size_t ambient, int lo, std::vector<Subspace> components, Above above)
    : ambient_(ambient),
      lo_(lo),
      comps_(std::move(components)),
      above_(above),
      zero_(ambient),
      full_(Subspace::full(ambient)) {
    for (const auto& c : comps_)
        if (c.ambient() != ambient) throw std::invalid_argument("component in the wrong ambient space");
}

const Subspace& GradedSubspaceFamily::at(int i) const {
    if (i < lo_) return zero_;
    if (i > hi()) return (above_ == Above::Full || comps_.empty()) ? full_ : comps_.back();
    return comps_[static_cast<size_t>(i - lo_)];
}

std::vector<int> GradedSubspaceFamily::hf_values(int from, int to) const {
    std::vector<int> out;
    for (int i = from; i <= to; ++i) out.push_back(hf(i));
    return out;
}

int GradedSubspaceFamily::regularity_index() const {
    if (above_ != Above::Full) throw std::logic_error("regularity index of a family that does not fill up");
    int i = hi() + 1;
    while (i > lo_ && at(i - 1).is_full()) --i;
    return i;
}

// ----------------------------------------------------------- ZeroDimScheme

bool ZeroDimScheme::all_rational() const {
    return std::all_of(fields_.begin(), fields_.end(), [](const ResidueField& f) { return f.is_rational(); });
}

const Subspace& ZeroDimScheme::component(int i) const {
    if (i < 0) return zero_;
    if (i >= static_cast<int>(components_.size())) return full_;
    return components_[static_cast<size_t>(i)];
}

std::vector<Vec> ZeroDimScheme::component_annihilator(int i) const {
    std::vector<Vec> out;
    for (size_t k = 0; k < dim_; ++k)
        if (term_degrees_[k] > i) out.push_back(coord_rows_[k]);
    return out;
}

GradedSubspaceFamily ZeroDimScheme::ring_family() const {
    return GradedSubspaceFamily(dim_, 0, components_, GradedSubspaceFamily::Above::Full);
}

Vec ZeroDimScheme::germ_affine(const Polynomial& f) const {
    if (f.nvars() != n_) throw std::invalid_argument("germ: polynomial is not in x1..xn");
    return germ(f, fields_);
}

Vec ZeroDimScheme::germ_homogeneous(const Polynomial& F) const {
    if (F.nvars() != n_ + 1) throw std::invalid_argument("germ: polynomial is not in X0..Xn");
    return germ(dehomogenize(F, 0), fields_);
}

Polynomial ZeroDimScheme::lift(const Vec& y, int i) const {
    Polynomial p(n_ + 1);
    for (size_t k = 0; k < dim_; ++k) {
        const Rational c = dot(coord_rows_[k], y);
        if (is_zero(c)) continue;
        if (term_degrees_[k] > i) throw std::invalid_argument("lift: vector is not the germ of a degree-" +
                                                              std::to_string(i) + " element");
        std::vector<int> e = terms_[k].exponents();
        e.insert(e.begin(), i - term_degrees_[k]);
        p.add_term(Monomial(std::move(e)), c);
    }
    return p;
}

ExactMatrix ZeroDimScheme::evaluation_map(int i) const {
    std::vector<Vec> cols;
    for (size_t k = 0; k < dim_; ++k)
        if (term_degrees_[k] <= i) cols.push_back(germs_[k]);
    return ExactMatrix::from_columns(cols, dim_);
}

ExactMatrix ZeroDimScheme::monomial_evaluation_map(int i) const {
    std::vector<Vec> cols;
    for (const auto& m : monomials_of_degree(n_ + 1, i, gb_.order()))
        cols.push_back(germ_homogeneous(Polynomial::term(m, 1)));
    return ExactMatrix::from_columns(cols, dim_);
}

Vec ZeroDimScheme::multiply(const Vec& a, const Vec& b) const {
    Vec r;
    r.reserve(dim_);
    for (size_t j = 0; j < fields_.size(); ++j) {
        const Vec p = fields_[j].multiply(restrict_to_block(a, j), restrict_to_block(b, j));
        r.insert(r.end(), p.begin(), p.end());
    }
    return r;
}

ExactMatrix ZeroDimScheme::multiplication_matrix(const Vec& a) const {
    ExactMatrix m(dim_, dim_);
    for (size_t j = 0; j < fields_.size(); ++j) {
        const ExactMatrix b = fields_[j].multiplication_matrix(restrict_to_block(a, j));
        for (size_t r = 0; r < b.rows(); ++r)
            for (size_t c = 0; c < b.cols(); ++c) m(offsets_[j] + r, offsets_[j] + c) = b(r, c);
    }
    return m;
}

Subspace ZeroDimScheme::product(const Subspace& a, const Subspace& b) const {
    Subspace s(dim_);
    for (const auto& u : a.basis())
        for (const auto& v : b.basis()) {
            if (s.is_full()) return s;
            s.insert(multiply(u, v));
        }
    return s;
}

Rational ZeroDimScheme::trace(const Vec& a) const {
    Rational t = 0;
    for (size_t j = 0; j < fields_.size(); ++j) t += fields_[j].trace(restrict_to_block(a, j));
    return t;
}

Vec ZeroDimScheme::one() const {
    Vec v;
    for (const auto& f : fields_) {
        const Vec o = f.one();
        v.insert(v.end(), o.begin(), o.end());
    }
    return v;
}

Vec ZeroDimScheme::restrict_to_block(const Vec& a, size_t j) const {
    const auto b = a.begin() + static_cast<long>(offsets_[j]);
    return Vec(b, b + static_cast<long>(fields_[j].dim()));
}

Vec ZeroDimScheme::keep_block(const Vec& a, size_t j) const {
    Vec v(dim_);
    for (size_t k = 0; k < fields_[j].dim(); ++k) v[offsets_[j] + k] = a[offsets_[j] + k];
    return v;
}

ZeroDimScheme build_scheme(int n, std::vector<PointSpec> points) {
    if (n < 1) throw PreconditionError("ambient dimension n must be at least 1");
    if (points.empty()) throw PreconditionError("a scheme needs at least one point");
    ZeroDimScheme x;
    x.n_ = n;
    x.specs_ = std::move(points);
    for (const auto& s : x.specs_) {
        x.offsets_.push_back(x.dim_);
        x.fields_.push_back(point_residue_field(n, s));
        x.dim_ += x.fields_.back().dim();
    }
    x.affine_gb_ = affine_vanishing_ideal(x.fields_, &x.terms_);
    std::vector<Polynomial> hom;
    for (const auto& g : x.affine_gb_.generators()) hom.push_back(homogenize(g, 0));
    x.gb_ = GroebnerBasis(std::move(hom), TermOrder::homogeneous_degrevlex(n + 1), true);

    std::vector<int> values;
    for (const auto& t : x.terms_) x.term_degrees_.push_back(t.degree());
    const int top = x.term_degrees_.back();
    for (int i = 0; i <= top; ++i)
        values.push_back(static_cast<int>(std::count_if(x.term_degrees_.begin(), x.term_degrees_.end(),
                                                        [i](int d) { return d <= i; })));
    x.hf_ = HilbertFunction(values);
    for (size_t i = 1; i < values.size(); ++i)
        if (values[i] <= values[i - 1]) throw InvariantError("Hilbert function is not strictly increasing");
    if (values.back() != static_cast<int>(x.dim_)) throw InvariantError("Hilbert polynomial differs from deg(X)");

    for (const auto& t : x.terms_) x.germs_.push_back(x.germ_affine(Polynomial::term(t, 1)));
    const auto inv = ExactMatrix::from_columns(x.germs_, x.dim_).inverse();
    if (!inv) throw InvariantError("germ vectors of the standard monomials are dependent");
    for (size_t k = 0; k < x.dim_; ++k) x.coord_rows_.push_back(inv->row(k));

    for (int i = 0; i <= top; ++i) {
        std::vector<Vec> gens;
        for (size_t k = 0; k < x.dim_; ++k)
            if (x.term_degrees_[k] <= i) gens.push_back(x.germs_[k]);
        x.components_.push_back(Subspace::span(x.dim_, gens));
    }
    x.zero_ = Subspace(x.dim_);
    x.full_ = Subspace::full(x.dim_);
    return x;
}

ZeroDimScheme remove_points(const ZeroDimScheme& scheme, const std::vector<size_t>& drop) {
    std::vector<PointSpec> keep;
    for (size_t j = 0; j < scheme.num_points(); ++j) {
        if (std::find(drop.begin(), drop.end(), j) == drop.end()) keep.push_back(scheme.specs()[j]);
    }
    for (size_t j : drop)
        if (j >= scheme.num_points()) throw PreconditionError("point index " + std::to_string(j) + " out of range");
    if (keep.empty()) throw PreconditionError("cannot remove every point of a scheme");
    return build_scheme(scheme.n(), std::move(keep));
}

ZeroDimScheme remove_point(const ZeroDimScheme& scheme, size_t j) {
    if (scheme.num_points() < 2) throw PreconditionError("cannot remove the only point of a scheme");
    return remove_points(scheme, {j});
}

}  // namespace zds
