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

#ifndef ZDSCHEME_SCHEME_HPP
#define ZDSCHEME_SCHEME_HPP

#include <string>
#include <vector>

#include "zdscheme/groebner.hpp"
#include "zdscheme/linalg.hpp"
#include "zdscheme/polynomial.hpp"

namespace zds {

/// A point as written in an input file: either homogeneous coordinates
/// (n+1 rationals, the first nonzero) or generators of its maximal ideal
/// in x1..xn (an x0 / X0 may appear and is set to 1).
struct PointSpec {
    std::vector<std::string> coords;
    std::vector<std::string> maximal_ideal;

    bool has_coords() const { return !coords.empty(); }
    bool operator==(const PointSpec&) const = default;

    static PointSpec from_affine(const std::vector<Rational>& a);
    static PointSpec from_ideal(std::vector<std::string> gens) { return PointSpec{{}, std::move(gens)}; }
};

/// Residue field of a point of P^n. Throws ParseError or PreconditionError.
ResidueField point_residue_field(int n, const PointSpec& entry);

class HilbertFunction {
   public:
    HilbertFunction() = default;
    /// values[i] for 0 <= i <= regularity index; the last value repeats.
    explicit HilbertFunction(std::vector<int> values);

    int operator()(int i) const;
    int regularity_index() const { return static_cast<int>(values_.size()) - 1; }
    int eventual() const { return values_.back(); }
    /// HF on 0..regularity index.
    const std::vector<int>& values() const { return values_; }

   private:
    std::vector<int> values_{0};
};

/// Degree-indexed family of subspaces of the germ space, stored on
/// [lo, hi]. Below lo every component is zero; above hi every component
/// is the full space (ideal-like families) or equal to the one at hi.
class GradedSubspaceFamily {
   public:
    enum class Above { Full, Stable };

    GradedSubspaceFamily() = default;
    GradedSubspaceFamily(size_t ambient, int lo, std::vector<Subspace> components, Above above);

    size_t ambient() const { return ambient_; }
    int lo() const { return lo_; }
    int hi() const { return lo_ + static_cast<int>(comps_.size()) - 1; }
    const Subspace& at(int i) const;
    int hf(int i) const { return static_cast<int>(at(i).dim()); }
    std::vector<int> hf_values(int from, int to) const;
    /// Smallest i with every component from i on full; requires Above::Full.
    int regularity_index() const;

   private:
    size_t ambient_ = 0;
    int lo_ = 0;
    std::vector<Subspace> comps_;
    Above above_ = Above::Full;
    Subspace zero_;
    Subspace full_;
};

/// Reduced zero-dimensional subscheme of P^n over the rationals. Degree-i
/// elements of the coordinate ring are identified with their germ vectors
/// in the product of the residue fields, of dimension deg(X).
class ZeroDimScheme {
   public:
    int n() const { return n_; }
    size_t num_points() const { return fields_.size(); }
    size_t degree() const { return dim_; }
    const std::vector<PointSpec>& specs() const { return specs_; }
    const std::vector<ResidueField>& fields() const { return fields_; }
    const ResidueField& field(size_t j) const { return fields_[j]; }
    size_t kappa(size_t j) const { return fields_[j].dim(); }
    bool all_rational() const;

    /// Homogeneous reduced GB of I_X (X0 least significant in degrevlex).
    const GroebnerBasis& groebner_basis() const { return gb_; }
    const GroebnerBasis& affine_groebner_basis() const { return affine_gb_; }
    const HilbertFunction& hilbert_function() const { return hf_; }
    int hf(int i) const { return hf_(i); }
    int regularity_index() const { return hf_.regularity_index(); }

    /// Affine standard monomials t_1 < ... < t_d and their degrees n_j.
    const std::vector<Monomial>& kx0_terms() const { return terms_; }
    const std::vector<int>& kx0_degrees() const { return term_degrees_; }
    /// Germ vector of t_j.
    const Vec& basis_germ(size_t j) const { return germs_[j]; }
    /// Row k of the inverse of the matrix with columns basis_germ(j).
    const Vec& coordinate_functional(size_t k) const { return coord_rows_[k]; }

    /// V_i = germs of R_i (zero for i < 0, everything for i >= r_X).
    const Subspace& component(int i) const;
    /// Basis of the annihilator of V_i.
    std::vector<Vec> component_annihilator(int i) const;
    /// Family V_i on [0, r_X].
    GradedSubspaceFamily ring_family() const;

    /// Germ of an affine polynomial in x1..xn, or of a homogeneous one in
    /// X0..Xn (dehomogenized first).
    Vec germ_affine(const Polynomial& f) const;
    Vec germ_homogeneous(const Polynomial& F) const;
    /// Homogeneous degree-i element of R with germ y (y must lie in V_i),
    /// written on the standard monomials X0^(i-n_k) t_k.
    Polynomial lift(const Vec& y, int i) const;

    /// Matrix of the evaluation map on the standard-monomial basis of R_i.
    ExactMatrix evaluation_map(int i) const;
    /// Germs of all degree-i monomials of P as columns.
    ExactMatrix monomial_evaluation_map(int i) const;

    // Germ-space algebra (product of residue fields).
    size_t block_offset(size_t j) const { return offsets_[j]; }
    Vec multiply(const Vec& a, const Vec& b) const;
    /// Matrix of y -> a * y.
    ExactMatrix multiplication_matrix(const Vec& a) const;
    /// Span of all products of the two subspaces.
    Subspace product(const Subspace& a, const Subspace& b) const;
    Rational trace(const Vec& a) const;
    Vec one() const;
    /// Unit vector of basis element b of block j.
    Vec unit(size_t j, size_t b) const { return unit_vec(dim_, offsets_[j] + b); }
    Vec restrict_to_block(const Vec& a, size_t j) const;
    /// Vector equal to a on block j and zero elsewhere.
    Vec keep_block(const Vec& a, size_t j) const;

    friend ZeroDimScheme build_scheme(int n, std::vector<PointSpec> points);

   private:
    int n_ = 0;
    size_t dim_ = 0;
    std::vector<PointSpec> specs_;
    std::vector<ResidueField> fields_;
    std::vector<size_t> offsets_;
    GroebnerBasis gb_{{}, TermOrder::degrevlex(1), true};
    GroebnerBasis affine_gb_{{}, TermOrder::degrevlex(1), true};
    HilbertFunction hf_;
    std::vector<Monomial> terms_;
    std::vector<int> term_degrees_;
    std::vector<Vec> germs_;
    std::vector<Vec> coord_rows_;
    std::vector<Subspace> components_;
    Subspace zero_;
    Subspace full_;
};

/// Builds the scheme on the given points of P^n and verifies the basic
/// invariants (strictly increasing HF, invertible germ matrix).
ZeroDimScheme build_scheme(int n, std::vector<PointSpec> points);

/// The scheme on all points except j (the maximal p_j-subscheme).
ZeroDimScheme remove_point(const ZeroDimScheme& scheme, size_t j);
/// The scheme on the points whose indices are not listed.
ZeroDimScheme remove_points(const ZeroDimScheme& scheme, const std::vector<size_t>& drop);

}  // namespace zds

#endif  // ZDSCHEME_SCHEME_HPP
