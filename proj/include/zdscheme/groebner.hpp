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

#ifndef ZDSCHEME_GROEBNER_HPP
#define ZDSCHEME_GROEBNER_HPP

#include <optional>
#include <vector>

#include "zdscheme/linalg.hpp"
#include "zdscheme/polynomial.hpp"

namespace zds {

class GroebnerBasis {
   public:
    GroebnerBasis(std::vector<Polynomial> generators, TermOrder order, bool reduced);

    int nvars() const { return nvars_; }
    const std::vector<Polynomial>& generators() const { return gens_; }
    const std::vector<Monomial>& leading_monomials() const { return lms_; }
    const TermOrder& order() const { return order_; }
    bool is_reduced() const { return reduced_; }

    /// True when no leading monomial divides m.
    bool is_standard(const Monomial& m) const;
    /// True when every S-polynomial reduces to zero.
    bool verify() const;

   private:
    int nvars_;
    std::vector<Polynomial> gens_;
    std::vector<Monomial> lms_;
    TermOrder order_;
    bool reduced_;
};

/// Reduced Groebner basis of the ideal generated by gens. Pairs are
/// processed by normal selection (smallest lcm first); coprime leading
/// terms are skipped.
GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const TermOrder& order);

/// Fully reduced remainder of f modulo gb.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);

/// Standard monomials of a zero-dimensional ideal, ascending. Throws
/// PreconditionError if the quotient is not finite-dimensional.
std::vector<Monomial> standard_monomials(const GroebnerBasis& gb);

/// Finite field extension K[x1..xn]/m of the rationals given by a maximal
/// ideal, with the standard monomials as K-basis.
class ResidueField {
   public:
    ResidueField(GroebnerBasis gb, std::vector<Monomial> basis);

    size_t dim() const { return basis_.size(); }
    bool is_rational() const { return basis_.size() == 1; }
    int nvars() const { return gb_.nvars(); }
    const GroebnerBasis& groebner_basis() const { return gb_; }
    const std::vector<Monomial>& basis() const { return basis_; }
    /// Trace of multiplication by each basis element.
    const Vec& trace_vector() const { return trace_; }

    /// Coordinates of the residue class of f.
    Vec coords(const Polynomial& f) const;
    Vec multiply(const Vec& a, const Vec& b) const;
    /// Matrix of multiplication by a (columns are images of basis elements).
    ExactMatrix multiplication_matrix(const Vec& a) const;
    Rational trace(const Vec& a) const { return dot(trace_, a); }
    /// Gram matrix Tr(b_i b_j).
    ExactMatrix trace_form() const;
    /// Coordinates of the variable x_{index+1}.
    const Vec& variable_coords(int index) const { return var_coords_[static_cast<size_t>(index)]; }
    Vec one() const { return unit_vec(dim(), 0); }

    /// Representative polynomial of a coordinate vector.
    Polynomial lift(const Vec& a) const;

   private:
    GroebnerBasis gb_;
    std::vector<Monomial> basis_;
    std::vector<std::vector<Vec>> table_;  // table_[a][b] = coords(b_a * b_b)
    std::vector<Vec> var_coords_;
    Vec trace_;
};

/// Residue field of the maximal ideal generated by the given polynomials
/// in x1..xn. Throws PreconditionError when the ideal is not
/// zero-dimensional or the quotient is not (certifiably) a field.
ResidueField residue_field(const std::vector<Polynomial>& maximal_ideal);
/// Residue field of the rational point with affine coordinates a.
ResidueField rational_residue_field(const std::vector<Rational>& a);

/// Reduced Groebner basis (affine degrevlex) of the vanishing ideal of
/// the given points, computed by Buchberger-Moeller on germ vectors.
/// The standard monomials are returned through the second argument.
GroebnerBasis affine_vanishing_ideal(const std::vector<ResidueField>& points,
                                     std::vector<Monomial>* standard = nullptr);
/// Homogenized version of the above (homogenizing variable X0 at index 0,
/// order homogeneous_degrevlex). Throws PreconditionError for duplicates.
GroebnerBasis vanishing_ideal(const std::vector<ResidueField>& points);

/// Concatenated germ vector of an affine polynomial at all points.
Vec germ(const Polynomial& f, const std::vector<ResidueField>& points);

namespace univariate {

/// Dense polynomial, coefficient of t^k at index k; no trailing zeros.
using UPoly = std::vector<Rational>;

UPoly trim(UPoly f);
int degree(const UPoly& f);
UPoly derivative(const UPoly& f);
UPoly remainder(UPoly f, const UPoly& g);
UPoly gcd(UPoly f, UPoly g);
/// Rational roots, or nullopt when the constant or leading coefficient
/// is too large to enumerate divisors.
std::optional<std::vector<Rational>> rational_roots(const UPoly& f);

enum class Irreducibility { Irreducible, Reducible, Unknown };
/// Irreducibility over the rationals of a squarefree polynomial.
Irreducibility irreducibility(const UPoly& f);

}  // namespace univariate

}  // namespace zds

#endif  // ZDSCHEME_GROEBNER_HPP
