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

#include <gtest/gtest.h>

#include "zdscheme/errors.hpp"
#include "zdscheme/groebner.hpp"

namespace zds {
namespace {

const VariableNames kAffine{"x", 1};
const VariableNames kHomog{"X", 0};

Polynomial P(const char* s, int nvars = 2) { return parse_polynomial(s, nvars, kAffine); }
Polynomial H(const char* s, int nvars = 3) { return parse_polynomial(s, nvars, kHomog); }

std::vector<Rational> Q(std::initializer_list<long> xs) {
    std::vector<Rational> v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

std::vector<ResidueField> rational_points(const std::vector<std::vector<Rational>>& pts) {
    std::vector<ResidueField> out;
    for (const auto& p : pts) out.push_back(rational_residue_field(p));
    return out;
}

// Hilbert function of P/I for a homogeneous GB, by rank of the normal-form
// matrix of all degree-i monomials.
int hf_by_normal_forms(const GroebnerBasis& gb, int i) {
    const auto ms = monomials_of_degree(gb.nvars(), i, gb.order());
    std::vector<Vec> rows;
    for (const auto& m : ms) {
        const Polynomial r = normal_form(Polynomial::term(m, 1), gb);
        Vec v(ms.size());
        for (const auto& [t, c] : r.terms()) v[static_cast<size_t>(std::find(ms.begin(), ms.end(), t) - ms.begin())] = c;
        rows.push_back(v);
    }
    return static_cast<int>(ExactMatrix::from_rows(rows, ms.size()).rank());
}

TEST(Buchberger, Principal) {
    const auto gb = buchberger({P("x1")}, TermOrder::degrevlex(2));
    ASSERT_EQ(gb.generators().size(), 1u);
    EXPECT_EQ(gb.generators()[0], P("x1"));
}

TEST(Buchberger, GcdInOneVariable) {
    const auto gb = buchberger({P("x1^2-1", 1), P("x1^3-1", 1)}, TermOrder::degrevlex(1));
    ASSERT_EQ(gb.generators().size(), 1u);
    EXPECT_EQ(gb.generators()[0], P("x1-1", 1));
}

TEST(Buchberger, CompleteIntersectionHilbertFunction) {
    const auto gb = buchberger(
        {H("X2"), H("X0^5*X1 - 11/6*X0^4*X1^2 + 2*X0^3*X1^3 - 2*X0^2*X1^4 + X0*X1^5 - 1/6*X1^6")},
        TermOrder::homogeneous_degrevlex(3));
    EXPECT_TRUE(gb.verify());
    const std::vector<int> expect{1, 2, 3, 4, 5, 6, 6, 6};
    for (int i = 0; i < 8; ++i) EXPECT_EQ(hf_by_normal_forms(gb, i), expect[static_cast<size_t>(i)]) << i;
}

TEST(Buchberger, RandomIdealsReduceInputsAndAreReduced) {
    const TermOrder o = TermOrder::degrevlex(3);
    const std::vector<std::vector<Polynomial>> ideals{
        {P("x1^2 - x2*x3", 3), P("x2^2 - x1*x3 + 1", 3), P("x1*x2*x3 - 2", 3)},
        {P("x1*x2 - x3", 3), P("x2*x3 - x1", 3), P("x1*x3 - x2", 3)},
        {P("x1^3 - x2", 3), P("x2^2 - x3 + x1", 3)},
        {P("2x1 + 3x2 - x3", 3), P("x1 - x2 + 5", 3), P("x1^2 + x3^2 - 7", 3)},
    };
    for (const auto& gens : ideals) {
        const auto gb = buchberger(gens, o);
        EXPECT_TRUE(gb.verify());
        for (const auto& f : gens) EXPECT_TRUE(normal_form(f, gb).is_zero());
        for (size_t k = 0; k < gb.generators().size(); ++k) {
            const auto& g = gb.generators()[k];
            EXPECT_EQ(g.leading_coefficient(o), 1);
            for (const auto& [m, c] : g.terms())
                for (size_t l = 0; l < gb.generators().size(); ++l)
                    if (l != k) EXPECT_FALSE(gb.leading_monomials()[l].divides(m));
        }
        const Polynomial f = P("x1^4*x2 - 3x3^3 + x1*x2 + 1", 3);
        const Polynomial r = normal_form(f, gb);
        EXPECT_EQ(normal_form(r, gb), r);
        EXPECT_TRUE(normal_form(f - r, gb).is_zero());
    }
}

TEST(NormalForm, Basics) {
    const auto gb = buchberger({P("x1^2+3"), P("x2")}, TermOrder::degrevlex(2));
    EXPECT_EQ(normal_form(P("x1^2"), gb), P("-3"));
    EXPECT_EQ(normal_form(P("1"), gb), P("1"));
    EXPECT_TRUE(normal_form(P("(x1^2+3)*(x1 - 7x2^3)"), gb).is_zero());
}

TEST(ResidueField, RationalPoint) {
    const auto f = residue_field({P("x1"), P("x2")});
    EXPECT_EQ(f.dim(), 1u);
    EXPECT_TRUE(f.is_rational());
    EXPECT_EQ(f.trace_vector(), (Vec{Rational(1)}));
}

TEST(ResidueField, QuadraticFields) {
    const auto a = residue_field({P("x1^2+3"), P("x2")});
    ASSERT_EQ(a.dim(), 2u);
    EXPECT_EQ(a.basis()[1], Monomial(std::vector<int>{1, 0}));
    EXPECT_EQ(a.trace_vector(), (Vec{Rational(2), Rational(0)}));
    EXPECT_NE(a.trace_form().determinant(), 0);

    // written with the homogenizing variable already set to 1
    const auto b = residue_field({P("x1-2"), P("2+x2^2")});
    ASSERT_EQ(b.dim(), 2u);
    EXPECT_EQ(b.basis()[1], Monomial(std::vector<int>{0, 1}));
    EXPECT_EQ(b.trace_vector(), (Vec{Rational(2), Rational(0)}));
    // x2 * x2 = -2
    EXPECT_EQ(b.multiply(b.variable_coords(1), b.variable_coords(1)), (Vec{Rational(-2), Rational(0)}));
}

TEST(ResidueField, HigherDegreeFields) {
    EXPECT_EQ(residue_field({P("x1^3-2"), P("x2-x1^2")}).dim(), 3u);
    EXPECT_EQ(residue_field({P("x1^4-2"), P("x2")}).dim(), 4u);
    EXPECT_EQ(residue_field({P("x1^5-x1-1"), P("x2+1")}).dim(), 5u);
}

TEST(ResidueField, Rejections) {
    EXPECT_THROW(residue_field({P("x1")}), PreconditionError);                      // not zero-dimensional
    EXPECT_THROW(residue_field({P("x1^2-1"), P("x2")}), PreconditionError);         // splits
    EXPECT_THROW(residue_field({P("x1^2"), P("x2")}), PreconditionError);           // nilpotent
    EXPECT_THROW(residue_field({P("x1"), P("x1-1"), P("x2")}), PreconditionError);  // unit ideal
    EXPECT_THROW(residue_field({P("x1^2-1"), P("x2^2-1")}), PreconditionError);     // four points
    EXPECT_THROW(residue_field({P("x1^4+4"), P("x2")}), PreconditionError);         // (x^2+2x+2)(x^2-2x+2)
    EXPECT_THROW(residue_field({}), PreconditionError);
}

TEST(Univariate, RationalRootsAndIrreducibility) {
    using namespace univariate;
    const UPoly f{Rational(-6), Rational(11), Rational(-6), Rational(1)};  // (t-1)(t-2)(t-3)
    const auto r = rational_roots(f);
    ASSERT_TRUE(r.has_value());
    EXPECT_EQ(r->size(), 3u);
    EXPECT_EQ(irreducibility(f), Irreducibility::Reducible);
    EXPECT_EQ(irreducibility({Rational(3), Rational(0), Rational(1)}), Irreducibility::Irreducible);
    EXPECT_EQ(irreducibility({Rational(-2), Rational(0), Rational(0), Rational(1)}), Irreducibility::Irreducible);
    EXPECT_EQ(irreducibility({Rational(1, 3), Rational(0), Rational(0), Rational(0), Rational(1)}),
              Irreducibility::Irreducible);
    EXPECT_EQ(degree(gcd(f, derivative(f))), 0);
}

TEST(Univariate, PolynomialsSplittingModuloEveryPrime) {
    using namespace univariate;
    // minimal polynomial of sqrt2 + sqrt3: only degree-1 and 2 factors mod p
    EXPECT_EQ(irreducibility({Rational(1), Rational(0), Rational(-10), Rational(0), Rational(1)}),
              Irreducibility::Irreducible);
    // (t^2 - 2)(t^2 - 3)
    EXPECT_EQ(irreducibility({Rational(6), Rational(0), Rational(-5), Rational(0), Rational(1)}),
              Irreducibility::Reducible);
    // (t^2 - 2)(t^2 - 3)(t^2 - 6), no rational roots
    EXPECT_EQ(irreducibility({Rational(-36), Rational(0), Rational(36), Rational(0), Rational(-11), Rational(0),
                              Rational(1)}),
              Irreducibility::Reducible);
}

TEST(ResidueField, BiquadraticField) {
    const auto k = residue_field({P("x1^2-2"), P("x2^2-3")});
    EXPECT_EQ(k.dim(), 4u);
    EXPECT_FALSE(k.is_rational());
    // x2 = 2 x1 at both points of the second ideal
    EXPECT_THROW(residue_field({P("x1^2-2"), P("x2^2-8")}), PreconditionError);
}

TEST(VanishingIdeal, SinglePoint) {
    const auto gb = vanishing_ideal(rational_points({Q({0, 0})}));
    ASSERT_EQ(gb.generators().size(), 2u);
    EXPECT_EQ(gb.generators()[0], H("X2"));
    EXPECT_EQ(gb.generators()[1], H("X1"));
}

TEST(VanishingIdeal, SixRationalPoints) {
    const auto pts = rational_points({Q({0, 0}), Q({2, 0}), Q({2, 1}), Q({0, 2}), Q({1, 2}), Q({2, 2})});
    const auto gb = vanishing_ideal(pts);
    EXPECT_TRUE(gb.verify());
    const std::vector<int> expect{1, 3, 6, 6, 6};
    for (int i = 0; i < 5; ++i) EXPECT_EQ(hf_by_normal_forms(gb, i), expect[static_cast<size_t>(i)]);
    // generators vanish at the points; the affine GB is the dehomogenization
    std::vector<Monomial> standard;
    const auto affine = affine_vanishing_ideal(pts, &standard);
    EXPECT_EQ(standard.size(), 6u);
    for (size_t k = 0; k < gb.generators().size(); ++k) {
        EXPECT_EQ(dehomogenize(gb.generators()[k], 0), affine.generators()[k]);
        EXPECT_TRUE(is_zero_vec(germ(affine.generators()[k], pts)));
    }
    EXPECT_TRUE(affine.verify());
}

TEST(VanishingIdeal, ResidueFieldPoints) {
    auto pts = rational_points({Q({0, 0}), Q({1, 0}), Q({0, 1}), Q({1, 1})});
    pts.push_back(residue_field({P("x1^2+3"), P("x2")}));
    pts.push_back(residue_field({P("x1-2"), P("x2^2+2")}));
    const auto gb = vanishing_ideal(pts);
    EXPECT_TRUE(gb.verify());
    const std::vector<int> expect{1, 3, 6, 8, 8, 8};
    for (int i = 0; i < 6; ++i) EXPECT_EQ(hf_by_normal_forms(gb, i), expect[static_cast<size_t>(i)]);
    const auto affine = affine_vanishing_ideal(pts);
    for (const auto& g : affine.generators()) EXPECT_TRUE(is_zero_vec(germ(g, pts)));
}

TEST(VanishingIdeal, DuplicatePointsRejected) {
    EXPECT_THROW(vanishing_ideal(rational_points({Q({1, 2}), Q({3, 4}), Q({1, 2})})), PreconditionError);
    auto pts = rational_points({Q({0, 0})});
    pts.push_back(residue_field({P("x1"), P("x2")}));
    EXPECT_THROW(vanishing_ideal(pts), PreconditionError);
    EXPECT_THROW(vanishing_ideal({}), PreconditionError);
}

}  // namespace
}  // namespace zds
