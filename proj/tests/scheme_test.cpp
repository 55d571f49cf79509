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

#include "test_support.hpp"
#include "zdscheme/errors.hpp"
#include "zdscheme/io.hpp"
#include "zdscheme/scheme.hpp"

namespace zds {
namespace {

using testing::fixture;
using testing::ints;

PointSpec pt(std::initializer_list<const char*> c) {
    PointSpec p;
    for (const char* s : c) p.coords.emplace_back(s);
    return p;
}

TEST(BuildScheme, SixPointsInThePlane) {
    const auto& x = fixture("ex2.9");
    EXPECT_EQ(x.degree(), 6u);
    EXPECT_EQ(x.hilbert_function().values(), ints({1, 3, 6}));
    EXPECT_EQ(x.regularity_index(), 2);
    EXPECT_EQ(x.hf(-1), 0);
    EXPECT_EQ(x.hf(17), 6);
}

TEST(BuildScheme, NinePointsInP3) {
    const auto& x = fixture("ex2.10");
    EXPECT_EQ(x.hilbert_function().values(), ints({1, 4, 9}));
    EXPECT_EQ(x.regularity_index(), 2);
}

TEST(BuildScheme, EightPoints) {
    const auto& x = fixture("ex3.11");
    EXPECT_EQ(x.hilbert_function().values(), ints({1, 3, 5, 7, 8}));
    EXPECT_EQ(x.regularity_index(), 4);
}

TEST(BuildScheme, ResidueFieldPoints) {
    const auto& x = fixture("ex3.4");
    EXPECT_EQ(x.degree(), 8u);
    EXPECT_EQ(x.num_points(), 6u);
    EXPECT_EQ(x.kappa(4), 2u);
    EXPECT_EQ(x.kappa(5), 2u);
    EXPECT_FALSE(x.all_rational());
    EXPECT_EQ(x.hilbert_function().values(), ints({1, 3, 6, 8}));
}

TEST(BuildScheme, CompleteIntersection) {
    EXPECT_EQ(fixture("ex2.6ci").hilbert_function().values(), ints({1, 2, 3, 4, 5, 6}));
}

TEST(BuildScheme, SinglePoint) {
    const auto x = build_scheme(2, {pt({"1", "0", "0"})});
    EXPECT_EQ(x.regularity_index(), 0);
    ASSERT_EQ(x.kx0_terms().size(), 1u);
    EXPECT_EQ(x.kx0_terms()[0].degree(), 0);
    EXPECT_EQ(x.kx0_degrees(), ints({0}));
    ASSERT_EQ(x.groebner_basis().generators().size(), 2u);
}

TEST(BuildScheme, NormalizesByFirstCoordinate) {
    const auto a = build_scheme(2, {pt({"2", "4", "-2"}), pt({"1", "0", "0"})});
    const auto b = build_scheme(2, {pt({"1", "2", "-1"}), pt({"1", "0", "0"})});
    EXPECT_EQ(a.groebner_basis().generators(), b.groebner_basis().generators());
}

TEST(BuildScheme, Errors) {
    EXPECT_THROW(build_scheme(2, {pt({"0", "1", "0"})}), PreconditionError);
    EXPECT_THROW(build_scheme(2, {pt({"1", "1"})}), ParseError);
    EXPECT_THROW(build_scheme(2, {pt({"1", "1/0", "0"})}), ParseError);
    EXPECT_THROW(build_scheme(2, {pt({"1", "1", "0"}), pt({"2", "2", "0"})}), PreconditionError);
    EXPECT_THROW(build_scheme(2, {}), PreconditionError);
    EXPECT_THROW(build_scheme(0, {pt({"1"})}), PreconditionError);
    EXPECT_THROW(build_scheme(2, {PointSpec::from_ideal({"x1^2-1", "x2"})}), PreconditionError);
    EXPECT_THROW(build_scheme(2, {PointSpec::from_ideal({"x1^2+1", "x3"})}), ParseError);
    EXPECT_THROW(build_scheme(2, {PointSpec::from_ideal({"X0", "X2"})}), PreconditionError);
}

TEST(EvaluationMap, DegreeZeroIsAllOnes) {
    const auto& x = fixture("ex3.4");
    const auto m = x.evaluation_map(0);
    ASSERT_EQ(m.cols(), 1u);
    EXPECT_EQ(m.column(0), x.one());
    EXPECT_EQ(x.monomial_evaluation_map(0).column(0), x.one());
}

TEST(EvaluationMap, RanksMatchHilbertFunction) {
    for (const char* name : {"ex2.9", "ex2.10", "ex3.4", "ex3.11", "ex2.6ci"}) {
        const auto& x = fixture(name);
        for (int i = 0; i <= x.regularity_index() + 2; ++i) {
            EXPECT_EQ(static_cast<int>(x.evaluation_map(i).rank()), x.hf(i)) << name << " " << i;
            EXPECT_EQ(static_cast<int>(x.monomial_evaluation_map(i).rank()), x.hf(i)) << name << " " << i;
            EXPECT_EQ(static_cast<int>(x.component(i).dim()), x.hf(i));
            EXPECT_TRUE(x.component(i).is_subspace_of(x.component(i + 1)));
        }
        const auto m = x.evaluation_map(x.regularity_index());
        EXPECT_EQ(m.rows(), m.cols());
    }
    EXPECT_EQ(fixture("ex2.9").evaluation_map(1).rank(), 3u);
}

TEST(Kx0Basis, DegreeMultisets) {
    EXPECT_EQ(fixture("ex2.9").kx0_degrees(), ints({0, 1, 1, 2, 2, 2}));
    EXPECT_EQ(fixture("ex3.11").kx0_degrees(), ints({0, 1, 1, 2, 2, 3, 3, 4}));
    const auto& x = fixture("ex3.11");
    for (int m = 0; m <= 5; ++m) {
        std::vector<Vec> gens;
        for (size_t j = 0; j < x.degree(); ++j)
            if (x.kx0_degrees()[j] <= m) gens.push_back(x.germ_homogeneous(x.lift(x.basis_germ(j), m)));
        EXPECT_EQ(Subspace::span(x.degree(), gens), x.component(m));
    }
}

TEST(Kx0Basis, LiftRoundTrip) {
    const auto& x = fixture("ex3.4");
    const Vec y = x.component(2).basis().back();
    const Polynomial f = x.lift(y, 2);
    EXPECT_TRUE(f.is_homogeneous());
    EXPECT_EQ(f.degree(), 2);
    EXPECT_EQ(x.germ_homogeneous(f), y);
    EXPECT_EQ(x.germ_homogeneous(x.lift(y, 5)), y);
    EXPECT_THROW(x.lift(x.unit(5, 1), 1), std::invalid_argument);
}

TEST(GermAlgebra, TraceAndProducts) {
    const auto& x = fixture("ex3.4");
    EXPECT_EQ(x.trace(x.one()), 8);
    const Vec a = x.unit(4, 1);  // x1 at the point with x1^2 = -3
    EXPECT_EQ(x.multiply(a, a), scaled(x.unit(4, 0), Rational(-3)));
    EXPECT_EQ(x.trace(a), 0);
    EXPECT_EQ(x.keep_block(x.one(), 5), x.unit(5, 0));
}

TEST(RemovePoint, SubschemeHilbertFunctions) {
    const auto& x = fixture("ex3.4");
    for (size_t j = 0; j < 4; ++j) EXPECT_EQ(remove_point(x, j).hilbert_function().values(), ints({1, 3, 6, 7}));
    EXPECT_EQ(remove_point(x, 4).hilbert_function().values(), ints({1, 3, 6}));
    EXPECT_EQ(remove_point(x, 5).hilbert_function().values(), ints({1, 3, 5, 6}));
    EXPECT_EQ(remove_point(x, 3).regularity_index(), 3);
}

TEST(RemovePoint, Errors) {
    const auto x = build_scheme(2, {pt({"1", "0", "0"})});
    EXPECT_THROW(remove_point(x, 0), PreconditionError);
    EXPECT_THROW(remove_point(fixture("ex2.9"), 6), PreconditionError);
}

TEST(GradedFamily, Tails) {
    const auto f = fixture("ex2.9").ring_family();
    EXPECT_EQ(f.hf_values(-1, 4), ints({0, 1, 3, 6, 6, 6}));
    EXPECT_EQ(f.regularity_index(), 2);
    GradedSubspaceFamily stable(2, 0, {Subspace(2), Subspace::span(2, {unit_vec(2, 0)})},
                                GradedSubspaceFamily::Above::Stable);
    EXPECT_EQ(stable.hf(9), 1);
    EXPECT_THROW(stable.regularity_index(), std::logic_error);
}

TEST(SchemeIO, ParseAndRoundTrip) {
    const auto in = parse_scheme_json(R"({"n": 2, "points": [{"coords": ["1","2","0"]},
                                                             {"maximal_ideal": ["x1^2+3","x2"]}]})");
    EXPECT_EQ(in.n, 2);
    ASSERT_EQ(in.points.size(), 2u);
    const auto again = parse_scheme_json(scheme_input_to_json(in));
    EXPECT_EQ(again.points, in.points);
    EXPECT_EQ(build_scheme(in.n, in.points).degree(), 3u);
}

TEST(SchemeIO, ParseErrors) {
    EXPECT_THROW(parse_scheme_json("{"), ParseError);
    EXPECT_THROW(parse_scheme_json("[]"), ParseError);
    EXPECT_THROW(parse_scheme_json(R"({"points": []})"), ParseError);
    EXPECT_THROW(parse_scheme_json(R"({"n": 2, "points": []})"), ParseError);
    EXPECT_THROW(parse_scheme_json(R"({"n": 2, "points": [{"coords": ["1","2"]}]})"), ParseError);
    EXPECT_THROW(parse_scheme_json(R"({"n": 2, "points": [{}]})"), ParseError);
    EXPECT_THROW(parse_scheme_json(R"({"n": 2, "points": [{"coords": [1.5, 2, 3]}]})"), ParseError);
    EXPECT_THROW(load_scheme_file("/nonexistent/file.json"), ParseError);
    EXPECT_THROW(load_fixture("ex9.99"), PreconditionError);
}

TEST(SchemeIO, AllFixturesLoad) {
    for (const auto& name : fixture_names()) {
        const auto in = load_fixture(name);
        EXPECT_EQ(in.name, name);
        EXPECT_NO_THROW(fixture(name));
    }
}

}  // namespace
}  // namespace zds
