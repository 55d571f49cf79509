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

#ifndef ZDSCHEME_POLYNOMIAL_HPP
#define ZDSCHEME_POLYNOMIAL_HPP

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "zdscheme/rational.hpp"

namespace zds {

/// A power product x_0^{e_0} ... x_{m-1}^{e_{m-1}}.
class Monomial {
   public:
    Monomial() = default;
    explicit Monomial(int nvars) : exp_(static_cast<size_t>(nvars), 0) {}
    explicit Monomial(std::vector<int> exponents);

    static Monomial one(int nvars) { return Monomial(nvars); }
    static Monomial variable(int nvars, int index, int power = 1);

    int nvars() const { return static_cast<int>(exp_.size()); }
    int degree() const { return degree_; }
    int operator[](int i) const { return exp_[static_cast<size_t>(i)]; }
    const std::vector<int>& exponents() const { return exp_; }

    bool divides(const Monomial& other) const;
    Monomial operator*(const Monomial& other) const;
    /// Requires divides(other) == true.
    Monomial quotient_of(const Monomial& multiple) const;
    Monomial lcm(const Monomial& other) const;

    /// Lexicographic comparison of exponent vectors (storage order only,
    /// not a term ordering).
    auto operator<=>(const Monomial& other) const { return exp_ <=> other.exp_; }
    bool operator==(const Monomial& other) const { return exp_ == other.exp_; }

   private:
    std::vector<int> exp_;
    int degree_ = 0;
};

/// Degree-compatible term ordering. `priority` lists variable indices from
/// most to least significant; for degrevlex ties are broken by the least
/// significant variable first.
class TermOrder {
   public:
    enum class Kind { DegRevLex, DegLex };

    TermOrder(Kind kind, std::vector<int> priority);

    /// degrevlex with x_0 > x_1 > ... > x_{m-1}.
    static TermOrder degrevlex(int nvars);
    /// degrevlex on X_0..X_n with X_1 > ... > X_n > X_0, so X_0 is the
    /// least significant variable.
    static TermOrder homogeneous_degrevlex(int nvars);

    Kind kind() const { return kind_; }
    const std::vector<int>& priority() const { return priority_; }

    /// Negative, zero or positive as a is smaller, equal or larger than b.
    int compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

   private:
    Kind kind_;
    std::vector<int> priority_;
};

/// Variable naming for printing and parsing: index i prints as
/// prefix + (i + offset). Affine rings use {"x", 1}, homogeneous {"X", 0}.
struct VariableNames {
    std::string prefix = "x";
    int offset = 1;
};

/// Sparse multivariate polynomial with exact rational coefficients.
class Polynomial {
   public:
    using TermMap = std::map<Monomial, Rational>;

    Polynomial() = default;
    explicit Polynomial(int nvars) : nvars_(nvars) {}

    static Polynomial constant(int nvars, const Rational& c);
    static Polynomial variable(int nvars, int index);
    static Polynomial term(const Monomial& m, const Rational& c);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    size_t size() const { return terms_.size(); }
    Rational coefficient(const Monomial& m) const;

    /// Maximal total degree of a term; -1 for the zero polynomial.
    int degree() const;
    /// True for the zero polynomial and when all terms share one degree.
    bool is_homogeneous() const;

    const Monomial& leading_monomial(const TermOrder& order) const;
    Rational leading_coefficient(const TermOrder& order) const;
    /// Terms sorted from largest to smallest.
    std::vector<std::pair<Monomial, Rational>> sorted_terms(const TermOrder& order) const;

    void add_term(const Monomial& m, const Rational& c);

    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Rational& c);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
    Polynomial operator-() const;
    Polynomial times_monomial(const Monomial& m, const Rational& c) const;

    bool operator==(const Polynomial& other) const = default;

    Polynomial monic(const TermOrder& order) const;
    Polynomial derivative(int var) const;
    /// Substitutes the given values for the variables (size == nvars()).
    Rational evaluate(const std::vector<Rational>& point) const;

    std::string to_string(const TermOrder& order, const VariableNames& names) const;

   private:
    void check_compatible(const Polynomial& other) const;

    int nvars_ = 0;
    TermMap terms_;
};

/// Inserts a new variable at position homog_var and multiplies every term
/// by the power of it that makes the result homogeneous of degree deg(f).
Polynomial homogenize(const Polynomial& f, int homog_var);
/// Sets variable homog_var to 1 and removes it from the ring.
Polynomial dehomogenize(const Polynomial& F, int homog_var);

/// Parses expressions over the rationals such as "x1^2+3",
/// "X0^5*X1 - 11/6*X0^4*X1^2" or "2*(x1-1)^2". Variables are written as a
/// letter x or X followed by an index k; k - names.offset must lie in
/// [0, nvars). Implicit multiplication is accepted. Throws ParseError.
Polynomial parse_polynomial(std::string_view text, int nvars, const VariableNames& names);

/// All monomials in nvars variables of the given total degree, increasing
/// with respect to the order.
std::vector<Monomial> monomials_of_degree(int nvars, int degree, const TermOrder& order);

}  // namespace zds

#endif  // ZDSCHEME_POLYNOMIAL_HPP
