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

#include "zdscheme/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "zdscheme/errors.hpp"

namespace zds {

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::vector<int> exponents) : exp_(std::move(exponents)) {
    degree_ = std::accumulate(exp_.begin(), exp_.end(), 0);
}

Monomial Monomial::variable(int nvars, int index, int power) {
    std::vector<int> e(static_cast<size_t>(nvars), 0);
    e[static_cast<size_t>(index)] = power;
    return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& other) const {
    for (size_t i = 0; i < exp_.size(); ++i)
        if (exp_[i] > other.exp_[i]) return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
    std::vector<int> e(exp_);
    for (size_t i = 0; i < e.size(); ++i) e[i] += other.exp_[i];
    return Monomial(std::move(e));
}

Monomial Monomial::quotient_of(const Monomial& multiple) const {
    std::vector<int> e(multiple.exp_);
    for (size_t i = 0; i < e.size(); ++i) e[i] -= exp_[i];
    return Monomial(std::move(e));
}

Monomial Monomial::lcm(const Monomial& other) const {
    std::vector<int> e(exp_);
    for (size_t i = 0; i < e.size(); ++i) e[i] = std::max(e[i], other.exp_[i]);
    return Monomial(std::move(e));
}

// --------------------------------------------------------------- TermOrder

TermOrder::TermOrder(Kind kind, std::vector<int> priority) : kind_(kind), priority_(std::move(priority)) {}

TermOrder TermOrder::degrevlex(int nvars) {
    std::vector<int> p(static_cast<size_t>(nvars));
    std::iota(p.begin(), p.end(), 0);
    return TermOrder(Kind::DegRevLex, std::move(p));
}

TermOrder TermOrder::homogeneous_degrevlex(int nvars) {
    std::vector<int> p;
    for (int i = 1; i < nvars; ++i) p.push_back(i);
    p.push_back(0);
    return TermOrder(Kind::DegRevLex, std::move(p));
}

int TermOrder::compare(const Monomial& a, const Monomial& b) const {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    if (kind_ == Kind::DegLex) {
        for (int v : priority_)
            if (a[v] != b[v]) return a[v] < b[v] ? -1 : 1;
        return 0;
    }
    for (auto it = priority_.rbegin(); it != priority_.rend(); ++it)
        if (a[*it] != b[*it]) return a[*it] > b[*it] ? -1 : 1;
    return 0;
}

// -------------------------------------------------------------- Polynomial

Polynomial Polynomial::constant(int nvars, const Rational& c) {
    Polynomial p(nvars);
    p.add_term(Monomial::one(nvars), c);
    return p;
}

Polynomial Polynomial::variable(int nvars, int index) {
    Polynomial p(nvars);
    p.add_term(Monomial::variable(nvars, index), 1);
    return p;
}

Polynomial Polynomial::term(const Monomial& m, const Rational& c) {
    Polynomial p(m.nvars());
    p.add_term(m, c);
    return p;
}

Rational Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

int Polynomial::degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    const int d = terms_.begin()->first.degree();
    return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) { return t.first.degree() == d; });
}

const Monomial& Polynomial::leading_monomial(const TermOrder& order) const {
    if (terms_.empty()) throw std::logic_error("leading monomial of the zero polynomial");
    auto best = terms_.begin();
    for (auto it = std::next(best); it != terms_.end(); ++it)
        if (order.less(best->first, it->first)) best = it;
    return best->first;
}

Rational Polynomial::leading_coefficient(const TermOrder& order) const {
    return terms_.at(leading_monomial(order));
}

std::vector<std::pair<Monomial, Rational>> Polynomial::sorted_terms(const TermOrder& order) const {
    std::vector<std::pair<Monomial, Rational>> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(),
              [&order](const auto& a, const auto& b) { return order.less(b.first, a.first); });
    return out;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (m.nvars() != nvars_) throw std::invalid_argument("monomial has the wrong number of variables");
    if (zds::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (zds::is_zero(it->second)) terms_.erase(it);
    }
}

void Polynomial::check_compatible(const Polynomial& other) const {
    if (nvars_ != other.nvars_)
        throw std::invalid_argument("polynomials live in rings with different numbers of variables (" +
                                    std::to_string(nvars_) + " vs " + std::to_string(other.nvars_) + ")");
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    check_compatible(other);
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    check_compatible(other);
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (zds::is_zero(c)) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, a] : terms_) a *= c;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_compatible(b);
    Polynomial r(a.nvars_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

Polynomial Polynomial::times_monomial(const Monomial& m, const Rational& c) const {
    Polynomial r(nvars_);
    if (zds::is_zero(c)) return r;
    for (const auto& [t, a] : terms_) r.terms_.emplace_hint(r.terms_.end(), t * m, a * c);
    return r;
}

Polynomial Polynomial::monic(const TermOrder& order) const {
    if (is_zero()) return *this;
    return *this * Rational(1 / leading_coefficient(order));
}

Polynomial Polynomial::derivative(int var) const {
    Polynomial r(nvars_);
    for (const auto& [m, c] : terms_) {
        const int e = m[var];
        if (e == 0) continue;
        std::vector<int> exps = m.exponents();
        exps[static_cast<size_t>(var)] -= 1;
        r.add_term(Monomial(std::move(exps)), c * e);
    }
    return r;
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
    if (static_cast<int>(point.size()) != nvars_) throw std::invalid_argument("evaluation point has wrong length");
    Rational sum = 0;
    for (const auto& [m, c] : terms_) {
        Rational v = c;
        for (int i = 0; i < nvars_; ++i)
            for (int k = 0; k < m[i]; ++k) v *= point[static_cast<size_t>(i)];
        sum += v;
    }
    return sum;
}

std::string Polynomial::to_string(const TermOrder& order, const VariableNames& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : sorted_terms(order)) {
        const bool negative = sgn(c) < 0;
        if (first)
            os << (negative ? "-" : "");
        else
            os << (negative ? " - " : " + ");
        first = false;
        const Rational a = negative ? Rational(-c) : c;
        const bool is_one = m.degree() == 0;
        bool need_star = false;
        if (a != 1 || is_one) {
            os << zds::to_string(a);
            need_star = true;
        }
        for (int v = 0; v < nvars_; ++v) {
            if (m[v] == 0) continue;
            if (need_star) os << '*';
            os << names.prefix << (v + names.offset);
            if (m[v] > 1) os << '^' << m[v];
            need_star = true;
        }
    }
    return os.str();
}

Polynomial homogenize(const Polynomial& f, int homog_var) {
    const int d = f.degree();
    Polynomial r(f.nvars() + 1);
    for (const auto& [m, c] : f.terms()) {
        std::vector<int> e = m.exponents();
        e.insert(e.begin() + homog_var, d - m.degree());
        r.add_term(Monomial(std::move(e)), c);
    }
    return r;
}

Polynomial dehomogenize(const Polynomial& F, int homog_var) {
    Polynomial r(F.nvars() - 1);
    for (const auto& [m, c] : F.terms()) {
        std::vector<int> e = m.exponents();
        e.erase(e.begin() + homog_var);
        r.add_term(Monomial(std::move(e)), c);
    }
    return r;
}

std::vector<Monomial> monomials_of_degree(int nvars, int degree, const TermOrder& order) {
    std::vector<Monomial> out;
    std::vector<int> e(static_cast<size_t>(nvars), 0);
    // enumerate compositions of `degree` into nvars parts
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == nvars - 1) {
            e[static_cast<size_t>(pos)] = remaining;
            out.emplace_back(e);
            return;
        }
        for (int k = remaining; k >= 0; --k) {
            e[static_cast<size_t>(pos)] = k;
            self(self, pos + 1, remaining - k);
        }
    };
    if (nvars == 0) {
        if (degree == 0) out.emplace_back(std::vector<int>{});
        return out;
    }
    rec(rec, 0, degree);
    std::sort(out.begin(), out.end(), [&order](const Monomial& a, const Monomial& b) { return order.less(a, b); });
    return out;
}

// ------------------------------------------------------------------ parser

namespace {

class Parser {
   public:
    Parser(std::string_view text, int nvars, const VariableNames& names)
        : text_(text), nvars_(nvars), names_(names) {}

    Polynomial parse() {
        Polynomial p = expression();
        skip_blanks();
        if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
        return p;
    }

   private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("cannot parse polynomial '" + std::string(text_) + "' at position " +
                         std::to_string(pos_) + ": " + what);
    }

    void skip_blanks() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() {
        skip_blanks();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool starts_factor(char c) const {
        return std::isdigit(static_cast<unsigned char>(c)) || c == 'x' || c == 'X' || c == '(';
    }

    Polynomial expression() {
        Polynomial acc(nvars_);
        bool negate = false;
        if (peek() == '-' || peek() == '+') negate = text_[pos_++] == '-';
        Polynomial t = product();
        acc += negate ? -t : t;
        for (;;) {
            const char c = peek();
            if (c != '+' && c != '-') break;
            ++pos_;
            Polynomial u = product();
            if (c == '+')
                acc += u;
            else
                acc -= u;
        }
        return acc;
    }

    Polynomial product() {
        Polynomial acc = power();
        for (;;) {
            const char c = peek();
            if (c == '*') {
                ++pos_;
                acc = acc * power();
            } else if (c == '/') {
                ++pos_;
                Polynomial d = power();
                if (d.degree() != 0) fail("division by a non-constant");
                acc *= Rational(1 / d.coefficient(Monomial::one(nvars_)));
            } else if (starts_factor(c)) {
                acc = acc * power();
            } else {
                break;
            }
        }
        return acc;
    }

    Polynomial power() {
        Polynomial base = atom();
        if (peek() == '^') {
            ++pos_;
            skip_blanks();
            const int e = integer_literal();
            Polynomial r = Polynomial::constant(nvars_, 1);
            for (int i = 0; i < e; ++i) r = r * base;
            return r;
        }
        return base;
    }

    int integer_literal() {
        const size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected a non-negative integer");
        if (pos_ - start > 6) fail("integer too large");
        return std::stoi(std::string(text_.substr(start, pos_ - start)));
    }

    Polynomial atom() {
        const char c = peek();
        if (c == '(') {
            ++pos_;
            Polynomial p = expression();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return p;
        }
        if (c == '-') {
            ++pos_;
            return -power();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            return Polynomial::constant(nvars_, Rational(Integer(std::string(text_.substr(start, pos_ - start)))));
        }
        if (c == 'x' || c == 'X') {
            ++pos_;
            const int k = integer_literal();
            const int index = k - names_.offset;
            if (index < 0 || index >= nvars_)
                fail("variable index " + std::to_string(k) + " outside the ring's variables");
            return Polynomial::variable(nvars_, index);
        }
        fail(c == '\0' ? "unexpected end of input" : "unexpected character '" + std::string(1, c) + "'");
    }

    std::string_view text_;
    size_t pos_ = 0;
    int nvars_;
    VariableNames names_;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, int nvars, const VariableNames& names) {
    return Parser(text, nvars, names).parse();
}

}  // namespace zds
