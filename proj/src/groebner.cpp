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

#include "zdscheme/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>
#include <stdexcept>

#include "zdscheme/errors.hpp"

namespace zds {

namespace {

Polynomial reduce_against(Polynomial p, const std::vector<Polynomial>& gens, const std::vector<Monomial>& lms,
                          const TermOrder& order) {
    Polynomial r(p.nvars());
    while (!p.is_zero()) {
        const Monomial lt = p.leading_monomial(order);
        const Rational c = p.coefficient(lt);
        size_t k = 0;
        while (k < lms.size() && !lms[k].divides(lt)) ++k;
        if (k == lms.size()) {
            r.add_term(lt, c);
            p.add_term(lt, -c);
            continue;
        }
        // generators are monic
        p -= gens[k].times_monomial(lms[k].quotient_of(lt), c);
    }
    return r;
}

Polynomial s_polynomial(const Polynomial& f, const Monomial& lf, const Polynomial& g, const Monomial& lg) {
    const Monomial l = lf.lcm(lg);
    return f.times_monomial(lf.quotient_of(l), 1) - g.times_monomial(lg.quotient_of(l), 1);
}

bool coprime(const Monomial& a, const Monomial& b) {
    for (int i = 0; i < a.nvars(); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

}  // namespace

GroebnerBasis::GroebnerBasis(std::vector<Polynomial> generators, TermOrder order, bool reduced)
    : nvars_(generators.empty() ? 0 : generators.front().nvars()),
      gens_(std::move(generators)),
      order_(std::move(order)),
      reduced_(reduced) {
    for (const auto& g : gens_) {
        if (g.is_zero()) throw std::invalid_argument("zero polynomial in a Groebner basis");
        lms_.push_back(g.leading_monomial(order_));
    }
}

bool GroebnerBasis::is_standard(const Monomial& m) const {
    return std::none_of(lms_.begin(), lms_.end(), [&m](const Monomial& l) { return l.divides(m); });
}

bool GroebnerBasis::verify() const {
    std::vector<Polynomial> monic;
    for (const auto& g : gens_) monic.push_back(g.monic(order_));
    for (size_t i = 0; i < gens_.size(); ++i)
        for (size_t j = i + 1; j < gens_.size(); ++j) {
            if (coprime(lms_[i], lms_[j])) continue;
            if (!reduce_against(s_polynomial(monic[i], lms_[i], monic[j], lms_[j]), monic, lms_, order_).is_zero())
                return false;
        }
    return true;
}

GroebnerBasis buchberger(const std::vector<Polynomial>& input, const TermOrder& order) {
    if (input.empty()) throw std::invalid_argument("buchberger needs at least one generator");
    const int nvars = input.front().nvars();
    std::vector<Polynomial> g;
    std::vector<Monomial> lm;
    struct Pair {
        size_t i, j;
        Monomial lcm;
    };
    std::vector<Pair> pairs;

    auto add = [&](Polynomial h) {
        h = h.monic(order);
        const Monomial l = h.leading_monomial(order);
        for (size_t k = 0; k < g.size(); ++k) pairs.push_back({k, g.size(), lm[k].lcm(l)});
        g.push_back(std::move(h));
        lm.push_back(l);
    };

    for (const auto& f : input) {
        if (f.nvars() != nvars) throw std::invalid_argument("generators with different numbers of variables");
        Polynomial h = reduce_against(f, g, lm, order);
        if (!h.is_zero()) add(std::move(h));
    }
    if (g.empty()) throw std::invalid_argument("buchberger called on the zero ideal");

    while (!pairs.empty()) {
        auto best = std::min_element(pairs.begin(), pairs.end(), [&order](const Pair& a, const Pair& b) {
            const int c = order.compare(a.lcm, b.lcm);
            if (c != 0) return c < 0;
            return std::tie(a.j, a.i) < std::tie(b.j, b.i);
        });
        const Pair p = *best;
        pairs.erase(best);
        if (coprime(lm[p.i], lm[p.j])) continue;
        Polynomial h = reduce_against(s_polynomial(g[p.i], lm[p.i], g[p.j], lm[p.j]), g, lm, order);
        if (!h.is_zero()) add(std::move(h));
    }

    // minimalize
    std::vector<size_t> keep;
    for (size_t k = 0; k < g.size(); ++k) {
        bool redundant = false;
        for (size_t l = 0; l < g.size() && !redundant; ++l) {
            if (l == k || !lm[l].divides(lm[k])) continue;
            redundant = lm[l] != lm[k] || l < k;
        }
        if (!redundant) keep.push_back(k);
    }
    std::sort(keep.begin(), keep.end(), [&](size_t a, size_t b) { return order.less(lm[a], lm[b]); });
    std::vector<Polynomial> mg;
    std::vector<Monomial> mlm;
    for (size_t k : keep) {
        mg.push_back(g[k]);
        mlm.push_back(lm[k]);
    }
    // interreduce tails
    std::vector<Polynomial> reduced;
    for (size_t k = 0; k < mg.size(); ++k) {
        Polynomial tail = mg[k];
        tail.add_term(mlm[k], -1);
        std::vector<Polynomial> others;
        std::vector<Monomial> olm;
        for (size_t l = 0; l < mg.size(); ++l)
            if (l != k) {
                others.push_back(mg[l]);
                olm.push_back(mlm[l]);
            }
        Polynomial r = reduce_against(tail, others, olm, order);
        r.add_term(mlm[k], 1);
        reduced.push_back(std::move(r));
    }
    return GroebnerBasis(std::move(reduced), order, true);
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
    if (f.nvars() != gb.nvars()) throw std::invalid_argument("normal form: variable count mismatch");
    if (gb.is_reduced()) return reduce_against(f, gb.generators(), gb.leading_monomials(), gb.order());
    std::vector<Polynomial> monic;
    for (const auto& g : gb.generators()) monic.push_back(g.monic(gb.order()));
    return reduce_against(f, monic, gb.leading_monomials(), gb.order());
}

std::vector<Monomial> standard_monomials(const GroebnerBasis& gb) {
    const int n = gb.nvars();
    for (int i = 0; i < n; ++i) {
        bool pure = false;
        for (const auto& l : gb.leading_monomials())
            if (l.degree() == l[i]) pure = true;
        if (!pure) throw PreconditionError("ideal is not zero-dimensional (no leading term is a power of x" +
                                           std::to_string(i + 1) + ")");
    }
    std::vector<Monomial> out;
    for (int d = 0;; ++d) {
        bool any = false;
        for (const auto& m : monomials_of_degree(n, d, gb.order()))
            if (gb.is_standard(m)) {
                out.push_back(m);
                any = true;
            }
        if (!any) break;
    }
    return out;
}

// ------------------------------------------------------------ ResidueField

ResidueField::ResidueField(GroebnerBasis gb, std::vector<Monomial> basis)
    : gb_(std::move(gb)), basis_(std::move(basis)) {
    const size_t d = basis_.size();
    table_.assign(d, std::vector<Vec>(d));
    for (size_t a = 0; a < d; ++a)
        for (size_t b = a; b < d; ++b) {
            table_[a][b] = coords(Polynomial::term(basis_[a] * basis_[b], 1));
            table_[b][a] = table_[a][b];
        }
    for (int i = 0; i < nvars(); ++i) var_coords_.push_back(coords(Polynomial::variable(nvars(), i)));
    trace_.assign(d, 0);
    for (size_t a = 0; a < d; ++a)
        for (size_t b = 0; b < d; ++b) trace_[a] += table_[a][b][b];
}

Vec ResidueField::coords(const Polynomial& f) const {
    const Polynomial r = normal_form(f, gb_);
    Vec v(dim());
    for (const auto& [m, c] : r.terms()) {
        auto it = std::find(basis_.begin(), basis_.end(), m);
        if (it == basis_.end()) throw InvariantError("normal form contains a non-standard monomial");
        v[static_cast<size_t>(it - basis_.begin())] = c;
    }
    return v;
}

Vec ResidueField::multiply(const Vec& a, const Vec& b) const {
    const size_t d = dim();
    if (d == 1) return Vec{a[0] * b[0]};
    Vec r(d);
    for (size_t i = 0; i < d; ++i) {
        if (is_zero(a[i])) continue;
        for (size_t j = 0; j < d; ++j)
            if (!is_zero(b[j])) axpy(r, a[i] * b[j], table_[i][j]);
    }
    return r;
}

ExactMatrix ResidueField::multiplication_matrix(const Vec& a) const {
    std::vector<Vec> cols;
    for (size_t b = 0; b < dim(); ++b) cols.push_back(multiply(a, unit_vec(dim(), b)));
    return ExactMatrix::from_columns(cols, dim());
}

ExactMatrix ResidueField::trace_form() const {
    ExactMatrix g(dim(), dim());
    for (size_t a = 0; a < dim(); ++a)
        for (size_t b = 0; b < dim(); ++b) g(a, b) = trace(table_[a][b]);
    return g;
}

Polynomial ResidueField::lift(const Vec& a) const {
    Polynomial p(nvars());
    for (size_t k = 0; k < dim(); ++k) p.add_term(basis_[k], a[k]);
    return p;
}

namespace {

// Minimal polynomial of c in the algebra, by the Krylov sequence.
univariate::UPoly minimal_polynomial(const ResidueField& f, const Vec& c) {
    std::vector<Vec> powers{f.one()};
    for (;;) {
        const Vec next = f.multiply(powers.back(), c);
        const auto sol = ExactMatrix::from_columns(powers, f.dim()).solve(next);
        if (sol) {
            univariate::UPoly m(powers.size() + 1);
            for (size_t k = 0; k < powers.size(); ++k) m[k] = -(*sol)[k];
            m[powers.size()] = 1;
            return m;
        }
        powers.push_back(next);
    }
}

std::string ideal_text(const std::vector<Polynomial>& gens) {
    std::string s = "<";
    for (size_t k = 0; k < gens.size(); ++k) {
        if (k) s += ", ";
        s += gens[k].to_string(TermOrder::degrevlex(gens[k].nvars()), VariableNames{});
    }
    return s + ">";
}

void certify_field(const ResidueField& field, const std::vector<Polynomial>& gens) {
    const size_t d = field.dim();
    if (d == 1) return;
    const int n = field.nvars();
    const long tries = static_cast<long>(n - 1) * static_cast<long>(d * (d - 1) / 2) + 1;
    univariate::UPoly m;
    for (long k = 0; k < tries; ++k) {
        Vec c(d);
        Rational w = 1;
        for (int i = 0; i < n; ++i) {
            axpy(c, w, field.variable_coords(i));
            w *= k;
        }
        m = minimal_polynomial(field, c);
        if (univariate::degree(m) == static_cast<int>(d)) break;
        m.clear();
    }
    if (m.empty())
        throw PreconditionError("quotient by " + ideal_text(gens) + " is not a field (no primitive element exists)");
    if (univariate::degree(univariate::gcd(m, univariate::derivative(m))) > 0)
        throw PreconditionError("quotient by " + ideal_text(gens) + " is not a field (it has nilpotents)");
    switch (univariate::irreducibility(m)) {
        case univariate::Irreducibility::Irreducible:
            return;
        case univariate::Irreducibility::Reducible:
            throw PreconditionError("quotient by " + ideal_text(gens) +
                                    " is not a field (the minimal polynomial of a primitive element factors)");
        case univariate::Irreducibility::Unknown:
            break;
    }
    throw PreconditionError("cannot certify that the quotient by " + ideal_text(gens) + " is a field");
}

}  // namespace

ResidueField residue_field(const std::vector<Polynomial>& maximal_ideal) {
    if (maximal_ideal.empty()) throw PreconditionError("maximal ideal needs at least one generator");
    const int n = maximal_ideal.front().nvars();
    for (const auto& g : maximal_ideal)
        if (g.nvars() != n) throw PreconditionError("maximal ideal generators use different rings");
    std::vector<Polynomial> nonzero;
    for (const auto& g : maximal_ideal)
        if (!g.is_zero()) nonzero.push_back(g);
    if (nonzero.empty()) throw PreconditionError("ideal " + ideal_text(maximal_ideal) + " is zero");
    GroebnerBasis gb = buchberger(nonzero, TermOrder::degrevlex(n));
    if (gb.leading_monomials().front().degree() == 0)
        throw PreconditionError("ideal " + ideal_text(maximal_ideal) + " is the unit ideal");
    std::vector<Monomial> basis = standard_monomials(gb);
    ResidueField field(std::move(gb), std::move(basis));
    certify_field(field, maximal_ideal);
    return field;
}

ResidueField rational_residue_field(const std::vector<Rational>& a) {
    const int n = static_cast<int>(a.size());
    std::vector<Polynomial> gens;
    for (int i = 0; i < n; ++i)
        gens.push_back(Polynomial::variable(n, i) - Polynomial::constant(n, a[static_cast<size_t>(i)]));
    GroebnerBasis gb(gens, TermOrder::degrevlex(n), true);
    return ResidueField(std::move(gb), {Monomial::one(n)});
}

// ------------------------------------------------------ Buchberger-Moeller

GroebnerBasis affine_vanishing_ideal(const std::vector<ResidueField>& points, std::vector<Monomial>* standard) {
    if (points.empty()) throw PreconditionError("a scheme needs at least one point");
    const int n = points.front().nvars();
    size_t total = 0;
    for (const auto& p : points) {
        if (p.nvars() != n) throw PreconditionError("points live in different ambient spaces");
        total += p.dim();
    }
    const TermOrder order = TermOrder::degrevlex(n);

    std::vector<std::vector<ExactMatrix>> mult(points.size());
    for (size_t j = 0; j < points.size(); ++j)
        for (int i = 0; i < n; ++i) mult[j].push_back(points[j].multiplication_matrix(points[j].variable_coords(i)));

    std::map<Monomial, Vec> memo;
    auto germ_of = [&](auto&& self, const Monomial& t) -> Vec {
        auto it = memo.find(t);
        if (it != memo.end()) return it->second;
        Vec g;
        if (t.degree() == 0) {
            for (const auto& p : points) {
                const Vec one = p.one();
                g.insert(g.end(), one.begin(), one.end());
            }
        } else {
            int i = 0;
            while (t[i] == 0) ++i;
            std::vector<int> e = t.exponents();
            --e[static_cast<size_t>(i)];
            const Vec parent = self(self, Monomial(std::move(e)));
            size_t off = 0;
            for (size_t j = 0; j < points.size(); ++j) {
                const size_t d = points[j].dim();
                const Vec block(parent.begin() + static_cast<long>(off), parent.begin() + static_cast<long>(off + d));
                const Vec img = mult[j][static_cast<size_t>(i)] * block;
                g.insert(g.end(), img.begin(), img.end());
                off += d;
            }
        }
        memo.emplace(t, g);
        return g;
    };

    struct Row {
        Vec vec, comb;
        size_t pivot;
    };
    std::vector<Row> rows;
    std::vector<Monomial> std_monos;
    std::vector<Polynomial> gens;
    std::vector<Monomial> lts;

    for (int deg = 0;; ++deg) {
        bool any = false;
        for (const auto& t : monomials_of_degree(n, deg, order)) {
            if (std::any_of(lts.begin(), lts.end(), [&t](const Monomial& l) { return l.divides(t); })) continue;
            any = true;
            Vec g = germ_of(germ_of, t);
            Vec acc(total);
            for (const auto& r : rows) {
                const Rational c = g[r.pivot];
                if (is_zero(c)) continue;
                axpy(g, Rational(-c), r.vec);
                axpy(acc, c, r.comb);
            }
            size_t p = 0;
            while (p < total && is_zero(g[p])) ++p;
            if (p == total) {
                Polynomial f = Polynomial::term(t, 1);
                for (size_t l = 0; l < std_monos.size(); ++l) f.add_term(std_monos[l], -acc[l]);
                gens.push_back(std::move(f));
                lts.push_back(t);
                continue;
            }
            if (std_monos.size() == total) throw InvariantError("Buchberger-Moeller produced too many standard monomials");
            Vec comb = scaled(acc, Rational(-1));
            comb[std_monos.size()] += 1;
            std_monos.push_back(t);
            const Rational inv = 1 / g[p];
            Row nr{scaled(g, inv), scaled(comb, inv), p};
            for (auto& r : rows) {
                const Rational c = r.vec[p];
                if (is_zero(c)) continue;
                axpy(r.vec, Rational(-c), nr.vec);
                axpy(r.comb, Rational(-c), nr.comb);
            }
            rows.push_back(std::move(nr));
        }
        if (!any) break;
    }
    if (std_monos.size() != total)
        throw PreconditionError("points are not pairwise distinct (vanishing ideal has degree " +
                                std::to_string(std_monos.size()) + " < " + std::to_string(total) + ")");
    if (standard) *standard = std_monos;
    return GroebnerBasis(std::move(gens), order, true);
}

GroebnerBasis vanishing_ideal(const std::vector<ResidueField>& points) {
    const GroebnerBasis affine = affine_vanishing_ideal(points);
    std::vector<Polynomial> hom;
    for (const auto& g : affine.generators()) hom.push_back(homogenize(g, 0));
    return GroebnerBasis(std::move(hom), TermOrder::homogeneous_degrevlex(affine.nvars() + 1), true);
}

Vec germ(const Polynomial& f, const std::vector<ResidueField>& points) {
    Vec g;
    for (const auto& p : points) {
        const Vec c = p.coords(f);
        g.insert(g.end(), c.begin(), c.end());
    }
    return g;
}

}  // namespace zds
