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

#include "zdscheme/checks.hpp"

#include <functional>

namespace zds {

namespace {

class Recorder {
   public:
    explicit Recorder(std::vector<CheckResult>& out) : out_(out) {}

    /// Starts a named check; expect() calls attach to it.
    void begin(std::string name) { out_.push_back({std::move(name), true, {}}); }

    void expect(bool ok, const std::function<std::string()>& what) {
        CheckResult& c = out_.back();
        if (ok || !c.passed) return;  // keep the first counterexample
        c.passed = false;
        c.detail = what();
    }

   private:
    std::vector<CheckResult>& out_;
};

std::string at(const char* what, int i) { return std::string(what) + " at degree " + std::to_string(i); }

bool block_in(const ZeroDimScheme& x, size_t j, const Subspace& s) {
    for (size_t b = 0; b < x.kappa(j); ++b)
        if (!s.contains(x.unit(j, b))) return false;
    return true;
}

void check_dedekind(const ZeroDimScheme& x, const Analysis& a, Recorder& rec) {
    const int r = x.regularity_index();
    const int deg = static_cast<int>(x.degree());
    const auto& delta = a.delta;

    rec.begin("complementary_hilbert_function");
    for (int i = -r - 1; i <= r + 1; ++i)
        rec.expect(a.complementary.hf(i) == deg - x.hf(-i - 1), [&] { return at("HF_C mismatch", i); });

    rec.begin("different_hilbert_function_bounds");
    for (int i = 0; i <= 2 * r + 1; ++i) {
        rec.expect(delta.at(i).is_subspace_of(x.component(i)), [&] { return at("delta not inside R", i); });
        if (i > 0) rec.expect(delta.hf(i) >= delta.hf(i - 1), [&] { return at("HF_delta decreases", i); });
    }
    rec.expect(delta.hf(2 * r) == deg, [] { return std::string("HF_delta(2 r_X) below deg(X)"); });
    const int ri = delta.regularity_index();
    rec.expect(r <= ri && ri <= 2 * r, [&] { return "ri(delta) = " + std::to_string(ri) + " outside [r_X, 2 r_X]"; });
    if (x.all_rational()) {
        rec.begin("different_regularity_rational");
        rec.expect(ri == 2 * r, [&] { return "ri(delta) = " + std::to_string(ri) + " for rational points"; });
    }

    rec.begin("sandwich");
    rec.expect(a.sandwich, [] { return std::string("F^2 in delta in F fails"); });
    rec.begin("dedekind_formula");
    rec.expect(a.dedekind_formula, [] { return std::string("F * C does not contain 1"); });

    const bool single = x.degree() < 2;
    const bool cb = a.flags.cayley_bacharach;
    auto cbp = [&](int d) { return d <= a.cbp_max; };

    rec.begin("conductor_cbp_equivalence");
    for (int d = 0; d <= r - 1; ++d) {
        bool low = true;
        for (int i = 0; i <= d; ++i) low = low && a.conductor.hf(i) == 0;
        rec.expect(cbp(d) == has_cbp(x, d), [&] { return at("cbp_max disagrees with has_cbp", d); });
        rec.expect(cbp(d) == low, [&] { return at("CBP(d) versus F in degrees > d", d); });
    }
    {
        bool standard = true;
        for (int i = 0; i <= 2 * r; ++i)
            standard = standard && (i < r ? a.conductor.hf(i) == 0 : a.conductor.at(i).is_full());
        if (!single) rec.expect(cb == standard, [] { return std::string("CB versus F = R_{>= r_X}"); });
    }

    if (!single) {
        rec.begin("cb_via_different");
        rec.expect(cb_via_different(x, delta) == cb, [] { return std::string("block criterion disagrees with CB"); });
    }

    if (cb && !single) {
        rec.begin("cb_different_shape");
        for (int i = 0; i < r; ++i) rec.expect(delta.hf(i) == 0, [&] { return at("HF_delta nonzero below r_X", i); });
        rec.expect(delta.hf(2 * r - 1) < deg, [] { return std::string("HF_delta(2 r_X - 1) = deg(X)"); });
        rec.begin("cb_different_bound");
        for (int i = 0; i <= 2 * r + 1; ++i)
            rec.expect(delta.hf(i) <= x.hf(i - r), [&] { return at("HF_delta exceeds HF_X(i - r_X)", i); });
    }

    rec.begin("cbp_kills_different");
    for (int d = 0; d <= r - 1; ++d)
        if (cbp(d)) rec.expect(delta.hf(d) == 0, [&] { return at("CBP(d) but HF_delta(d) != 0", d); });

    rec.begin("different_vanishing_gives_cbp");
    for (int d = 0; d <= r - 1; ++d)
        if (delta.hf(r + d) == 0) rec.expect(cbp(d), [&] { return at("HF_delta(r_X + d) = 0 without CBP(d)", d); });

    rec.begin("trace_ideal_and_conductor");
    {
        bool f_in_tr = true;
        bool equal = true;
        for (int i = 0; i <= 2 * r; ++i) {
            f_in_tr = f_in_tr && a.conductor.at(i).is_subspace_of(a.trace.at(i));
            equal = equal && a.conductor.at(i) == a.trace.at(i);
        }
        if (cb) rec.expect(f_in_tr, [] { return std::string("CB but F not inside tr(C)"); });
        if (!single)
            rec.expect((cb && equal) == a.flags.minimal_different,
                       [] { return std::string("(CB and F = tr(C)) versus minimal different"); });
    }

    if (!single) {
        rec.begin("minimal_different_conductor_square");
        bool square = true;
        for (int i = 0; i <= 2 * r; ++i) square = square && a.conductor_square.at(i) == delta.at(i);
        rec.expect(a.flags.minimal_different == (cb && square),
                   [] { return std::string("minimal different versus CB and F^2 = delta"); });
    }

    if (x.all_rational() && r >= 2) {
        rec.begin("cb_separator_membership");
        bool none_in = true;
        for (size_t j = 0; j < x.num_points(); ++j) none_in = none_in && !block_in(x, j, delta.at(2 * r - 2));
        rec.expect(cb == none_in, [] { return std::string("x0^(r-2) f_j membership disagrees with CB"); });
    }
}

void check_kaehler(const ZeroDimScheme& x, const Analysis& a, Recorder& rec) {
    if (!a.kaehler || !x.all_rational()) return;
    const auto& k = *a.kaehler;
    const int r = x.regularity_index();
    rec.begin("kaehler_inside_dedekind");
    for (int i = 0; i <= k.bound; ++i)
        rec.expect(k.family.at(i).is_subspace_of(a.delta.at(i)), [&] { return at("theta not inside delta", i); });
    rec.begin("kaehler_stabilization");
    if (k.stabilized)
        for (int i = k.stabilization_degree; i <= k.bound; ++i)
            rec.expect(k.family.at(i).is_full(), [&] { return at("theta not full after stabilization", i); });
    if (x.n() == 2) {
        rec.expect(k.stabilized && k.stabilization_degree <= 2 * r,
                   [] { return std::string("theta not full by 2 r_X in P^2"); });
        if (a.flags.minimal_different && a.comparison) {
            rec.begin("kaehler_equals_minimal_different");
            rec.expect(a.comparison->kind == DifferentComparison::Equal,
                       [] { return std::string("minimal different but theta != delta"); });
        }
    }
}

void check_classification(const ZeroDimScheme& x, const Analysis& a, Recorder& rec) {
    const auto& f = a.flags;
    const int r = x.regularity_index();
    rec.begin("classification_lattice");
    if (f.arithmetically_gorenstein)
        rec.expect(f.almost_gorenstein && f.nearly_gorenstein && f.cayley_bacharach,
                   [] { return std::string("AG without almost/nearly/CB"); });
    if (f.almost_gorenstein)
        rec.expect(f.nearly_gorenstein && f.cayley_bacharach, [] { return std::string("almost without nearly/CB"); });
    if (f.level) rec.expect(f.cayley_bacharach, [] { return std::string("level but not CB"); });
    if (f.minimal_different) rec.expect(f.cayley_bacharach, [] { return std::string("minimal different but not CB"); });

    rec.begin("nearly_gorenstein_different");
    if (f.nearly_gorenstein)
        rec.expect(a.delta.hf(r + 1) != 0, [] { return std::string("nearly Gorenstein but HF_delta(r_X + 1) = 0"); });

    if (f.delta_invariant == 1) {
        rec.begin("almost_gorenstein_delta_one");
        rec.expect(f.almost_gorenstein == (f.nearly_gorenstein && f.cayley_bacharach),
                   [] { return std::string("almost versus nearly and CB with Delta = 1"); });
    }
    if (f.delta_invariant >= 2) {
        rec.begin("level_almost_gorenstein_regularity");
        rec.expect((f.level && f.almost_gorenstein) == (r == 1),
                   [] { return std::string("level and almost versus r_X = 1"); });
    }
}

void check_separators(const ZeroDimScheme& x, const Analysis& a, Recorder& rec) {
    const int r = x.regularity_index();
    rec.begin("separator_regimes");
    for (size_t j = 0; j < x.num_points() && x.num_points() > 1; ++j) {
        const auto y = remove_point(x, j);
        const auto& s = a.separators[j];
        const int kappa = static_cast<int>(x.kappa(j));
        for (int i = 0; i <= r + 1; ++i) {
            const int hy = y.hf(i);
            const int hx = x.hf(i);
            if (i < s.alpha)
                rec.expect(hy == hx, [&] { return at("HF_Y != HF_X below alpha", i); });
            else if (i < s.mu)
                rec.expect(hy <= hx - 1, [&] { return at("HF_Y not below HF_X on [alpha, mu)", i); });
            else
                rec.expect(hy == hx - kappa, [&] { return at("HF_Y != HF_X - kappa from mu", i); });
        }
    }
    if (x.all_rational() && x.num_points() > 1) {
        rec.begin("standard_separators_orthogonal");
        for (size_t j = 0; j < x.num_points(); ++j)
            for (size_t k = j + 1; k < x.num_points(); ++k)
                for (const auto& u : a.separators[j].germs)
                    for (const auto& v : a.separators[k].germs)
                        rec.expect(is_zero_vec(x.multiply(u, v)), [] { return std::string("separator product nonzero"); });
    }
    if (x.degree() >= 2) {
        rec.begin("cbp_monotone");
        rec.expect(has_cbp(x, 0) || r == 0, [] { return std::string("CBP(0) fails"); });
        for (int d = 1; d <= r - 1; ++d)
            if (has_cbp(x, d)) rec.expect(has_cbp(x, d - 1), [&] { return at("CBP(d) without CBP(d - 1)", d); });
    }
    if (x.all_rational() && x.num_points() >= 2 && r >= 1) {
        rec.begin("cb_uniformity");
        rec.expect(a.flags.cayley_bacharach == is_uniform(x, 1, r - 1),
                   [] { return std::string("CB versus (1, r_X - 1)-uniform"); });
        rec.begin("uniform_ag_delta");
        const auto c = check_uniform_ag_delta(x, a.delta);
        rec.expect(c.holds, [&] { return "Delta = " + std::to_string(c.delta_invariant) + " for a uniform AG scheme"; });
    }
}

}  // namespace

std::vector<CheckResult> run_checks(const ZeroDimScheme& x, const Analysis& a, CheckDepth depth) {
    std::vector<CheckResult> out;
    Recorder rec(out);
    check_dedekind(x, a, rec);
    check_kaehler(x, a, rec);
    check_classification(x, a, rec);
    if (depth == CheckDepth::Full) check_separators(x, a, rec);
    return out;
}

std::vector<std::string> failed_checks(const std::vector<CheckResult>& results) {
    std::vector<std::string> names;
    for (const auto& c : results)
        if (!c.passed) names.push_back(c.name + ": " + c.detail);
    return names;
}

}  // namespace zds
