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

// Acceptance run: one PASS/FAIL line per criterion.

#include <cstdio>
#include <filesystem>
#include <functional>
#include <sstream>

#include "oracle.hpp"
#include "zdscheme/analysis.hpp"
#include "zdscheme/checks.hpp"
#include "zdscheme/cli.hpp"
#include "zdscheme/search.hpp"

namespace zds {
namespace {

using testing::fixture;

class Criterion {
   public:
    template <typename A, typename B>
    void eq(const A& got, const B& want, const std::string& what) {
        if (!(got == want)) failures_.push_back(what + ": got " + show(got) + ", want " + show(want));
    }
    void yes(bool ok, const std::string& what) {
        if (!ok) failures_.push_back(what);
    }
    const std::vector<std::string>& failures() const { return failures_; }

   private:
    template <typename T>
    static std::string show(const T& v) {
        std::ostringstream s;
        if constexpr (std::is_same_v<T, std::vector<int>>) {
            for (size_t k = 0; k < v.size(); ++k) s << (k ? " " : "") << v[k];
        } else if constexpr (std::is_same_v<T, bool>) {
            s << (v ? "true" : "false");
        } else {
            s << v;
        }
        return s.str();
    }
    std::vector<std::string> failures_;
};

std::vector<int> hf(const GradedSubspaceFamily& f, int lo, int hi) { return f.hf_values(lo, hi); }
std::vector<int> hf(const ZeroDimScheme& x, int lo, int hi) {
    std::vector<int> v;
    for (int i = lo; i <= hi; ++i) v.push_back(x.hf(i));
    return v;
}
std::vector<int> ints(std::initializer_list<int> v) { return v; }

bool families_equal(const GradedSubspaceFamily& a, const GradedSubspaceFamily& b, int lo, int hi) {
    for (int i = lo; i <= hi; ++i)
        if (!(a.at(i) == b.at(i))) return false;
    return true;
}

void six_points(Criterion& c) {
    const auto& x = fixture("ex2.9");
    const auto a = analyze(x);
    c.eq(hf(x, 0, 3), ints({1, 3, 6, 6}), "HF_X");
    c.eq(x.regularity_index(), 2, "r_X");
    c.eq(hf(a.delta, 0, 5), ints({0, 0, 0, 0, 6, 6}), "HF_delta");
    c.yes(has_minimal_different(x, a.delta), "minimal different");
    c.eq(a.flags.minimal_different, true, "minimal_different flag");
    c.eq(a.flags.cayley_bacharach, true, "cayley_bacharach");
    c.yes(a.comparison && a.comparison->kind == DifferentComparison::Equal, "theta = delta");
    c.eq(hf(a.conductor, 0, 3), ints({0, 0, 6, 6}), "HF_F");
    c.yes(families_equal(ideal_product(x, a.conductor, a.conductor, 6), a.delta, 0, 6), "F^2 = delta");
}

void nine_points(Criterion& c) {
    const auto& x = fixture("ex2.10");
    const auto a = analyze(x);
    c.eq(hf(x, 0, 3), ints({1, 4, 9, 9}), "HF_X");
    c.yes(a.kaehler.has_value(), "theta computed");
    if (a.kaehler) c.eq(hf(a.kaehler->family, 0, 6), ints({0, 0, 0, 0, 0, 9, 9}), "HF_theta");
    c.eq(hf(a.delta, 0, 5), ints({0, 0, 0, 0, 9, 9}), "HF_delta");
    c.eq(a.flags.minimal_different, true, "minimal_different");
    c.yes(a.comparison && a.comparison->kind == DifferentComparison::KaehlerStrictlySmaller, "theta strictly in delta");
}

void eight_with_residue_fields(Criterion& c) {
    const auto& x = fixture("ex3.4");
    c.eq(hf(x, 0, 4), ints({1, 3, 6, 8, 8}), "HF_X");
    const std::vector<std::vector<int>> rows{{1, 3, 6, 7, 7}, {1, 3, 6, 7, 7}, {1, 3, 6, 7, 7},
                                             {1, 3, 6, 7, 7}, {1, 3, 6, 6, 6}, {1, 3, 5, 6, 6}};
    for (size_t j = 0; j < rows.size(); ++j)
        c.eq(hf(remove_point(x, j), 0, 4), rows[j], "HF of X without p" + std::to_string(j + 1));
    c.eq(is_cayley_bacharach(x), true, "X is CB");
    const auto y = remove_point(x, 3);
    c.eq(has_cbp(y, 0), true, "Y has CBP(0)");
    c.eq(has_cbp(y, 1), true, "Y has CBP(1)");
    c.eq(has_cbp(y, 2), false, "Y has CBP(2)");
    // Y keeps p1, p2, p3, p5, p6
    const std::vector<std::vector<int>> y_rows{
        {1, 3, 6, 6, 6}, {1, 3, 6, 6, 6}, {1, 3, 5, 6, 6}, {1, 3, 5, 5, 5}, {1, 3, 4, 5, 5}};
    const char* y_names[] = {"p1", "p2", "p3", "p5", "p6"};
    c.eq(hf(y, 0, 4), ints({1, 3, 6, 7, 7}), "HF_Y");
    for (size_t j = 0; j < y_rows.size(); ++j)
        c.eq(hf(remove_point(y, j), 0, 4), y_rows[j], std::string("HF of Y without ") + y_names[j]);
    c.eq(subscheme_ideal_component(y, 2, 2).dim(), size_t{1}, "dim (I_{Y without p3 / Y})_2");
    c.eq(subscheme_ideal_component(y, 4, 2).dim(), size_t{2}, "dim (I_{Y without p6 / Y})_2");
}

void six_with_residue_field(Criterion& c) {
    const auto& x = fixture("ex3.7y");
    const auto a = analyze(x);
    c.eq(x.degree(), size_t{6}, "deg");
    c.eq(hf(a.delta, 0, 5), ints({0, 0, 0, 0, 6, 6}), "HF_delta");
    c.eq(a.flags.minimal_different, true, "minimal_different");
    c.eq(a.flags.cayley_bacharach, true, "cayley_bacharach");
}

void eight_points(Criterion& c) {
    const auto& x = fixture("ex3.11");
    const auto a = analyze(x);
    c.eq(hf(x, 0, 5), ints({1, 3, 5, 7, 8, 8}), "HF_X");
    c.eq(x.regularity_index(), 4, "r_X");
    c.eq(hf(a.delta, 0, 9), ints({0, 0, 0, 0, 1, 3, 5, 7, 8, 8}), "HF_delta");
    c.eq(a.cbp_max, 2, "cbp_max");
    c.eq(a.flags.cayley_bacharach, false, "cayley_bacharach");
    c.eq(a.flags.arithmetically_gorenstein, false, "arithmetically_gorenstein");
    c.eq(has_cbp(x, 2), true, "CBP(2)");
    const auto ideal = subscheme_ideal_component(x, 3, 4);
    bool inside = ideal.dim() > 0;
    for (const auto& y : ideal.basis()) inside = inside && a.delta.at(6).contains(y);
    c.yes(inside, "x0^2 (I_{Y4/X})_4 in delta_6");
}

void seven_points(Criterion& c) {
    const auto& x = fixture("ex5.07");
    const auto a = analyze(x);
    c.eq(hf(x, 0, 4), ints({1, 3, 6, 7, 7}), "HF_X");
    c.eq(a.flags.delta_invariant, 1, "Delta_X");
    c.eq(hf(a.delta, 0, 7), ints({0, 0, 0, 0, 3, 6, 7, 7}), "HF_delta");
    std::vector<int> shifted;
    for (int i = 0; i <= 4; ++i) shifted.push_back(a.complementary.hf(i - 3));
    c.eq(shifted, ints({1, 4, 6, 7, 7}), "HF of C(-3)");
    c.eq(a.flags.nearly_gorenstein, true, "nearly_gorenstein");
    c.eq(a.flags.almost_gorenstein, true, "almost_gorenstein");
    c.eq(a.flags.level, false, "level");
    const auto& y = fixture("ex5.07y");
    const auto b = analyze(y);
    c.eq(hf(y, 0, 4), ints({1, 3, 6, 7, 7}), "HF of the variant");
    c.eq(b.flags.cayley_bacharach, false, "variant cayley_bacharach");
    c.eq(b.flags.arithmetically_gorenstein, false, "variant arithmetically_gorenstein");
}

void complete_intersection(Criterion& c) {
    const auto& x = fixture("ex2.6ci");
    c.eq(hf(x, 0, 6), ints({1, 2, 3, 4, 5, 6, 6}), "HF_X");
    const size_t p = 4;  // the point with residue field Q(i)
    c.eq(x.kappa(p), size_t{2}, "kappa of the non-rational point");
    const auto s = separator_set(x, p);
    c.eq(s.degrees, ints({4, 5}), "minimal separator degrees");
    if (s.minimal.size() == 2) {
        const Polynomial x1f1 = normal_form(Polynomial::variable(3, 1) * s.minimal[0], x.groebner_basis());
        const Subspace line = Subspace::span(x.degree(), {s.germs[1]});
        c.yes(line.contains(x.germ_homogeneous(x1f1)) && !x1f1.is_zero(), "f2* = x1 f1* up to scalar");
    }
    c.eq(analyze(x).flags.arithmetically_gorenstein, true, "arithmetically_gorenstein");
}

void property_suite(Criterion& c) {
    std::mt19937_64 rng(0x5eed2026);
    int schemes = 0;
    int violations = 0;
    for (int trial = 0; trial < 220; ++trial) {
        const int n = (trial % 3 == 2) ? 3 : 2;
        const int s = 2 + static_cast<int>(rng() % 9);
        const auto x = build_scheme(n, testing::random_points(rng, n, s, 5));
        for (const auto& f : failed_checks(run_checks(x, analyze(x), CheckDepth::Full))) {
            if (violations++ < 5) c.yes(false, "trial " + std::to_string(trial) + ": " + f);
        }
        ++schemes;
    }
    c.yes(schemes >= 200, "fewer than 200 schemes");
    c.eq(violations, 0, "violations");
    std::printf("  property suite: %d schemes, %d violations\n", schemes, violations);
}

void conjecture_search(Criterion& c) {
    SearchConfig cfg;
    cfg.n = 2;
    cfg.min_points = 2;
    cfg.max_points = 8;
    cfg.coord_range = 3;
    cfg.trials = 200;
    cfg.seed = 42;
    cfg.reproducer_dir = (std::filesystem::temp_directory_path() / "zdscheme_acceptance").string();
    std::filesystem::remove_all(cfg.reproducer_dir);
    const auto first = run_search(cfg);
    cfg.jobs = 4;
    const auto second = run_search(cfg);
    c.eq(summary_to_json(first).dump(), summary_to_json(second).dump(), "summary under a fixed seed");
    c.eq(first.agreements + first.disagreements, 200, "trial count");
    for (const auto& t : first.counterexamples) {
        const bool replayable = std::filesystem::exists(t.reproducer) && load_scheme_file(t.reproducer).points == t.input.points;
        c.yes(replayable, "reproducer for trial " + std::to_string(t.trial));
    }
    std::printf("  search: delta = theta in %d of %d trials, %d disagreements\n", first.agreements, first.trials,
                first.disagreements);
    std::filesystem::remove_all(cfg.reproducer_dir);
}

void oracle(Criterion& c) {
    std::mt19937_64 rng(1234);
    testing::Tally tally;
    for (int trial = 0; trial < 24; ++trial) {
        const int n = trial % 3 == 2 ? 3 : 2;
        const int s = 3 + static_cast<int>(rng() % 4);
        const auto pts = testing::random_affine(rng, n, s, trial % 2 == 0 ? 1 : 3);
        const auto mismatch = testing::cross_check(n, pts, rng, tally);
        c.yes(mismatch.empty(), "trial " + std::to_string(trial) + ": " + mismatch);
    }
    c.yes(tally.schemes >= 20, "fewer than 20 schemes");
    std::printf("  oracle: %d schemes, %d elements\n", tally.schemes, tally.elements);
}

}  // namespace
}  // namespace zds

int main() {
    using zds::Criterion;
    const std::vector<std::pair<const char*, std::function<void(Criterion&)>>> criteria{
        {"ex2.9: six points in P^2", zds::six_points},
        {"ex2.10: nine points in P^3", zds::nine_points},
        {"ex3.4: degree 8 with residue-field points", zds::eight_with_residue_fields},
        {"ex3.7y: degree 6 with a residue-field point", zds::six_with_residue_field},
        {"ex3.11: eight points, CBP(2) but not CB", zds::eight_points},
        {"ex5.07: almost Gorenstein seven points", zds::seven_points},
        {"ex2.6ci: complete intersection", zds::complete_intersection},
        {"property suite on random rational schemes", zds::property_suite},
        {"deterministic search for theta != delta in P^2", zds::conjecture_search},
        {"oracle cross-check of delta and F", zds::oracle},
    };
    int failed = 0;
    for (size_t k = 0; k < criteria.size(); ++k) {
        Criterion c;
        try {
            criteria[k].second(c);
        } catch (const std::exception& e) {
            c.yes(false, std::string("exception: ") + e.what());
        }
        const bool ok = c.failures().empty();
        failed += !ok;
        std::printf("%s criterion %zu: %s\n", ok ? "PASS" : "FAIL", k + 1, criteria[k].first);
        for (const auto& f : c.failures()) std::printf("    %s\n", f.c_str());
        std::fflush(stdout);
    }
    std::printf("%zu of %zu criteria passed\n", criteria.size() - static_cast<size_t>(failed), criteria.size());
    return failed == 0 ? 0 : 1;
}
