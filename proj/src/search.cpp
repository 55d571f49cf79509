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

#include "zdscheme/search.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <thread>

#include "zdscheme/dedekind.hpp"
#include "zdscheme/errors.hpp"
#include "zdscheme/kaehler.hpp"

namespace zds {

using nlohmann::ordered_json;

std::uint64_t SplitMix64::next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
    // reject the top partial block of the 64-bit range
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t v;
    do v = next();
    while (v >= limit);
    return v % bound;
}

long long SplitMix64::uniform(long long lo, long long hi) {
    return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) {
    SplitMix64 a(seed);
    SplitMix64 b(a.next() ^ (trial * 0xd1b54a32d192ed03ULL));
    return b.next();
}

void validate(const SearchConfig& c) {
    if (c.n < 1) throw PreconditionError("search dimension must be at least 1");
    if (c.min_points < 1 || c.min_points > c.max_points)
        throw PreconditionError("point range " + std::to_string(c.min_points) + ".." + std::to_string(c.max_points) +
                                " is empty or starts below 1");
    if (c.coord_range < 0) throw PreconditionError("coordinate range must be -C..C with C >= 0");
    if (c.trials < 0) throw PreconditionError("trial count must be nonnegative");
    if (c.jobs < 1) throw PreconditionError("jobs must be at least 1");
    const double grid = std::pow(2.0 * c.coord_range + 1.0, c.n);
    if (static_cast<double>(c.max_points) > grid)
        throw PreconditionError("cannot place " + std::to_string(c.max_points) + " distinct points on a grid of " +
                                std::to_string(static_cast<long long>(grid)));
}

SchemeInput sample_trial(const SearchConfig& c, int trial, int* resamples) {
    SplitMix64 rng(trial_seed(c.seed, static_cast<std::uint64_t>(trial)));
    const int s = static_cast<int>(rng.uniform(c.min_points, c.max_points));
    SchemeInput in;
    in.name = "search-seed" + std::to_string(c.seed) + "-trial" + std::to_string(trial);
    in.n = c.n;
    std::set<std::vector<long long>> seen;
    int redraws = 0;
    while (static_cast<int>(in.points.size()) < s) {
        std::vector<long long> p;
        for (int k = 0; k < c.n; ++k) p.push_back(rng.uniform(-c.coord_range, c.coord_range));
        if (!seen.insert(p).second) {
            ++redraws;
            continue;
        }
        PointSpec entry;
        entry.coords.push_back("1");
        for (long long v : p) entry.coords.push_back(std::to_string(v));
        in.points.push_back(std::move(entry));
    }
    if (resamples) *resamples = redraws;
    return in;
}

TrialOutcome run_trial(const SearchConfig& c, int trial) {
    TrialOutcome t;
    t.trial = trial;
    t.input = sample_trial(c, trial, &t.resamples);
    const auto x = build_scheme(t.input.n, t.input.points);
    const int r = x.regularity_index();
    const auto delta = dedekind_different(x, complementary_module(x));
    const auto theta = kaehler_different(x);
    const auto cmp = compare_differents(x, theta, delta);
    t.equal = cmp.kind == DifferentComparison::Equal;
    t.comparison = to_string(cmp.kind);
    t.first_disagreement = cmp.first_disagreement;
    t.hf_delta = delta.hf_values(0, 2 * r);
    t.hf_kaehler = theta.family.hf_values(0, theta.bound);
    return t;
}

namespace {

std::string point_key(const SchemeInput& in) {
    std::string s;
    for (const auto& p : in.points) {
        s += "(";
        for (size_t k = 0; k < p.coords.size(); ++k) s += (k ? ":" : "") + p.coords[k];
        s += ")";
    }
    return s;
}

}  // namespace

SearchSummary run_search(const SearchConfig& c) {
    validate(c);
    SearchSummary sum;
    sum.config = c;
    sum.trials = c.trials;
    std::vector<TrialOutcome> outcomes(static_cast<size_t>(c.trials));
    std::vector<std::exception_ptr> errors(static_cast<size_t>(c.trials));
    std::atomic<int> next{0};
    auto worker = [&] {
        for (int t = next++; t < c.trials; t = next++) {
            try {
                outcomes[static_cast<size_t>(t)] = run_trial(c, t);
            } catch (...) {
                errors[static_cast<size_t>(t)] = std::current_exception();
            }
        }
    };
    const int jobs = std::min(c.jobs, std::max(c.trials, 1));
    std::vector<std::thread> pool;
    for (int k = 1; k < jobs; ++k) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);

    for (auto& t : outcomes) {
        sum.duplicate_resamples += t.resamples;
        if (t.equal) {
            ++sum.agreements;
            continue;
        }
        ++sum.disagreements;
        if (!c.reproducer_dir.empty()) {
            std::filesystem::create_directories(c.reproducer_dir);
            t.reproducer = (std::filesystem::path(c.reproducer_dir) / (t.input.name + ".json")).string();
            std::ofstream out(t.reproducer);
            if (!out) throw PreconditionError("cannot write reproducer " + t.reproducer);
            out << scheme_input_to_json(t.input);
        }
        sum.counterexamples.push_back(std::move(t));
    }
    std::sort(sum.counterexamples.begin(), sum.counterexamples.end(), [](const auto& a, const auto& b) {
        const auto ka = point_key(a.input);
        const auto kb = point_key(b.input);
        return ka != kb ? ka < kb : a.trial < b.trial;
    });
    return sum;
}

ordered_json summary_to_json(const SearchSummary& s) {
    ordered_json j;
    j["config"] = {{"n", s.config.n},
                   {"points", {s.config.min_points, s.config.max_points}},
                   {"coord_range", s.config.coord_range},
                   {"trials", s.config.trials},
                   {"seed", s.config.seed}};
    j["trials"] = s.trials;
    j["agreements"] = s.agreements;
    j["disagreements"] = s.disagreements;
    j["duplicate_resamples"] = s.duplicate_resamples;
    j["counterexamples"] = ordered_json::array();
    for (const auto& t : s.counterexamples) {
        ordered_json p = ordered_json::array();
        for (const auto& q : t.input.points) p.push_back(q.coords);
        j["counterexamples"].push_back({{"trial", t.trial},
                                        {"points", p},
                                        {"comparison", t.comparison},
                                        {"first_disagreement_degree", t.first_disagreement},
                                        {"hf_delta", t.hf_delta},
                                        {"hf_kaehler", t.hf_kaehler},
                                        {"reproducer", t.reproducer.empty() ? ordered_json(nullptr)
                                                                            : ordered_json(t.reproducer)}});
    }
    return j;
}

std::string render_summary(const SearchSummary& s) {
    std::ostringstream out;
    out << "search in P^" << s.config.n << ": " << s.config.min_points << ".." << s.config.max_points
        << " points, coordinates in [-" << s.config.coord_range << ", " << s.config.coord_range << "], seed "
        << s.config.seed << "\n";
    out << "trials " << s.trials << ", delta = theta in " << s.agreements << ", disagreements " << s.disagreements
        << ", duplicate redraws " << s.duplicate_resamples << "\n";
    for (const auto& t : s.counterexamples) {
        out << "  trial " << t.trial << " " << point_key(t.input) << ": " << t.comparison << " from degree "
            << t.first_disagreement;
        if (!t.reproducer.empty()) out << " -> " << t.reproducer;
        out << "\n";
    }
    return out.str();
}

}  // namespace zds
