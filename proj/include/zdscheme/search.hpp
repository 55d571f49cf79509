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

#ifndef ZDSCHEME_SEARCH_HPP
#define ZDSCHEME_SEARCH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "zdscheme/io.hpp"

namespace zds {

/// splitmix64: stable, seedable, cheap to split into per-trial streams.
class SplitMix64 {
   public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();
    /// Uniform in [0, bound) without modulo bias; bound > 0.
    std::uint64_t below(std::uint64_t bound);
    /// Uniform in [lo, hi].
    long long uniform(long long lo, long long hi);

   private:
    std::uint64_t state_;
};

/// Seed of the stream used by one trial.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial);

struct SearchConfig {
    int n = 2;
    int min_points = 2;
    int max_points = 8;
    int coord_range = 3;
    int trials = 200;
    std::uint64_t seed = 42;
    int jobs = 1;
    /// Where reproducers of disagreements go; empty disables writing.
    std::string reproducer_dir;
};

struct TrialOutcome {
    int trial = 0;
    SchemeInput input;
    /// Redraws caused by duplicate points.
    int resamples = 0;
    bool equal = true;
    std::string comparison;
    int first_disagreement = -1;
    std::vector<int> hf_delta;
    std::vector<int> hf_kaehler;
    std::string reproducer;
};

struct SearchSummary {
    SearchConfig config;
    int trials = 0;
    int agreements = 0;
    int disagreements = 0;
    int duplicate_resamples = 0;
    /// Sorted by the printed point list, then by trial.
    std::vector<TrialOutcome> counterexamples;
};

/// Throws PreconditionError for empty or impossible ranges.
void validate(const SearchConfig& config);

/// The point set of one trial; depends only on (config, trial).
SchemeInput sample_trial(const SearchConfig& config, int trial, int* resamples = nullptr);

/// Runs one trial: builds the scheme and compares the two differents.
TrialOutcome run_trial(const SearchConfig& config, int trial);

SearchSummary run_search(const SearchConfig& config);

nlohmann::ordered_json summary_to_json(const SearchSummary& s);
std::string render_summary(const SearchSummary& s);

}  // namespace zds

#endif  // ZDSCHEME_SEARCH_HPP
