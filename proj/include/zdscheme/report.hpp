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

#ifndef ZDSCHEME_REPORT_HPP
#define ZDSCHEME_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "zdscheme/analysis.hpp"
#include "zdscheme/checks.hpp"
#include "zdscheme/io.hpp"

namespace zds {

inline constexpr const char* kToolVersion = "0.1.0";

struct SeparatorReport {
    int point = 0;
    int kappa = 1;
    std::vector<int> degrees;
    std::vector<std::string> minimal;

    bool operator==(const SeparatorReport&) const = default;
};

struct AnalysisReport {
    std::string tool_version = kToolVersion;
    long long timing_ms = 0;
    SchemeInput input;
    size_t degree = 0;

    std::vector<int> hf_x;  // 0..r_X
    int r_x = 0;
    std::vector<int> kappa;

    std::vector<int> point_degrees;
    std::vector<SeparatorReport> separators;
    int cbp_max = -1;
    bool cayley_bacharach = false;

    std::vector<int> hf_delta;          // 0..2 r_X
    std::vector<int> hf_conductor;      // 0..r_X
    std::vector<int> hf_trace_ideal;    // 0..2 r_X
    std::vector<int> hf_complementary;  // HF of C(-r_X) on 0..r_X
    std::vector<std::string> delta_generators;
    int ri_delta = 0;
    bool minimal_different = false;
    bool dedekind_formula_holds = false;
    bool sandwich_holds = false;

    std::optional<std::vector<int>> hf_kaehler;
    std::optional<int> kaehler_stabilization_degree;
    std::optional<bool> differents_equal;
    std::optional<std::string> differents_comparison;
    std::optional<int> first_disagreement_degree;

    int delta_invariant = 0;
    bool arithmetically_gorenstein = false;
    bool level = false;
    bool nearly_gorenstein = false;
    bool almost_gorenstein = false;
    std::vector<UniformityResult> uniformity;

    int checks_passed = 0;
    std::vector<std::string> checks_failed;

    /// Equality ignoring timing_ms.
    bool same_content(const AnalysisReport& other) const;
};

AnalysisReport make_report(const SchemeInput& input, const ZeroDimScheme& x, const Analysis& a,
                           const std::vector<CheckResult>& checks, long long timing_ms);

nlohmann::ordered_json report_to_json(const AnalysisReport& r);
/// Throws ParseError on missing or mistyped fields.
AnalysisReport report_from_json(const nlohmann::ordered_json& j);
std::string render_text(const AnalysisReport& r);

}  // namespace zds

#endif  // ZDSCHEME_REPORT_HPP
