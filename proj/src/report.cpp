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

#include "zdscheme/report.hpp"

#include <sstream>

#include "zdscheme/errors.hpp"

namespace zds {

using nlohmann::ordered_json;

namespace {

const VariableNames kNames{"x", 0};

std::vector<int> hf_range(const GradedSubspaceFamily& f, int lo, int hi) { return f.hf_values(lo, hi); }

template <typename T>
T field(const ordered_json& j, const char* key) {
    if (!j.contains(key)) throw ParseError(std::string("report field \"") + key + "\" missing");
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("report field \"") + key + "\": " + e.what());
    }
}

template <typename T>
std::optional<T> optional_field(const ordered_json& j, const char* key) {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    return field<T>(j, key);
}

template <typename T>
ordered_json or_null(const std::optional<T>& v) {
    return v ? ordered_json(*v) : ordered_json(nullptr);
}

std::string join(const std::vector<int>& v) {
    std::string s;
    for (size_t k = 0; k < v.size(); ++k) s += (k ? " " : "") + std::to_string(v[k]);
    return s;
}

}  // namespace

bool AnalysisReport::same_content(const AnalysisReport& other) const {
    ordered_json a = report_to_json(*this);
    ordered_json b = report_to_json(other);
    a.erase("timing_ms");
    b.erase("timing_ms");
    return a == b;
}

AnalysisReport make_report(const SchemeInput& input, const ZeroDimScheme& x, const Analysis& a,
                           const std::vector<CheckResult>& checks, long long timing_ms) {
    AnalysisReport r;
    const int rx = x.regularity_index();
    r.timing_ms = timing_ms;
    r.input = input;
    r.degree = x.degree();
    r.hf_x = x.hilbert_function().values();
    r.r_x = rx;
    for (size_t j = 0; j < x.num_points(); ++j) r.kappa.push_back(static_cast<int>(x.kappa(j)));

    r.point_degrees = a.point_degrees;
    const auto& order = x.groebner_basis().order();
    for (const auto& s : a.separators) {
        SeparatorReport sr;
        sr.point = static_cast<int>(s.point);
        sr.kappa = static_cast<int>(s.kappa);
        sr.degrees = s.degrees;
        for (const auto& f : s.minimal) sr.minimal.push_back(f.to_string(order, kNames));
        r.separators.push_back(std::move(sr));
    }
    r.cbp_max = a.cbp_max;
    r.cayley_bacharach = a.flags.cayley_bacharach;

    r.hf_delta = hf_range(a.delta, 0, 2 * rx);
    r.hf_conductor = hf_range(a.conductor, 0, rx);
    r.hf_trace_ideal = hf_range(a.trace, 0, 2 * rx);
    for (int i = 0; i <= rx; ++i) r.hf_complementary.push_back(a.complementary.hf(i - rx));
    for (const auto& g : family_generators(x, a.delta, 2 * rx)) r.delta_generators.push_back(g.to_string(order, kNames));
    r.ri_delta = a.delta.regularity_index();
    r.minimal_different = a.flags.minimal_different;
    r.dedekind_formula_holds = a.dedekind_formula;
    r.sandwich_holds = a.sandwich;

    if (a.kaehler) {
        r.hf_kaehler = hf_range(a.kaehler->family, 0, a.kaehler->bound);
        if (a.kaehler->stabilized) r.kaehler_stabilization_degree = a.kaehler->stabilization_degree;
    }
    if (a.comparison) {
        r.differents_equal = a.comparison->kind == DifferentComparison::Equal;
        r.differents_comparison = to_string(a.comparison->kind);
        if (a.comparison->first_disagreement >= 0) r.first_disagreement_degree = a.comparison->first_disagreement;
    }

    r.delta_invariant = a.flags.delta_invariant;
    r.arithmetically_gorenstein = a.flags.arithmetically_gorenstein;
    r.level = a.flags.level;
    r.nearly_gorenstein = a.flags.nearly_gorenstein;
    r.almost_gorenstein = a.flags.almost_gorenstein;
    r.uniformity = a.flags.uniformity;

    for (const auto& c : checks) r.checks_passed += c.passed;
    r.checks_failed = failed_checks(checks);
    return r;
}

ordered_json report_to_json(const AnalysisReport& r) {
    ordered_json j;
    j["tool_version"] = r.tool_version;
    j["timing_ms"] = r.timing_ms;
    ordered_json scheme;
    if (!r.input.name.empty()) scheme["name"] = r.input.name;
    scheme["n"] = r.input.n;
    scheme["s"] = r.input.points.size();
    scheme["deg"] = r.degree;
    scheme["points"] = ordered_json::array();
    for (const auto& p : r.input.points) {
        if (p.has_coords())
            scheme["points"].push_back({{"coords", p.coords}});
        else
            scheme["points"].push_back({{"maximal_ideal", p.maximal_ideal}});
    }
    j["scheme"] = scheme;

    j["hf_x"] = r.hf_x;
    j["r_x"] = r.r_x;
    j["kappa"] = r.kappa;
    j["point_degrees"] = r.point_degrees;
    j["separators"] = ordered_json::array();
    for (const auto& s : r.separators)
        j["separators"].push_back(
            {{"point", s.point}, {"kappa", s.kappa}, {"degrees", s.degrees}, {"minimal", s.minimal}});
    j["cbp_max"] = r.cbp_max;
    j["cayley_bacharach"] = r.cayley_bacharach;

    j["hf_delta"] = r.hf_delta;
    j["ri_delta"] = r.ri_delta;
    j["delta_generators"] = r.delta_generators;
    j["minimal_different"] = r.minimal_different;
    j["hf_conductor"] = r.hf_conductor;
    j["hf_trace_ideal"] = r.hf_trace_ideal;
    j["hf_complementary"] = r.hf_complementary;
    j["dedekind_formula_holds"] = r.dedekind_formula_holds;
    j["sandwich_holds"] = r.sandwich_holds;

    j["hf_kaehler"] = or_null(r.hf_kaehler);
    j["kaehler_stabilization_degree"] = or_null(r.kaehler_stabilization_degree);
    j["differents_equal"] = or_null(r.differents_equal);
    j["differents_comparison"] = or_null(r.differents_comparison);
    j["first_disagreement_degree"] = or_null(r.first_disagreement_degree);

    j["delta_invariant"] = r.delta_invariant;
    j["arithmetically_gorenstein"] = r.arithmetically_gorenstein;
    j["level"] = r.level;
    j["nearly_gorenstein"] = r.nearly_gorenstein;
    j["almost_gorenstein"] = r.almost_gorenstein;
    j["uniformity"] = ordered_json::array();
    for (const auto& u : r.uniformity) j["uniformity"].push_back({{"i", u.i}, {"j", u.j}, {"holds", u.holds}});

    j["checks_passed"] = r.checks_passed;
    j["checks_failed"] = r.checks_failed;
    return j;
}

AnalysisReport report_from_json(const ordered_json& j) {
    if (!j.is_object()) throw ParseError("report must be a JSON object");
    AnalysisReport r;
    r.tool_version = field<std::string>(j, "tool_version");
    r.timing_ms = field<long long>(j, "timing_ms");
    const auto scheme = field<ordered_json>(j, "scheme");
    r.input.name = scheme.value("name", "");
    r.input.n = field<int>(scheme, "n");
    r.degree = field<size_t>(scheme, "deg");
    for (const auto& p : field<ordered_json>(scheme, "points")) {
        if (p.contains("coords"))
            r.input.points.push_back(PointSpec{field<std::vector<std::string>>(p, "coords"), {}});
        else
            r.input.points.push_back(PointSpec::from_ideal(field<std::vector<std::string>>(p, "maximal_ideal")));
    }
    if (field<size_t>(scheme, "s") != r.input.points.size()) throw ParseError("report: s disagrees with points");

    r.hf_x = field<std::vector<int>>(j, "hf_x");
    r.r_x = field<int>(j, "r_x");
    r.kappa = field<std::vector<int>>(j, "kappa");
    r.point_degrees = field<std::vector<int>>(j, "point_degrees");
    for (const auto& s : field<ordered_json>(j, "separators"))
        r.separators.push_back({field<int>(s, "point"), field<int>(s, "kappa"), field<std::vector<int>>(s, "degrees"),
                                field<std::vector<std::string>>(s, "minimal")});
    r.cbp_max = field<int>(j, "cbp_max");
    r.cayley_bacharach = field<bool>(j, "cayley_bacharach");

    r.hf_delta = field<std::vector<int>>(j, "hf_delta");
    r.ri_delta = field<int>(j, "ri_delta");
    r.delta_generators = field<std::vector<std::string>>(j, "delta_generators");
    r.minimal_different = field<bool>(j, "minimal_different");
    r.hf_conductor = field<std::vector<int>>(j, "hf_conductor");
    r.hf_trace_ideal = field<std::vector<int>>(j, "hf_trace_ideal");
    r.hf_complementary = field<std::vector<int>>(j, "hf_complementary");
    r.dedekind_formula_holds = field<bool>(j, "dedekind_formula_holds");
    r.sandwich_holds = field<bool>(j, "sandwich_holds");

    r.hf_kaehler = optional_field<std::vector<int>>(j, "hf_kaehler");
    r.kaehler_stabilization_degree = optional_field<int>(j, "kaehler_stabilization_degree");
    r.differents_equal = optional_field<bool>(j, "differents_equal");
    r.differents_comparison = optional_field<std::string>(j, "differents_comparison");
    r.first_disagreement_degree = optional_field<int>(j, "first_disagreement_degree");

    r.delta_invariant = field<int>(j, "delta_invariant");
    r.arithmetically_gorenstein = field<bool>(j, "arithmetically_gorenstein");
    r.level = field<bool>(j, "level");
    r.nearly_gorenstein = field<bool>(j, "nearly_gorenstein");
    r.almost_gorenstein = field<bool>(j, "almost_gorenstein");
    for (const auto& u : field<ordered_json>(j, "uniformity"))
        r.uniformity.push_back({field<int>(u, "i"), field<int>(u, "j"), field<bool>(u, "holds")});

    r.checks_passed = field<int>(j, "checks_passed");
    r.checks_failed = field<std::vector<std::string>>(j, "checks_failed");
    return r;
}

std::string render_text(const AnalysisReport& r) {
    std::ostringstream out;
    auto yes = [](bool b) { return b ? "yes" : "no"; };
    if (!r.input.name.empty()) out << "scheme " << r.input.name << "\n";
    out << "ambient P^" << r.input.n << ", " << r.input.points.size() << " points, degree " << r.degree << "\n";
    out << "HF_X            " << join(r.hf_x) << " ...   r_X = " << r.r_x << "\n";
    out << "point degrees   " << join(r.point_degrees) << "\n";
    out << "CBP(d) up to    d = " << r.cbp_max << "\n";
    out << "Cayley-Bacharach " << yes(r.cayley_bacharach) << "\n";
    out << "\n";
    out << "HF_delta        " << join(r.hf_delta) << " ...   ri = " << r.ri_delta << "\n";
    out << "HF_C(-r_X)      " << join(r.hf_complementary) << " ...\n";
    out << "HF_conductor    " << join(r.hf_conductor) << " ...\n";
    out << "HF_tr(C)        " << join(r.hf_trace_ideal) << " ...\n";
    out << "minimal different " << yes(r.minimal_different) << "\n";
    out << "Dedekind formula  " << yes(r.dedekind_formula_holds) << "\n";
    out << "F^2 in delta in F " << yes(r.sandwich_holds) << "\n";
    if (!r.delta_generators.empty()) {
        out << "delta generators\n";
        for (const auto& g : r.delta_generators) out << "  " << g << "\n";
    }
    out << "\n";
    if (r.hf_kaehler) {
        out << "HF_theta        " << join(*r.hf_kaehler) << "\n";
        if (r.differents_comparison) {
            out << "theta vs delta  " << *r.differents_comparison;
            if (r.first_disagreement_degree) out << " (first difference in degree " << *r.first_disagreement_degree << ")";
            out << "\n";
        }
    } else {
        out << "HF_theta        skipped (residue-field points)\n";
    }
    out << "\n";
    out << "Delta_X                   " << r.delta_invariant << "\n";
    out << "arithmetically Gorenstein " << yes(r.arithmetically_gorenstein) << "\n";
    out << "level                     " << yes(r.level) << "\n";
    out << "nearly Gorenstein         " << yes(r.nearly_gorenstein) << "\n";
    out << "almost Gorenstein         " << yes(r.almost_gorenstein) << "\n";
    for (const auto& u : r.uniformity)
        out << "(" << u.i << "," << u.j << ")-uniform: " << yes(u.holds) << "\n";
    out << "\n";
    out << "invariant checks: " << r.checks_passed << " passed, " << r.checks_failed.size() << " failed\n";
    for (const auto& f : r.checks_failed) out << "  FAILED " << f << "\n";
    out << "time " << r.timing_ms << " ms\n";
    return out.str();
}

}  // namespace zds
