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

#include "zdscheme/io.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "zdscheme/errors.hpp"

#ifndef ZDSCHEME_FIXTURE_DIR
#define ZDSCHEME_FIXTURE_DIR "fixtures"
#endif

namespace zds {

using nlohmann::json;

namespace {

std::vector<std::string> string_list(const json& j, const std::string& what) {
    if (!j.is_array() || j.empty()) throw ParseError("\"" + what + "\" must be a non-empty array");
    std::vector<std::string> out;
    for (const auto& e : j) {
        if (e.is_string())
            out.push_back(e.get<std::string>());
        else if (e.is_number_integer())
            out.push_back(std::to_string(e.get<long long>()));
        else
            throw ParseError("\"" + what + "\" entries must be strings");
    }
    return out;
}

}  // namespace

SchemeInput parse_scheme_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("scheme file must contain a JSON object");
    SchemeInput in;
    if (j.contains("name")) {
        if (!j["name"].is_string()) throw ParseError("\"name\" must be a string");
        in.name = j["name"].get<std::string>();
    }
    if (!j.contains("n") || !j["n"].is_number_integer()) throw ParseError("missing integer field \"n\"");
    in.n = j["n"].get<int>();
    if (in.n < 1) throw ParseError("\"n\" must be at least 1");
    if (!j.contains("points") || !j["points"].is_array() || j["points"].empty())
        throw ParseError("missing non-empty array \"points\"");
    for (const auto& p : j["points"]) {
        if (!p.is_object()) throw ParseError("each point must be a JSON object");
        const bool c = p.contains("coords"), m = p.contains("maximal_ideal");
        if (c == m) throw ParseError("a point needs exactly one of \"coords\" or \"maximal_ideal\"");
        PointSpec entry;
        if (c) {
            entry.coords = string_list(p["coords"], "coords");
            if (static_cast<int>(entry.coords.size()) != in.n + 1)
                throw ParseError("point has " + std::to_string(entry.coords.size()) + " coordinates, expected " +
                                 std::to_string(in.n + 1));
        } else {
            entry.maximal_ideal = string_list(p["maximal_ideal"], "maximal_ideal");
        }
        in.points.push_back(std::move(entry));
    }
    return in;
}

SchemeInput load_scheme_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open scheme file '" + path + "'");
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_scheme_json(ss.str());
}

std::string scheme_input_to_json(const SchemeInput& input) {
    json j;
    if (!input.name.empty()) j["name"] = input.name;
    j["n"] = input.n;
    j["points"] = json::array();
    for (const auto& p : input.points) {
        if (p.has_coords())
            j["points"].push_back({{"coords", p.coords}});
        else
            j["points"].push_back({{"maximal_ideal", p.maximal_ideal}});
    }
    return j.dump(2) + "\n";
}

const std::vector<std::string>& fixture_names() {
    static const std::vector<std::string> names{"ex2.6ci", "ex2.9",  "ex2.10", "ex3.4",  "ex3.4y",
                                                "ex3.7y",  "ex3.11", "ex5.07", "ex5.07y"};
    return names;
}

std::string default_fixture_dir() {
    if (const char* env = std::getenv("ZDSCHEME_FIXTURE_DIR"); env && *env) return env;
    return ZDSCHEME_FIXTURE_DIR;
}

SchemeInput load_fixture(const std::string& name, const std::string& dir) {
    const auto& names = fixture_names();
    if (std::find(names.begin(), names.end(), name) == names.end()) {
        std::string known;
        for (const auto& n : names) known += (known.empty() ? "" : ", ") + n;
        throw PreconditionError("unknown fixture '" + name + "' (known: " + known + ")");
    }
    SchemeInput in = load_scheme_file(dir + "/" + name + ".json");
    if (in.name.empty()) in.name = name;
    return in;
}

}  // namespace zds
