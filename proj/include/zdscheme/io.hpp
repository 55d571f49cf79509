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

#ifndef ZDSCHEME_IO_HPP
#define ZDSCHEME_IO_HPP

#include <string>
#include <vector>

#include "zdscheme/scheme.hpp"

namespace zds {

struct SchemeInput {
    std::string name;  // optional, empty for plain scheme files
    int n = 0;
    std::vector<PointSpec> points;
};

/// Parses {"n": int, "points": [{"coords": [...]} | {"maximal_ideal": [...]}]}.
/// Throws ParseError.
SchemeInput parse_scheme_json(const std::string& text);
SchemeInput load_scheme_file(const std::string& path);
std::string scheme_input_to_json(const SchemeInput& input);

/// Names of the bundled fixtures.
const std::vector<std::string>& fixture_names();
/// Directory holding the bundled fixtures: $ZDSCHEME_FIXTURE_DIR if set,
/// else the source tree location recorded at build time.
std::string default_fixture_dir();
/// Throws PreconditionError for an unknown name.
SchemeInput load_fixture(const std::string& name, const std::string& dir = default_fixture_dir());

}  // namespace zds

#endif  // ZDSCHEME_IO_HPP
