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

#ifndef ZDSCHEME_TESTS_SUPPORT_HPP
#define ZDSCHEME_TESTS_SUPPORT_HPP

#include <map>
#include <random>
#include <string>
#include <vector>

#include "zdscheme/io.hpp"
#include "zdscheme/scheme.hpp"

namespace zds::testing {

inline const ZeroDimScheme& fixture(const std::string& name) {
    static std::map<std::string, ZeroDimScheme> cache;
    auto it = cache.find(name);
    if (it == cache.end()) {
        SchemeInput in = load_fixture(name);
        it = cache.emplace(name, build_scheme(in.n, in.points)).first;
    }
    return it->second;
}

inline std::vector<int> ints(std::initializer_list<int> v) { return std::vector<int>(v); }

/// Distinct random rational points with integer affine coordinates in
/// [-c, c]^n.
inline std::vector<PointSpec> random_points(std::mt19937_64& rng, int n, int s, int c) {
    std::vector<std::vector<long>> chosen;
    std::vector<PointSpec> out;
    while (static_cast<int>(out.size()) < s) {
        std::vector<long> p;
        for (int i = 0; i < n; ++i) p.push_back(static_cast<long>(rng() % static_cast<unsigned long>(2 * c + 1)) - c);
        bool dup = false;
        for (const auto& q : chosen) dup = dup || q == p;
        if (dup) continue;
        chosen.push_back(p);
        std::vector<Rational> a;
        for (long x : p) a.emplace_back(x);
        out.push_back(PointSpec::from_affine(a));
    }
    return out;
}

}  // namespace zds::testing

#endif  // ZDSCHEME_TESTS_SUPPORT_HPP
