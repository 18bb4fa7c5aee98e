// Copyright 2026 The talex Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TALEX_TESTS_PROPERTIES_HPP
#define TALEX_TESTS_PROPERTIES_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace props {

inline constexpr std::uint64_t default_seed = 20260101;
inline constexpr int default_cases = 200;

struct SuiteResult {
    std::string name;
    int cases = 0;
    int failures = 0;
    std::string first_failure;
};

SuiteResult fox_identity(std::uint64_t seed = default_seed, int cases = default_cases);
SuiteResult ring_axioms(std::uint64_t seed = default_seed, int cases = default_cases);
SuiteResult to_xy_round_trip(std::uint64_t seed = default_seed, int cases = default_cases);
SuiteResult det_at_minus_one(std::uint64_t seed = default_seed, int cases = default_cases);
SuiteResult resultant_gcd(std::uint64_t seed = default_seed, int cases = default_cases);

std::vector<SuiteResult> all_suites(std::uint64_t seed = default_seed, int cases = default_cases);

} // namespace props

#endif
