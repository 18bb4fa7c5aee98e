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

#ifndef TALEX_CHARVARIETY_HPP
#define TALEX_CHARVARIETY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "talex/twisted.hpp"

namespace talex {

struct SolveResult {
    /// Res_y vanished: the curves share a component.
    bool shared_component = false;
    UPoly resultant;
    std::vector<CharacterPoint> points;
};

/// Common zeros of phi and g. phi must have a unit leading y-coefficient.
SolveResult solve_system(const XYPoly &phi, const XYPoly &g, double tol = default_tol);

/// Points closer than this are merged by solve_system.
double merge_radius(double tol);

struct MonicPoint {
    CharacterPoint point;
    int leading_index = 0;
    Complex leading_value;
};

enum class MonicStatus { FiniteSet, WholeComponentMonic };

std::string_view to_string(MonicStatus s) noexcept;

struct MonicReport {
    MonicStatus status = MonicStatus::FiniteSet;
    std::vector<MonicPoint> points;
    std::optional<long> bound;
    /// "whole-variety" or "component" (with a factor).
    std::string scope = "whole-variety";
    /// psi_top vanished on a whole component, so the candidate list may miss points there.
    bool incomplete = false;
};

/// Monic characters. With a factor, the search is restricted to the curve
/// factor = 0, which must divide phi.
MonicReport monic_characters(const KnotPresentation &p, double tol = default_tol,
                             const std::optional<XYPoly> &factor = std::nullopt);
MonicReport monic_characters(const TwistedAlex &ta, double tol = default_tol,
                             const std::optional<XYPoly> &factor = std::nullopt);

/// Characters where deg Delta_{K,chi} < 4g - 2.
std::vector<CharacterPoint> degree_drop_locus(const KnotPresentation &p, double tol = default_tol);
std::vector<CharacterPoint> degree_drop_locus(const TwistedAlex &ta, double tol = default_tol);

struct SliceEntry {
    CharacterPoint point;
    int degree = 0;
    Complex leading;
    bool monic = false;
};

struct MetabelianReport {
    int expected_degree = 0;
    std::vector<SliceEntry> entries;
    bool all_full_degree() const;
};

/// Characters on x = 0 (s = i).
MetabelianReport metabelian_slice(const KnotPresentation &p, double tol = default_tol);
MetabelianReport metabelian_slice(const TwistedAlex &ta, double tol = default_tol);

/// Bound on the number of monic characters of J(k, 2q). Throws
/// FiberedOrExcluded for k = 2q and for fibered members.
long bezout_bound(int k, int q);

/// Fibered members of J(k, 2q): J(1, 2q), J(3, 2q) with q > 0 and J(2, +-2).
bool is_fibered_member(int k, int q);

struct PrimeVerdict {
    long p = 0;
    long c_mod_p = 0;
    long c2_mod_p = 0;
    bool passes = false;
};

struct CriterionReport {
    long alpha = 0;
    Integer c;
    std::vector<PrimeVerdict> primes;
    bool overall = false;
};

/// True iff some odd prime p | alpha has c != 0 and c^2 != +-1 mod p, where c
/// is the leading coefficient of delta.
CriterionReport finiteness_criterion(long alpha, const MPoly &delta);

enum class FiberedVerdict { ConsistentWithFibered, NonfiberedCertificate };

std::string_view to_string(FiberedVerdict v) noexcept;

struct FiberedReport {
    std::optional<int> genus_estimate;
    FiberedVerdict verdict = FiberedVerdict::ConsistentWithFibered;
    std::optional<SliceEntry> certificate;
    int points_checked = 0;
    /// Degree -> count over sampled points.
    std::map<int, int> degree_histogram;
    ClassicalInvariants classical;
    /// Agreement of the sampled verdict and genus with the Alexander polynomial.
    bool consistent_with_classical = false;
};

/// Samples x uniformly from the disk |x| <= 3 with a seeded generator and
/// inspects every point over it. threads = 0 picks the hardware default.
FiberedReport fibered_and_genus_detect(const KnotPresentation &p, int samples, std::uint64_t seed,
                                       double tol = default_tol, unsigned threads = 0);

} // namespace talex

#endif
