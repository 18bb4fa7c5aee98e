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

#ifndef TALEX_RILEY_HPP
#define TALEX_RILEY_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "talex/mat2.hpp"
#include "talex/presentations.hpp"

namespace talex {

/// riley: D = [[s, 0], [2 - y, 1/s]], reducible locus y = 2.
/// shifted: D = [[s, 0], [-y, 1/s]], reducible locus y = 0.
enum class Convention { riley, shifted };

std::string_view to_string(Convention c) noexcept;
/// Throws Parse for anything but "riley" or "shifted".
Convention parse_convention(std::string_view text);

struct RepMatrices {
    Mat2 C;
    Mat2 D;
    Convention convention = Convention::riley;

    static RepMatrices make(Convention c);
    /// Image of a single letter a, A, b or B.
    const Mat2 &letter(char c) const;
    /// rho(w), t-free.
    Mat2 image(const Word &w) const;

private:
    Mat2 Cinv_;
    Mat2 Dinv_;
};

struct RileyPolynomial {
    MPoly sy_form;
    XYPoly xy_form;
    Convention convention = Convention::riley;
    std::string source;

    /// Throws NonUnitLeading if the leading y-coefficient is not +-1.
    RileyModulus modulus() const { return RileyModulus(xy_form); }
    SyModulus sy_modulus() const { return SyModulus(sy_form); }
};

/// phi = W11 + (1/s - s) W12 with W = rho(pivot).
RileyPolynomial riley_poly(const KnotPresentation &p, Convention c = Convention::riley);

/// Same polynomial expressed in the other convention.
RileyPolynomial convention_shift(const RileyPolynomial &r);

MPoly trace_poly(const Word &w, const RepMatrices &rep);
/// tr N^q from tr N for N in SL(2); negative q uses tr N^-q = tr N^q.
MPoly trace_power(const MPoly &tr, int q);

struct RecursionEntry {
    int q = 0;
    bool holds = false;
    /// True when equality holds with no unit factor.
    bool exact = false;
    /// lhs = unit_sign * s^unit_s_power * rhs when holds.
    int unit_sign = 1;
    int unit_s_power = 0;
    MPoly difference;
    int deg_phi = 0;
    int deg_prev = 0;
    int deg_trace = 0;
    bool degree_additive = false;
};

struct RecursionReport {
    int k = 0;
    Convention convention = Convention::shifted;
    std::vector<RecursionEntry> entries;
    bool all_hold() const;
};

/// Checks phi_{k,q} = tr(W_m) phi_{k,q-1} - phi_{k,q-2} for q = 2..q_max.
RecursionReport riley_recursion_check(int k, int q_max, Convention c = Convention::shifted);

/// phi(s, 2) in the Riley convention, phi(s, 0) in the shifted one.
MPoly reducible_specialization(const RileyPolynomial &r);

/// When a = unit * b for a unit +-s^j, returns (sign, j).
std::optional<std::pair<int, int>> unit_multiple(const MPoly &a, const MPoly &b);

} // namespace talex

#endif
