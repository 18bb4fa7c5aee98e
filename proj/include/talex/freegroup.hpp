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

#ifndef TALEX_FREEGROUP_HPP
#define TALEX_FREEGROUP_HPP

#include <compare>
#include <map>
#include <string>
#include <string_view>

#include "talex/polyring.hpp"

namespace talex {

enum class Generator : char { a = 'a', b = 'b' };

/// Freely reduced word in the free group on a, b. Letters are stored as text:
/// 'a', 'b' and their inverses 'A', 'B'.
class Word {
public:
    Word() = default;

    /// Parses the a/A/b/B syntax and reduces. Throws Parse on other characters.
    static Word parse(std::string_view text);
    static Word generator(Generator g, int exponent = 1);

    const std::string &letters() const noexcept { return letters_; }
    /// Text form; the identity prints as the empty string.
    std::string to_string() const { return letters_; }
    std::size_t length() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }

    int exponent_sum() const noexcept;
    Word inverse() const;
    /// Negative n raises the inverse.
    Word pow(int n) const;

    friend Word operator*(const Word &u, const Word &v);
    friend bool operator==(const Word &, const Word &) = default;
    friend std::strong_ordering operator<=>(const Word &x, const Word &y) { return x.letters_ <=> y.letters_; }

private:
    // appends with cancellation
    void push(char c);
    std::string letters_;
};

constexpr char inverse_letter(char c) noexcept { return c >= 'a' ? static_cast<char>(c - 32) : static_cast<char>(c + 32); }

/// Finite integer combination of words.
class GroupRingElt {
public:
    GroupRingElt() = default;
    GroupRingElt(const Word &w, const Integer &c = 1);

    const std::map<Word, Integer> &terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    void add(const Word &w, const Integer &c);
    GroupRingElt &operator+=(const GroupRingElt &o);
    GroupRingElt &operator-=(const GroupRingElt &o);
    friend GroupRingElt operator+(GroupRingElt x, const GroupRingElt &y) { return x += y; }
    friend GroupRingElt operator-(GroupRingElt x, const GroupRingElt &y) { return x -= y; }
    friend bool operator==(const GroupRingElt &, const GroupRingElt &) = default;

    std::string to_string() const;

private:
    std::map<Word, Integer> terms_;
};

namespace detail {
/// Group-ring product, used by the Fox product rule and its tests.
GroupRingElt multiply(const GroupRingElt &x, const GroupRingElt &y);
} // namespace detail

/// Free derivative d w / d g.
GroupRingElt fox_derivative(const Word &w, Generator g);

/// Sends every word to t^(exponent sum).
MPoly abelianize(const GroupRingElt &e);

} // namespace talex

#endif
