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

#ifndef TALEX_SPARSE_POLY_HPP
#define TALEX_SPARSE_POLY_HPP

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace talex {

using Integer = mpz_class;

/// Exponent vector in (s, y, t). s and t are Laurent variables, y is ordinary.
struct Monomial {
    int s = 0;
    int y = 0;
    int t = 0;

    static constexpr std::size_t arity = 3;

    constexpr std::array<int, 3> exponents() const { return {s, y, t}; }
    static constexpr Monomial from_exponents(const std::array<int, 3> &e) { return {e[0], e[1], e[2]}; }
    constexpr int degree() const { return s + y + t; }

    friend constexpr Monomial operator*(Monomial a, Monomial b) { return {a.s + b.s, a.y + b.y, a.t + b.t}; }
    friend constexpr bool operator==(const Monomial &, const Monomial &) = default;
    // graded lexicographic on (t, y, s)
    friend constexpr std::strong_ordering operator<=>(const Monomial &a, const Monomial &b)
    {
        if (auto c = a.degree() <=> b.degree(); c != 0) return c;
        if (auto c = a.t <=> b.t; c != 0) return c;
        if (auto c = a.y <=> b.y; c != 0) return c;
        return a.s <=> b.s;
    }
};

/// Exponent pair in (x, y), both nonnegative.
struct XYMonomial {
    int x = 0;
    int y = 0;

    static constexpr std::size_t arity = 2;

    constexpr std::array<int, 2> exponents() const { return {x, y}; }
    static constexpr XYMonomial from_exponents(const std::array<int, 2> &e) { return {e[0], e[1]}; }
    constexpr int degree() const { return x + y; }

    friend constexpr XYMonomial operator*(XYMonomial a, XYMonomial b) { return {a.x + b.x, a.y + b.y}; }
    friend constexpr bool operator==(const XYMonomial &, const XYMonomial &) = default;
    friend constexpr std::strong_ordering operator<=>(const XYMonomial &a, const XYMonomial &b)
    {
        if (auto c = a.degree() <=> b.degree(); c != 0) return c;
        if (auto c = a.y <=> b.y; c != 0) return c;
        return a.x <=> b.x;
    }
};

namespace detail {

// Products whose exponent box is at most this many cells are accumulated in a
// dense buffer instead of an ordered map.
inline constexpr std::size_t dense_box_limit = std::size_t{1} << 21;

} // namespace detail

/// Sparse polynomial with exact integer coefficients. Terms are kept sorted by
/// the monomial order with no zero coefficients, so equal polynomials have
/// identical term vectors.
template <class Mono>
class SparsePoly {
public:
    using monomial_type = Mono;
    using Term = std::pair<Mono, Integer>;

    SparsePoly() = default;
    SparsePoly(long c) : SparsePoly(Mono{}, Integer(c)) {}
    SparsePoly(const Integer &c) : SparsePoly(Mono{}, c) {}
    SparsePoly(const Mono &m, const Integer &c)
    {
        if (c != 0) terms_.emplace_back(m, c);
    }

    static SparsePoly from_terms(std::vector<Term> terms)
    {
        std::sort(terms.begin(), terms.end(), [](const Term &a, const Term &b) { return a.first < b.first; });
        SparsePoly out;
        for (auto &term : terms) {
            if (!out.terms_.empty() && out.terms_.back().first == term.first) {
                out.terms_.back().second += term.second;
                if (out.terms_.back().second == 0) out.terms_.pop_back();
            } else if (term.second != 0) {
                out.terms_.push_back(std::move(term));
            }
        }
        return out;
    }

    const std::vector<Term> &terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].first == Mono{}); }
    Integer constant_term() const { return coeff(Mono{}); }

    Integer coeff(const Mono &m) const
    {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                                   [](const Term &a, const Mono &b) { return a.first < b; });
        if (it != terms_.end() && it->first == m) return it->second;
        return 0;
    }

    /// Componentwise minimum and maximum exponents; undefined on zero.
    std::pair<std::array<int, Mono::arity>, std::array<int, Mono::arity>> exponent_box() const
    {
        std::array<int, Mono::arity> lo, hi;
        lo.fill(std::numeric_limits<int>::max());
        hi.fill(std::numeric_limits<int>::min());
        for (const auto &[m, c] : terms_) {
            auto e = m.exponents();
            for (std::size_t i = 0; i < Mono::arity; ++i) {
                lo[i] = std::min(lo[i], e[i]);
                hi[i] = std::max(hi[i], e[i]);
            }
        }
        return {lo, hi};
    }

    template <class F>
    SparsePoly map_monomials(F &&f) const
    {
        std::vector<Term> out;
        out.reserve(terms_.size());
        for (const auto &[m, c] : terms_) out.emplace_back(f(m), c);
        return from_terms(std::move(out));
    }

    SparsePoly operator-() const
    {
        SparsePoly out = *this;
        for (auto &term : out.terms_) term.second = -term.second;
        return out;
    }

    SparsePoly &operator+=(const SparsePoly &o) { return *this = merge(*this, o, 1); }
    SparsePoly &operator-=(const SparsePoly &o) { return *this = merge(*this, o, -1); }
    SparsePoly &operator*=(const SparsePoly &o) { return *this = multiply(*this, o); }

    friend SparsePoly operator+(const SparsePoly &a, const SparsePoly &b) { return merge(a, b, 1); }
    friend SparsePoly operator-(const SparsePoly &a, const SparsePoly &b) { return merge(a, b, -1); }
    friend SparsePoly operator*(const SparsePoly &a, const SparsePoly &b) { return multiply(a, b); }
    friend bool operator==(const SparsePoly &a, const SparsePoly &b) { return a.terms_ == b.terms_; }

    SparsePoly scaled(const Mono &m, const Integer &c) const
    {
        if (c == 0) return {};
        SparsePoly out;
        out.terms_.reserve(terms_.size());
        // a monomial shift is order-preserving for graded lex
        for (const auto &[tm, tc] : terms_) out.terms_.emplace_back(tm * m, tc * c);
        return out;
    }

    SparsePoly pow(unsigned n) const
    {
        SparsePoly result(1);
        SparsePoly base = *this;
        while (n) {
            if (n & 1u) result *= base;
            n >>= 1u;
            if (n) base *= base;
        }
        return result;
    }

private:
    static SparsePoly merge(const SparsePoly &a, const SparsePoly &b, int sign)
    {
        SparsePoly out;
        out.terms_.reserve(a.terms_.size() + b.terms_.size());
        auto i = a.terms_.begin();
        auto j = b.terms_.begin();
        while (i != a.terms_.end() || j != b.terms_.end()) {
            if (j == b.terms_.end() || (i != a.terms_.end() && i->first < j->first)) {
                out.terms_.push_back(*i++);
            } else if (i == a.terms_.end() || j->first < i->first) {
                out.terms_.emplace_back(j->first, sign > 0 ? j->second : Integer(-j->second));
                ++j;
            } else {
                Integer c = sign > 0 ? Integer(i->second + j->second) : Integer(i->second - j->second);
                if (c != 0) out.terms_.emplace_back(i->first, std::move(c));
                ++i;
                ++j;
            }
        }
        return out;
    }

    static SparsePoly multiply(const SparsePoly &a, const SparsePoly &b)
    {
        if (a.is_zero() || b.is_zero()) return {};
        if (a.size() == 1) return b.scaled(a.terms_[0].first, a.terms_[0].second);
        if (b.size() == 1) return a.scaled(b.terms_[0].first, b.terms_[0].second);

        constexpr std::size_t N = Mono::arity;
        auto [alo, ahi] = a.exponent_box();
        auto [blo, bhi] = b.exponent_box();
        std::array<int, N> lo;
        std::array<std::size_t, N> extent;
        std::size_t volume = 1;
        bool dense = true;
        for (std::size_t i = 0; i < N; ++i) {
            lo[i] = alo[i] + blo[i];
            extent[i] = static_cast<std::size_t>(ahi[i] + bhi[i] - lo[i] + 1);
            if (volume > detail::dense_box_limit / extent[i]) dense = false;
            else volume *= extent[i];
        }
        // sparse products in a huge box are cheaper through the map
        if (dense && volume > 16 * a.size() * b.size()) dense = false;

        if (!dense) {
            std::map<Mono, Integer> acc;
            for (const auto &[am, ac] : a.terms_)
                for (const auto &[bm, bc] : b.terms_) {
                    auto &slot = acc[am * bm];
                    mpz_addmul(slot.get_mpz_t(), ac.get_mpz_t(), bc.get_mpz_t());
                }
            SparsePoly out;
            out.terms_.reserve(acc.size());
            for (auto &[m, c] : acc)
                if (c != 0) out.terms_.emplace_back(m, std::move(c));
            return out;
        }

        auto index_of = [&](const std::array<int, N> &e, const std::array<int, N> &base) {
            std::size_t idx = 0;
            for (std::size_t i = 0; i < N; ++i) idx = idx * extent[i] + static_cast<std::size_t>(e[i] - base[i]);
            return idx;
        };
        std::vector<std::size_t> aidx, bidx;
        aidx.reserve(a.size());
        bidx.reserve(b.size());
        for (const auto &[m, c] : a.terms_) aidx.push_back(index_of(m.exponents(), alo));
        for (const auto &[m, c] : b.terms_) bidx.push_back(index_of(m.exponents(), blo));
        // the box index is linear, so index(e_a + e_b - lo) = index(e_a - alo) + index(e_b - blo)

        std::vector<Integer> acc(volume);
        std::vector<char> touched(volume, 0);
        for (std::size_t i = 0; i < a.terms_.size(); ++i) {
            const auto *ac = a.terms_[i].second.get_mpz_t();
            for (std::size_t j = 0; j < b.terms_.size(); ++j) {
                std::size_t k = aidx[i] + bidx[j];
                mpz_addmul(acc[k].get_mpz_t(), ac, b.terms_[j].second.get_mpz_t());
                touched[k] = 1;
            }
        }
        std::vector<Term> out;
        for (std::size_t k = 0; k < volume; ++k) {
            if (!touched[k] || acc[k] == 0) continue;
            std::array<int, N> e;
            std::size_t rest = k;
            for (std::size_t i = N; i-- > 0;) {
                e[i] = static_cast<int>(rest % extent[i]) + lo[i];
                rest /= extent[i];
            }
            out.emplace_back(Mono::from_exponents(e), std::move(acc[k]));
        }
        SparsePoly result;
        std::sort(out.begin(), out.end(), [](const Term &x, const Term &y) { return x.first < y.first; });
        result.terms_ = std::move(out);
        return result;
    }

    std::vector<Term> terms_;
};

} // namespace talex

#endif
