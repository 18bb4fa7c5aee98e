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

#include "talex/freegroup.hpp"

#include <algorithm>

#include "talex/error.hpp"

namespace talex {

void Word::push(char c)
{
    if (!letters_.empty() && letters_.back() == inverse_letter(c)) letters_.pop_back();
    else letters_.push_back(c);
}

Word Word::parse(std::string_view text)
{
    Word w;
    for (char c : text) {
        if (c != 'a' && c != 'A' && c != 'b' && c != 'B')
            throw Error(ErrorKind::Parse, std::string("invalid letter '") + c + "' in word \"" + std::string(text) + "\"");
        w.push(c);
    }
    return w;
}

Word Word::generator(Generator g, int exponent)
{
    Word w;
    char c = static_cast<char>(g);
    if (exponent < 0) c = inverse_letter(c);
    for (int i = 0; i < std::abs(exponent); ++i) w.letters_.push_back(c);
    return w;
}

int Word::exponent_sum() const noexcept
{
    int e = 0;
    for (char c : letters_) e += c >= 'a' ? 1 : -1;
    return e;
}

Word Word::inverse() const
{
    Word w;
    w.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back(inverse_letter(*it));
    return w;
}

Word Word::pow(int n) const
{
    const Word base = n < 0 ? inverse() : *this;
    Word out;
    for (int i = 0; i < std::abs(n); ++i) out = out * base;
    return out;
}

Word operator*(const Word &u, const Word &v)
{
    Word out = u;
    for (char c : v.letters_) out.push(c);
    return out;
}

GroupRingElt::GroupRingElt(const Word &w, const Integer &c)
{
    if (c != 0) terms_.emplace(w, c);
}

void GroupRingElt::add(const Word &w, const Integer &c)
{
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (inserted) return;
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

GroupRingElt &GroupRingElt::operator+=(const GroupRingElt &o)
{
    for (const auto &[w, c] : o.terms_) add(w, c);
    return *this;
}

GroupRingElt &GroupRingElt::operator-=(const GroupRingElt &o)
{
    for (const auto &[w, c] : o.terms_) add(w, -c);
    return *this;
}

std::string GroupRingElt::to_string() const
{
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto &[w, c] : terms_) {
        Integer mag = abs(c);
        if (first) out += c < 0 ? "-" : "";
        else out += c < 0 ? " - " : " + ";
        first = false;
        if (w.empty()) {
            out += mag.get_str();
            continue;
        }
        if (mag != 1) out += mag.get_str() + "*";
        out += w.letters();
    }
    return out;
}

namespace detail {

GroupRingElt multiply(const GroupRingElt &x, const GroupRingElt &y)
{
    GroupRingElt out;
    for (const auto &[u, c] : x.terms())
        for (const auto &[v, d] : y.terms()) out.add(u * v, c * d);
    return out;
}

} // namespace detail

GroupRingElt fox_derivative(const Word &w, Generator g)
{
    const char pos = static_cast<char>(g);
    const char neg = inverse_letter(pos);
    GroupRingElt out;
    Word prefix;
    for (char c : w.letters()) {
        if (c == pos) out.add(prefix, 1);
        prefix = prefix * Word::parse(std::string_view(&c, 1));
        if (c == neg) out.add(prefix, -1);
    }
    return out;
}

MPoly abelianize(const GroupRingElt &e)
{
    MPoly out;
    for (const auto &[w, c] : e.terms()) out += MPoly(Monomial{.t = w.exponent_sum()}, c);
    return out;
}

} // namespace talex
