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

#include "talex/presentations.hpp"

#include <charconv>
#include <cstdlib>
#include <numeric>

#include "talex/error.hpp"

namespace talex {

namespace {

long floor_div(long a, long b)
{
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

int parse_int(std::string_view text, std::string_view spec)
{
    int value = 0;
    const char *first = text.data();
    const char *last = first + text.size();
    if (!text.empty() && text.front() == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || first == last)
        throw Error(ErrorKind::Parse, "bad integer '" + std::string(text) + "' in knot spec \"" + std::string(spec) + "\"");
    return value;
}

std::pair<int, int> parse_pair(std::string_view body, std::string_view spec)
{
    auto comma = body.find(',');
    if (comma == std::string_view::npos)
        throw Error(ErrorKind::Parse, "expected two comma separated integers in \"" + std::string(spec) + "\"");
    return {parse_int(body.substr(0, comma), spec), parse_int(body.substr(comma + 1), spec)};
}

} // namespace

TwoBridgeParams TwoBridgeParams::make(int alpha, int beta)
{
    if (alpha <= 0 || alpha % 2 == 0)
        throw Error(ErrorKind::InvalidParams, "alpha must be odd and positive, got " + std::to_string(alpha));
    if (beta % 2 == 0) throw Error(ErrorKind::InvalidParams, "beta must be odd, got " + std::to_string(beta));
    if (beta <= -alpha || beta >= alpha)
        throw Error(ErrorKind::InvalidParams, "beta must lie strictly between -alpha and alpha");
    if (std::gcd(alpha, std::abs(beta)) != 1)
        throw Error(ErrorKind::InvalidParams, "alpha and beta must be coprime");
    return {alpha, beta};
}

JParams JParams::make(int k, int q)
{
    if (k <= 0) throw Error(ErrorKind::InvalidParams, "k must be positive, got " + std::to_string(k));
    if (q == 0) throw Error(ErrorKind::InvalidParams, "q = 0 gives the unknot");
    return {k, q};
}

KnotPresentation KnotPresentation::from_pivot(Word pivot, PresentationSource source)
{
    Word relator = pivot * Word::generator(Generator::a) * pivot.inverse() * Word::generator(Generator::b, -1);
    return KnotPresentation(std::move(pivot), std::move(relator), source);
}

std::string KnotPresentation::name() const
{
    if (auto *s = std::get_if<TwoBridgeParams>(&source_))
        return "K(" + std::to_string(s->alpha) + "," + std::to_string(s->beta) + ")";
    if (auto *j = std::get_if<JParams>(&source_))
        return "J(" + std::to_string(j->k) + "," + std::to_string(2 * j->q) + ")";
    return "W(" + pivot_.to_string() + ")";
}

KnotPresentation schubert_relator(const TwoBridgeParams &p)
{
    TwoBridgeParams v = TwoBridgeParams::make(p.alpha, p.beta);
    Word w;
    for (int i = 1; i < v.alpha; ++i) {
        long f = floor_div(static_cast<long>(i) * v.beta, v.alpha);
        int eps = (f % 2 == 0) ? 1 : -1;
        w = w * Word::generator(i % 2 == 1 ? Generator::a : Generator::b, eps);
    }
    return KnotPresentation::from_pivot(std::move(w), v);
}

Word j_base_word(int k)
{
    if (k <= 0) throw Error(ErrorKind::InvalidParams, "k must be positive");
    const int m = k / 2;
    Word out = Word::parse("bA").pow(m);
    if (k % 2 == 1) out = out * Word::parse("ba");
    return out * Word::parse("Ba").pow(m);
}

KnotPresentation j_relator(const JParams &p)
{
    JParams v = JParams::make(p.k, p.q);
    return KnotPresentation::from_pivot(j_base_word(v.k).pow(v.q), v);
}

TwoBridgeParams j_to_twobridge(int k, int l)
{
    if (k <= 0 || l == 0) throw Error(ErrorKind::InvalidParams, "J(k, l) needs k > 0 and l != 0");
    if ((static_cast<long>(k) * l) % 2 != 0) throw Error(ErrorKind::NotAKnot, "J(k, l) with kl odd is a two-component link");
    const long d = 1 - static_cast<long>(k) * l;
    const long alpha = std::labs(d);
    if (alpha == 1) throw Error(ErrorKind::Unknot, "J(" + std::to_string(k) + "," + std::to_string(l) + ") is the unknot");
    // beta/alpha = l/(1 - kl) mod 1
    long beta = (d > 0 ? l : -l) % alpha;
    if (beta < 0) beta += alpha;
    // beta and beta - alpha have opposite parity
    if (beta % 2 == 0) beta -= alpha;
    return TwoBridgeParams::make(static_cast<int>(alpha), static_cast<int>(beta));
}

MPoly alexander_poly(const KnotPresentation &p)
{
    MPoly d = abelianize(fox_derivative(p.relator(), Generator::a));
    if (d.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "Alexander polynomial vanished for " + p.name());
    auto [lo, hi] = t_range(d);
    d = d * t_pow(-lo);
    if (d.coeff(Monomial{.t = hi - lo}) < 0) d = -d;
    return d;
}

ClassicalInvariants classical_invariants(const MPoly &delta)
{
    auto [lo, hi] = t_range(delta);
    if ((hi - lo) % 2 != 0) throw Error(ErrorKind::OddSpan, "Alexander polynomial has odd exponent span");
    ClassicalInvariants out;
    out.genus = (hi - lo) / 2;
    out.leading_coeff = delta.coeff(Monomial{.t = hi});
    out.fibered = abs(out.leading_coeff) == 1;
    return out;
}

KnotPresentation parse_knot_spec(std::string_view spec)
{
    if (spec.size() < 2 || spec[1] != ':')
        throw Error(ErrorKind::Parse, "knot spec must look like K:a,b, J:k,l or W:word, got \"" + std::string(spec) + "\"");
    const std::string_view body = spec.substr(2);
    switch (spec[0]) {
    case 'K': {
        auto [a, b] = parse_pair(body, spec);
        return schubert_relator(TwoBridgeParams::make(a, b));
    }
    case 'J': {
        auto [k, l] = parse_pair(body, spec);
        if (l % 2 != 0) throw Error(ErrorKind::InvalidParams, "J:k,l needs l even");
        return j_relator(JParams::make(k, l / 2));
    }
    case 'W': return KnotPresentation::from_pivot(Word::parse(body));
    default:
        throw Error(ErrorKind::Parse, "unknown knot spec prefix in \"" + std::string(spec) + "\"");
    }
}

} // namespace talex
