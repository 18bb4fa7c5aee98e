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

#ifndef TALEX_PRESENTATIONS_HPP
#define TALEX_PRESENTATIONS_HPP

#include <string>
#include <string_view>
#include <variant>

#include "talex/freegroup.hpp"

namespace talex {

/// Schubert normal form parameters: alpha odd positive, beta odd, coprime,
/// -alpha < beta < alpha.
struct TwoBridgeParams {
    int alpha = 3;
    int beta = 1;

    /// Throws InvalidParams when the invariants fail.
    static TwoBridgeParams make(int alpha, int beta);
    friend bool operator==(const TwoBridgeParams &, const TwoBridgeParams &) = default;
};

/// Double twist knot J(k, 2q).
struct JParams {
    int k = 2;
    int q = 1;

    /// Throws InvalidParams unless k > 0 and q != 0.
    static JParams make(int k, int q);
    friend bool operator==(const JParams &, const JParams &) = default;
};

struct ExplicitWord {
    friend bool operator==(const ExplicitWord &, const ExplicitWord &) = default;
};

using PresentationSource = std::variant<TwoBridgeParams, JParams, ExplicitWord>;

/// <a, b | w a = b w> stored as the pivot w and relator w a w^-1 b^-1.
class KnotPresentation {
public:
    /// Any pivot word gives a relator with trivial abelianization.
    static KnotPresentation from_pivot(Word pivot, PresentationSource source = ExplicitWord{});

    const Word &pivot() const noexcept { return pivot_; }
    const Word &relator() const noexcept { return relator_; }
    const PresentationSource &source() const noexcept { return source_; }

    /// "K(7,3)", "J(2,4)" or "W(abAB)".
    std::string name() const;

private:
    KnotPresentation(Word pivot, Word relator, PresentationSource source)
        : pivot_(std::move(pivot)), relator_(std::move(relator)), source_(source)
    {
    }
    Word pivot_;
    Word relator_;
    PresentationSource source_;
};

/// Pivot a^e1 b^e2 ... b^e_{alpha-1} with e_i = (-1)^floor(i beta / alpha).
KnotPresentation schubert_relator(const TwoBridgeParams &p);
/// Pivot (w_m)^q with w_m = (bA)^m (Ba)^m for k = 2m and (bA)^m ba (Ba)^m for k = 2m + 1.
KnotPresentation j_relator(const JParams &p);
/// The word w_m above.
Word j_base_word(int k);

/// Schubert parameters of J(k, l). Throws InvalidParams for k <= 0 or l = 0,
/// NotAKnot if kl is odd and Unknot if |1 - kl| = 1.
TwoBridgeParams j_to_twobridge(int k, int l);

/// Classical Alexander polynomial in t with lowest exponent 0 and positive
/// leading coefficient.
MPoly alexander_poly(const KnotPresentation &p);

struct ClassicalInvariants {
    int genus = 0;
    bool fibered = false;
    Integer leading_coeff;
};

/// Throws OddSpan if the exponent span of delta is odd and ZeroPolynomial on 0.
ClassicalInvariants classical_invariants(const MPoly &delta);

/// Parses "K:alpha,beta", "J:k,l" (l = 2q) or "W:<word>". Throws Parse or the
/// parameter errors above.
KnotPresentation parse_knot_spec(std::string_view spec);

} // namespace talex

#endif
