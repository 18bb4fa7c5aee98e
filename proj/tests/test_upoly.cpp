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

#include <doctest.h>

#include "talex/error.hpp"
#include "talex/upoly.hpp"

using namespace talex;

TEST_CASE("construction and degree")
{
    CHECK(UPoly{1, 2, 0, 0}.degree() == 1);
    CHECK(UPoly().is_zero());
    CHECK(UPoly{0, 0}.is_zero());
    CHECK_THROWS_AS(UPoly().degree(), Error);
    CHECK(UPoly::monomial(3, 5) == UPoly{0, 0, 0, 5});
    CHECK(UPoly{4, 0, 7}.lead() == 7);
    CHECK(UPoly{4}.coeff(9) == 0);
}

TEST_CASE("arithmetic")
{
    UPoly a{1, 1};
    UPoly b{-1, 1};
    CHECK(a * b == UPoly{-1, 0, 1});
    CHECK(a + b == UPoly{0, 2});
    CHECK(a - a == UPoly());
    CHECK(a.pow(3) == UPoly{1, 3, 3, 1});
    CHECK(-a == UPoly{-1, -1});
    CHECK(UPoly{5, 3, 2}.derivative() == UPoly{3, 4});
    CHECK(UPoly{1, 0, 1}.eval(3) == 10);
}

TEST_CASE("content and primitive part")
{
    UPoly p{6, -4, 10};
    CHECK(p.content() == 2);
    CHECK(p.primitive_part() == UPoly{3, -2, 5});
}

TEST_CASE("division and gcd")
{
    UPoly f = UPoly{-1, 1} * UPoly{2, 1} * UPoly{3, 0, 1};
    CHECK(div_exact(f, UPoly{2, 1}) == UPoly{-1, 1} * UPoly{3, 0, 1});
    CHECK_THROWS_AS(div_exact(f, UPoly{5, 1}), Error);
    CHECK(pseudo_remainder(UPoly{1, 0, 1}, UPoly{0, 1}) == UPoly{1});
    UPoly g = gcd(f, UPoly{-1, 1} * UPoly{7, 1});
    CHECK((g == UPoly{-1, 1} || g == UPoly{1, -1}));
    CHECK(gcd(UPoly{1, 1}, UPoly{2, 1}).degree() == 0);
}

TEST_CASE("squarefree decomposition")
{
    // (x - 1)^2 (x + 2)
    UPoly p = UPoly{-1, 1}.pow(2) * UPoly{2, 1};
    auto f = squarefree_decomposition(p);
    REQUIRE(f.size() == 2);
    CHECK(f[0].degree() == 1);
    CHECK(f[0].eval(-2) == 0);
    CHECK(f[1].degree() == 1);
    CHECK(f[1].eval(1) == 0);
}

TEST_CASE("text")
{
    CHECK(UPoly{-1, 0, 2}.to_string() == "2*x^2 - 1");
    CHECK(UPoly().to_string() == "0");
}
