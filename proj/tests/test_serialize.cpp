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
#include "talex/serialize.hpp"

using namespace talex;

TEST_CASE("mpoly round trip")
{
    MPoly p = MPoly(Integer("-98765432109876543210")) * s_pow(-2) * y_pow(3) * t_pow(1) + MPoly(4);
    Json j = to_json(p);
    CHECK(j["vars"] == Json::array({"s", "y", "t"}));
    CHECK(j["terms"][1]["c"] == "-98765432109876543210");
    CHECK(mpoly_from_json(j) == p);
    CHECK(mpoly_from_json(Json::parse(j.dump())) == p);
}

TEST_CASE("xy round trip")
{
    XYPoly q = x_pow_xy(2) - y_pow_xy(1) - XYPoly(1);
    CHECK(xypoly_from_json(to_json(q)) == q);
    CHECK(xypoly_from_json(to_json(s_pow(2) + s_pow(-2))) == x_pow_xy(2) - XYPoly(2));
}

TEST_CASE("two-variable s,y layout")
{
    Json j = Json::parse(R"({"vars":["s","y"],"terms":[{"e":[1,0],"c":"1"},{"e":[-1,0],"c":"1"}]})");
    CHECK(mpoly_from_json(j) == s_pow(1) + s_pow(-1));
    CHECK(xypoly_from_json(j) == x_pow_xy(1));
}

TEST_CASE("complex")
{
    Json j = to_json(Complex(1.5, -2));
    CHECK(j["re"] == 1.5);
    CHECK(j["im"] == -2.0);
}

TEST_CASE("malformed input")
{
    for (const char *text : {R"({"terms":[]})", R"({"vars":["q"],"terms":[]})",
                             R"({"vars":["x","y"],"terms":[{"e":[1],"c":"1"}]})",
                             R"({"vars":["x","y"],"terms":[{"e":[1,0],"c":"abc"}]})",
                             R"({"vars":["x","y"],"terms":[{"e":[-1,0],"c":"1"}]})", R"([1,2])"}) {
        INFO(std::string(text));
        try {
            xypoly_from_json(Json::parse(text));
            FAIL("accepted");
        } catch (const Error &e) {
            CHECK(e.kind() == ErrorKind::Parse);
        }
    }
    try {
        xypoly_from_json(to_json(s_pow(1)));
        FAIL("accepted");
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::NotSymmetric);
    }
}
