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

#include <cmath>
#include <cstdlib>
#include <sstream>

#include "cli.hpp"
#include "talex/serialize.hpp"

using talex::Json;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = talex::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

void collect_numbers(const Json &j, std::vector<std::string> &acc)
{
    if (j.is_number()) {
        acc.push_back(Json(std::abs(j.get<double>())).dump());
        if (j.is_number_integer()) acc.back() = Json(std::abs(j.get<long>())).dump();
    } else if (j.is_structured()) {
        for (const auto &e : j) collect_numbers(e, acc);
    }
}

} // namespace

TEST_CASE("riley prints the 5_2 polynomial")
{
    auto r = run({"riley", "--knot", "K:7,3", "--vars", "xy", "--format", "text"});
    CHECK(r.code == 0);
    CHECK(r.out.find("-x^4*y + 2*x^2*y^2 + 2*x^4 - y^3 - x^2*y - y^2 - 4*x^2 + 2*y + 1") != std::string::npos);
    auto sy = run({"riley", "--knot", "K:7,3", "--vars", "sy", "--format", "json"});
    CHECK(sy.code == 0);
    Json j = Json::parse(sy.out);
    CHECK(j["result"]["phi"]["vars"] == Json::array({"s", "y", "t"}));
}

TEST_CASE("json documents carry the schema and the command")
{
    auto r = run({"monic", "--knot", "K:7,3", "--format", "json"});
    REQUIRE(r.code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["schema_version"] == 1);
    CHECK(j["command"]["verb"] == "monic");
    CHECK(j["command"]["knot"] == "K:7,3");
    CHECK(j["command"]["tol"] == 1e-9);
    CHECK(j["command"]["seed"] == 0);
    CHECK(j["command"]["samples"] == 50);
    CHECK(j["command"]["convention"] == "riley");
    CHECK(j["result"]["count"] == 2);
    CHECK(j["result"]["points"][0]["point"]["x"].contains("re"));
}

TEST_CASE("degrees table")
{
    auto r = run({"degrees", "--k", "1:6", "--q", "-3:3", "--format", "text"});
    CHECK(r.code == 0);
    CHECK(r.out.find("deg_phi") != std::string::npos);
    CHECK(r.out.find("expected_psi") != std::string::npos);
    auto j = Json::parse(run({"degrees", "--k", "2:3", "--q", "-1:1", "--format", "json"}).out);
    REQUIRE(j["result"]["rows"].size() == 4);
    CHECK(j["result"]["rows"][0]["k"] == 2);
    CHECK(j["result"]["rows"][0]["q"] == -1);
    CHECK(j["result"]["rows"][3]["q"] == 1);
}

TEST_CASE("degrees output does not depend on the thread count")
{
    setenv("TALEX_THREADS", "1", 1);
    auto a = run({"degrees", "--format", "json"});
    setenv("TALEX_THREADS", "4", 1);
    auto b = run({"degrees", "--format", "json"});
    unsetenv("TALEX_THREADS");
    CHECK(a.out == b.out);
}

TEST_CASE("bound on an excluded member")
{
    auto r = run({"bound", "--knot", "J:4,4"});
    CHECK(r.code == 0);
    CHECK(r.out.find("FiberedOrExcluded") != std::string::npos);
    CHECK(r.out.find("k = 2q") != std::string::npos);
    auto ok = Json::parse(run({"bound", "--knot", "J:2,4", "--format", "json"}).out);
    CHECK(ok["result"]["bound"] == 36);
    CHECK(run({"bound", "--knot", "K:7,3"}).code == 1);
}

TEST_CASE("goldens")
{
    auto r = run({"goldens"});
    CHECK(r.code == 0);
    auto j = Json::parse(run({"goldens", "--format", "json"}).out);
    CHECK(j["result"]["all_pass"] == true);
    CHECK(j["result"]["items"].size() >= 10);

    auto bad = run({"goldens", "--perturb", "phi1", "--format", "json"});
    CHECK(bad.code == 2);
    auto items = Json::parse(bad.out)["result"]["items"];
    for (const auto &item : items) {
        const std::string name = item["item"];
        INFO(name);
        CHECK(item["pass"] == (name.rfind("7_4/", 0) != 0));
    }
}

TEST_CASE("usage errors")
{
    auto r = run({"riley", "--knot", "K:7,3", "--bogus"});
    CHECK(r.code == 1);
    CHECK(r.err.find("--bogus") != std::string::npos);
    CHECK(run({}).code == 1);
    CHECK(run({"frobnicate"}).code == 1);
    CHECK(run({"riley"}).code == 1);
    CHECK(run({"riley", "--knot", "K:8,3"}).code == 1);
    CHECK(run({"riley", "--knot", "J:1,3"}).code == 1);
    CHECK(run({"riley", "--knot", "K:7,3", "--convention", "other"}).code == 1);
    CHECK(run({"talex", "--knot", "K:7,3", "--at", "1,1"}).code == 1);
    CHECK(run({"talex", "--knot", "K:7,3", "--at", "zz"}).code == 1);
    CHECK(run({"degrees", "--k", "3:1"}).code == 1);
    CHECK(run({"goldens", "--perturb", "other"}).code == 1);
    CHECK(run({"monic", "--knot", "K:7,3", "--factor", "{"}).code == 1);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("talex at a complex point")
{
    auto r = run({"talex", "--knot", "K:7,3", "--at", "0+0.408248290463863i,-0.6666666666666666", "--tol", "1e-8",
                  "--format", "json"});
    REQUIRE(r.code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["result"]["at"]["degree"] == 1);
    CHECK(j["result"]["at"]["monic"] == false);
    CHECK(j["result"]["psi"].size() == 3);
}

TEST_CASE("monic with a factor")
{
    std::string factor = R"({"vars":["x","y"],"terms":[{"e":[0,0],"c":"1"},{"e":[2,2],"c":"1"},{"e":[0,2],"c":"-2"},{"e":[0,3],"c":"-1"}]})";
    auto r = run({"monic", "--knot", "K:15,11", "--factor", factor, "--format", "json"});
    CHECK(r.code == 0);
    CHECK(Json::parse(r.out)["result"]["scope"] == "component");
}

TEST_CASE("identical commands give byte-identical json")
{
    std::vector<std::string> args{"fibered", "--knot", "K:15,11", "--samples", "20", "--seed", "9", "--format", "json"};
    auto a = run(args);
    auto b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    auto c = run({"fibered", "--knot", "K:15,11", "--samples", "20", "--seed", "10", "--format", "json"});
    CHECK(c.out != a.out);
}

TEST_CASE("text and json carry the same numbers")
{
    for (std::vector<std::string> base : {std::vector<std::string>{"monic", "--knot", "K:7,3"},
                                         std::vector<std::string>{"degdrop", "--knot", "K:7,3"},
                                         std::vector<std::string>{"metabelian", "--knot", "K:15,11"},
                                         std::vector<std::string>{"criterion", "--knot", "J:4,4"},
                                         std::vector<std::string>{"alexander", "--knot", "K:15,11"}}) {
        auto text = base, json = base;
        json.insert(json.end(), {"--format", "json"});
        auto t = run(text);
        auto j = run(json);
        REQUIRE(t.code == 0);
        REQUIRE(j.code == 0);
        std::vector<std::string> numbers;
        collect_numbers(Json::parse(j.out)["result"], numbers);
        CHECK_FALSE(numbers.empty());
        for (const auto &n : numbers) {
            INFO(base[0] << ": " << n);
            CHECK(t.out.find(n) != std::string::npos);
        }
    }
}

TEST_CASE("other verbs")
{
    auto p = Json::parse(run({"present", "--knot", "J:2,4", "--format", "json"}).out);
    CHECK(p["result"]["two_bridge"]["alpha"] == 7);
    CHECK(p["result"]["two_bridge"]["beta"] == 3);
    auto a = Json::parse(run({"alexander", "--knot", "W:abABab", "--format", "json"}).out);
    CHECK(a["result"]["determinant"] == 7);
    CHECK(a["result"]["genus"] == 1);
    auto c = Json::parse(run({"criterion", "--knot", "K:7,3", "--format", "json"}).out);
    CHECK(c["result"]["overall"] == true);
    auto m = run({"metabelian", "--knot", "K:7,3"});
    CHECK(m.code == 0);
    auto f = Json::parse(run({"fibered", "--knot", "J:2,2", "--format", "json"}).out);
    CHECK(f["result"]["verdict"] == "ConsistentWithFibered");
}
