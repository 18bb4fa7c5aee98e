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

#include "talex/serialize.hpp"

#include <type_traits>

#include "talex/error.hpp"

namespace talex {

namespace {

template <class Mono>
Json terms_json(const SparsePoly<Mono> &p)
{
    Json terms = Json::array();
    for (const auto &[m, c] : p.terms()) {
        Json e = Json::array();
        for (int v : m.exponents()) e.push_back(v);
        terms.push_back({{"e", e}, {"c", c.get_str()}});
    }
    return terms;
}

Integer parse_coeff(const Json &c)
{
    if (c.is_number_integer()) return Integer(c.get<long>());
    if (!c.is_string()) throw Error(ErrorKind::Parse, "coefficient must be a decimal string");
    Integer out;
    if (out.set_str(c.get<std::string>(), 10) != 0)
        throw Error(ErrorKind::Parse, "bad coefficient \"" + c.get<std::string>() + "\"");
    return out;
}

template <class Mono>
SparsePoly<Mono> parse_terms(const Json &j, const std::vector<std::string> &vars)
{
    std::vector<std::pair<Mono, Integer>> terms;
    for (const auto &t : j.at("terms")) {
        const Json &e = t.at("e");
        if (!e.is_array() || e.size() != vars.size()) throw Error(ErrorKind::Parse, "exponent vector has the wrong length");
        std::array<int, Mono::arity> ex{};
        for (std::size_t i = 0; i < Mono::arity; ++i) ex[i] = e[i].get<int>();
        Mono m = Mono::from_exponents(ex);
        if (m.y < 0) throw Error(ErrorKind::Parse, "negative y exponent");
        if constexpr (std::is_same_v<Mono, XYMonomial>)
            if (m.x < 0) throw Error(ErrorKind::Parse, "negative x exponent");
        terms.emplace_back(m, parse_coeff(t.at("c")));
    }
    return SparsePoly<Mono>::from_terms(std::move(terms));
}

std::vector<std::string> vars_of(const Json &j)
{
    if (!j.is_object() || !j.contains("vars") || !j.contains("terms"))
        throw Error(ErrorKind::Parse, "polynomial JSON needs \"vars\" and \"terms\"");
    return j.at("vars").get<std::vector<std::string>>();
}

} // namespace

Json to_json(const MPoly &p) { return {{"vars", {"s", "y", "t"}}, {"terms", terms_json(p)}}; }

Json to_json(const XYPoly &p) { return {{"vars", {"x", "y"}}, {"terms", terms_json(p)}}; }

Json to_json(Complex z) { return {{"re", z.real()}, {"im", z.imag()}}; }

MPoly mpoly_from_json(const Json &j)
{
    try {
        auto vars = vars_of(j);
        if (vars == std::vector<std::string>{"s", "y", "t"}) return parse_terms<Monomial>(j, vars);
        if (vars == std::vector<std::string>{"s", "y"}) {
            std::vector<std::pair<Monomial, Integer>> terms;
            for (const auto &t : j.at("terms")) {
                const Json &e = t.at("e");
                if (e.size() != 2) throw Error(ErrorKind::Parse, "exponent vector has the wrong length");
                terms.emplace_back(Monomial{e[0].get<int>(), e[1].get<int>(), 0}, parse_coeff(t.at("c")));
            }
            return MPoly::from_terms(std::move(terms));
        }
        throw Error(ErrorKind::Parse, "unsupported variable list for an (s, y, t) polynomial");
    } catch (const Json::exception &e) {
        throw Error(ErrorKind::Parse, e.what());
    }
}

XYPoly xypoly_from_json(const Json &j)
{
    try {
        auto vars = vars_of(j);
        if (vars == std::vector<std::string>{"x", "y"}) return parse_terms<XYMonomial>(j, vars);
        return to_xy(mpoly_from_json(j));
    } catch (const Json::exception &e) {
        throw Error(ErrorKind::Parse, e.what());
    }
}

} // namespace talex
