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

#include "properties.hpp"

#include <numeric>
#include <random>

#include "oracles.hpp"
#include "talex/error.hpp"
#include "talex/freegroup.hpp"
#include "talex/presentations.hpp"

namespace props {

using namespace talex;
using oracle::Rational;

namespace {

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}
    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    Integer big()
    {
        // mostly small, sometimes well past 64 bits
        Integer c = uniform(-9, 9);
        if (uniform(0, 4) == 0) {
            Integer m = 1;
            m <<= uniform(60, 130);
            c = c * m + uniform(-1000, 1000);
        }
        return c;
    }
    Rational nonzero_rational()
    {
        int num = 0;
        while (num == 0) num = uniform(-7, 7);
        Rational r(num, uniform(1, 5));
        r.canonicalize();
        return r;
    }

private:
    std::mt19937_64 rng_;
};

void record(SuiteResult &r, bool ok, const std::string &what)
{
    ++r.cases;
    if (ok) return;
    if (r.failures++ == 0) r.first_failure = what;
}

Word random_word(Gen &g, int max_len)
{
    static constexpr char letters[] = {'a', 'A', 'b', 'B'};
    std::string s;
    int n = g.uniform(0, max_len);
    for (int i = 0; i < n; ++i) s += letters[g.uniform(0, 3)];
    return Word::parse(s);
}

MPoly random_mpoly(Gen &g)
{
    std::vector<MPoly::Term> terms;
    int n = g.uniform(0, 6);
    for (int i = 0; i < n; ++i)
        terms.emplace_back(Monomial{g.uniform(-3, 3), g.uniform(0, 3), g.uniform(-2, 2)}, g.big());
    return MPoly::from_terms(std::move(terms));
}

XYPoly random_xy(Gen &g, int max_x, int max_y, int n_terms)
{
    std::vector<XYPoly::Term> terms;
    for (int i = 0; i < n_terms; ++i) terms.emplace_back(XYMonomial{g.uniform(0, max_x), g.uniform(0, max_y)}, g.big());
    return XYPoly::from_terms(std::move(terms));
}

// y^deg (times a sign) plus random lower terms
XYPoly random_monic_y(Gen &g, int deg)
{
    XYPoly p = XYPoly(XYMonomial{0, deg}, g.uniform(0, 1) ? 1 : -1);
    for (int i = 0; i < 4; ++i) p += XYPoly(XYMonomial{g.uniform(0, 3), g.uniform(0, deg - 1)}, g.uniform(-5, 5));
    return p;
}

UPoly random_upoly(Gen &g, int deg)
{
    std::vector<Integer> c;
    for (int i = 0; i <= deg; ++i) c.emplace_back(g.uniform(-6, 6));
    if (c.back() == 0) c.back() = 1;
    return UPoly(std::move(c));
}

XYPoly as_y_poly(const UPoly &u)
{
    std::vector<XYPoly::Term> terms;
    for (std::size_t i = 0; i < u.coeffs().size(); ++i)
        terms.emplace_back(XYMonomial{0, static_cast<int>(i)}, u.coeffs()[i]);
    return XYPoly::from_terms(std::move(terms));
}

oracle::IntMat2 random_sl2(Gen &g)
{
    oracle::IntMat2 upper{1, g.uniform(-3, 3), 0, 1};
    oracle::IntMat2 lower{1, 0, g.uniform(-3, 3), 1};
    return g.uniform(0, 1) ? upper * lower : lower * upper;
}

oracle::IntMat2 image(const Word &w, const oracle::IntMat2 &a, const oracle::IntMat2 &b)
{
    oracle::IntMat2 out{1, 0, 0, 1};
    for (char c : w.letters()) {
        switch (c) {
        case 'a': out = out * a; break;
        case 'A': out = out * a.inverse(); break;
        case 'b': out = out * b; break;
        default: out = out * b.inverse(); break;
        }
    }
    return out;
}

oracle::IntMat2 image(const GroupRingElt &e, const oracle::IntMat2 &a, const oracle::IntMat2 &b)
{
    oracle::IntMat2 out{0, 0, 0, 0};
    for (const auto &[w, c] : e.terms()) out = out + image(w, a, b).scaled(c);
    return out;
}

} // namespace

SuiteResult fox_identity(std::uint64_t seed, int cases)
{
    SuiteResult r;
    r.name = "fox fundamental identity";
    Gen g(seed);
    const GroupRingElt one(Word{});
    for (int i = 0; i < cases; ++i) {
        Word w = random_word(g, 24);
        GroupRingElt da = fox_derivative(w, Generator::a);
        GroupRingElt db = fox_derivative(w, Generator::b);
        GroupRingElt a_minus_1 = GroupRingElt(Word::parse("a")) - one;
        GroupRingElt b_minus_1 = GroupRingElt(Word::parse("b")) - one;
        GroupRingElt rhs = detail::multiply(da, a_minus_1) + detail::multiply(db, b_minus_1);
        bool ok = rhs == GroupRingElt(w) - one;

        // same identity pushed through an integer SL2 representation
        oracle::IntMat2 A = random_sl2(g), B = random_sl2(g);
        oracle::IntMat2 I{1, 0, 0, 1};
        oracle::IntMat2 lhs = image(w, A, B) - I;
        oracle::IntMat2 rep_rhs = image(da, A, B) * (A - I) + image(db, A, B) * (B - I);
        ok = ok && lhs == rep_rhs;
        record(r, ok, "word " + w.to_string());
    }
    return r;
}

SuiteResult ring_axioms(std::uint64_t seed, int cases)
{
    SuiteResult r;
    r.name = "ring axioms";
    Gen g(seed + 1);
    for (int i = 0; i < cases; ++i) {
        MPoly a = random_mpoly(g), b = random_mpoly(g), c = random_mpoly(g);
        bool ok = (a + b) + c == a + (b + c) && a + b == b + a && (a * b) * c == a * (b * c) && a * b == b * a &&
                  a * (b + c) == a * b + a * c && (a - a).is_zero() && a * MPoly(1) == a && (a + MPoly()) == a &&
                  a.pow(3) == a * a * a;
        Rational s = g.nonzero_rational(), y = g.nonzero_rational(), t = g.nonzero_rational();
        ok = ok && oracle::eval(a * b + c, s, y, t) == oracle::eval(a, s, y, t) * oracle::eval(b, s, y, t) + oracle::eval(c, s, y, t);
        record(r, ok, "a = " + to_string(a) + ", b = " + to_string(b));
    }
    return r;
}

SuiteResult to_xy_round_trip(std::uint64_t seed, int cases)
{
    SuiteResult r;
    r.name = "to_xy round trip";
    Gen g(seed + 2);
    for (int i = 0; i < cases; ++i) {
        XYPoly q = random_xy(g, 6, 3, g.uniform(0, 7));
        MPoly p = from_xy(q);
        bool ok = mirror_s(p) == p && to_xy(p) == q;
        Rational s = g.nonzero_rational(), y = g.nonzero_rational();
        ok = ok && oracle::eval(p, s, y, 1) == oracle::eval(q, s + 1 / s, y);
        record(r, ok, "q = " + to_string(q));
    }
    return r;
}

SuiteResult det_at_minus_one(std::uint64_t seed, int cases)
{
    SuiteResult r;
    r.name = "determinant at -1 equals alpha";
    std::vector<std::pair<int, int>> pool;
    for (int alpha = 3; alpha <= 99; alpha += 2)
        for (int beta = 1; beta < alpha; beta += 2)
            if (std::gcd(alpha, beta) == 1) pool.emplace_back(alpha, beta);
    std::mt19937_64 rng(seed + 3);
    std::shuffle(pool.begin(), pool.end(), rng);
    for (int i = 0; i < cases; ++i) {
        auto [alpha, beta] = pool[static_cast<std::size_t>(i) % pool.size()];
        MPoly d = alexander_poly(schubert_relator(TwoBridgeParams::make(alpha, beta)));
        Rational v = oracle::eval(d, 1, 1, -1);
        record(r, abs(v) == alpha, "K(" + std::to_string(alpha) + "," + std::to_string(beta) + ")");
    }
    return r;
}

SuiteResult resultant_gcd(std::uint64_t seed, int cases)
{
    SuiteResult r;
    r.name = "resultant/gcd consistency";
    Gen g(seed + 4);
    for (int i = 0; i < cases; ++i) {
        bool ok = true;
        std::string what;
        switch (i % 3) {
        case 0: {
            // resultant agrees with the Sylvester determinant at integer x
            XYPoly p = random_monic_y(g, g.uniform(1, 4)), q = random_monic_y(g, g.uniform(1, 3));
            UPoly res = resultant_y(p, q);
            for (int x0 = -2; x0 <= 2; ++x0)
                ok = ok && res.eval(x0) == oracle::sylvester_resultant(oracle::y_coeffs_at(p, x0), oracle::y_coeffs_at(q, x0));
            what = "Res(" + to_string(p) + ", " + to_string(q) + ")";
            break;
        }
        case 1: {
            // a planted common factor kills the resultant
            XYPoly h = random_monic_y(g, 1);
            XYPoly p = random_monic_y(g, g.uniform(1, 3)) * h, q = random_monic_y(g, g.uniform(1, 2)) * h;
            ok = resultant_y(p, q).is_zero();
            what = "common factor " + to_string(h);
            break;
        }
        default: {
            UPoly h = random_upoly(g, g.uniform(0, 2));
            UPoly f = random_upoly(g, g.uniform(1, 4)) * h, k = random_upoly(g, g.uniform(1, 4)) * h;
            UPoly d = gcd(f, k);
            ok = pseudo_remainder(f, d).is_zero() && pseudo_remainder(k, d).is_zero();
            if (h.degree() > 0) ok = ok && pseudo_remainder(d, h).is_zero();
            UPoly res = resultant_y(as_y_poly(f), as_y_poly(k));
            ok = ok && (res.is_zero() == (d.degree() > 0));
            what = "gcd(" + f.to_string() + ", " + k.to_string() + ")";
            break;
        }
        }
        record(r, ok, what);
    }
    return r;
}

std::vector<SuiteResult> all_suites(std::uint64_t seed, int cases)
{
    return {fox_identity(seed, cases), ring_axioms(seed, cases), to_xy_round_trip(seed, cases),
            det_at_minus_one(seed, cases), resultant_gcd(seed, cases)};
}

} // namespace props
