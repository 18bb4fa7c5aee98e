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

#include "oracles.hpp"
#include "talex/error.hpp"
#include "talex/polyring.hpp"
#include "talex/roots.hpp"

using namespace talex;

namespace {

XYPoly X(int e = 1) { return x_pow_xy(e); }
XYPoly Y(int e = 1) { return y_pow_xy(e); }

XYPoly phi_52()
{
    return XYPoly(1) - XYPoly(4) * X(2) + XYPoly(2) * X(4) + (XYPoly(2) - X(2) - X(4)) * Y() -
           (XYPoly(1) - XYPoly(2) * X(2)) * Y(2) - Y(3);
}

// remainder of integer polynomials (low to high) by a monic divisor
std::vector<Integer> rem_monic(std::vector<Integer> a, const std::vector<Integer> &m)
{
    const std::size_t n = m.size() - 1;
    const Integer lead = m.back();
    while (a.size() > n) {
        Integer c = a.back() * lead;
        std::size_t shift = a.size() - 1 - n;
        for (std::size_t i = 0; i <= n; ++i) a[shift + i] -= c * m[i];
        a.pop_back();
    }
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

template <class F>
ErrorKind kind_of(F &&f)
{
    try {
        f();
    } catch (const Error &e) {
        return e.kind();
    }
    FAIL("no error raised");
    return ErrorKind::Parse;
}

} // namespace

TEST_CASE("laurent arithmetic")
{
    MPoly x = s_pow(1) + s_pow(-1);
    CHECK(x * (s_pow(1) - s_pow(-1)) == s_pow(2) - s_pow(-2));
    MPoly p = MPoly(3) * s_pow(2) * y_pow(1) - t_pow(-1);
    CHECK((p + (-p)).is_zero());
    CHECK((p + (-p)).terms().empty());
    CHECK(x * x == MPoly::from_terms({{Monomial{2, 0, 0}, 1}, {Monomial{0, 0, 0}, 2}, {Monomial{-2, 0, 0}, 1}}));
    CHECK(x.pow(0) == MPoly(1));
    CHECK(MPoly(5).is_constant());
    CHECK(MPoly().is_zero());
}

TEST_CASE("from_terms merges and drops zeros")
{
    MPoly p = MPoly::from_terms({{Monomial{1, 0, 0}, 2}, {Monomial{1, 0, 0}, -2}, {Monomial{0, 1, 0}, 4}});
    CHECK(p == MPoly(4) * y_pow(1));
    CHECK(p.size() == 1);
}

TEST_CASE("big coefficients stay exact")
{
    MPoly big = MPoly(Integer("123456789012345678901234567890")) * s_pow(1);
    MPoly sq = big * big;
    CHECK(sq.coeff(Monomial{2, 0, 0}) == Integer("15241578753238836750495351562536198787501905199875019052100"));
}

TEST_CASE("to_xy")
{
    CHECK(to_xy(s_pow(1) + s_pow(-1)) == X());
    CHECK(to_xy(s_pow(2) + s_pow(-2)) == X(2) - XYPoly(2));
    CHECK(to_xy(MPoly(7) * y_pow(2)) == XYPoly(7) * Y(2));
    CHECK(kind_of([] { to_xy(s_pow(1)); }) == ErrorKind::NotSymmetric);
    CHECK(kind_of([] { to_xy(t_pow(1)); }) == ErrorKind::NotSymmetric);
    CHECK(from_xy(X(2) - XYPoly(2)) == s_pow(2) + s_pow(-2));
}

TEST_CASE("power sums")
{
    CHECK(power_sum_in_x(0) == UPoly{2});
    CHECK(power_sum_in_x(1) == UPoly{0, 1});
    CHECK(power_sum_in_x(2) == UPoly{-2, 0, 1});
    CHECK(power_sum_in_x(3) == UPoly{0, -3, 0, 1});
}

TEST_CASE("total degree")
{
    CHECK(total_degree_xy(X(2) - Y() - XYPoly(1)) == 2);
    CHECK(total_degree_xy(phi_52()) == 5);
    CHECK(total_degree_xy(XYPoly(1)) == 0);
    CHECK(kind_of([] { total_degree_xy(XYPoly()); }) == ErrorKind::ZeroPolynomial);
    CHECK(deg_y(phi_52()) == 3);
    CHECK(kind_of([] { deg_y(MPoly()); }) == ErrorKind::ZeroPolynomial);
}

TEST_CASE("t slices")
{
    MPoly p = t_pow(2) - (s_pow(1) + s_pow(-1)) * t_pow(1) + MPoly(1);
    CHECK(t_range(p) == std::pair{0, 2});
    CHECK(coeff_t(p, 1) == -(s_pow(1) + s_pow(-1)));
    CHECK(coeff_t(p, 5).is_zero());
    CHECK(from_t_slices(t_slices(p)) == p);
    CHECK(has_t(p));
    CHECK_FALSE(has_t(y_pow(3)));
    CHECK(kind_of([] { t_range(MPoly()); }) == ErrorKind::ZeroPolynomial);
}

TEST_CASE("shift and substitute")
{
    MPoly p = s_pow(2) + s_pow(-2) - y_pow(1) - MPoly(1);
    CHECK(shift_y(shift_y(p, 2), -2) == p);
    CHECK(shift_y(p, 2) == s_pow(2) + s_pow(-2) - y_pow(1) - MPoly(3));
    CHECK(substitute_y(p, 2) == s_pow(2) + s_pow(-2) - MPoly(3));
    CHECK(shift_y(X(2) - Y(2), 1) == X(2) - Y(2) - XYPoly(2) * Y() - XYPoly(1));
    CHECK(substitute_y(phi_52(), 2) == XYPoly(2) * X(2) - XYPoly(7));
    CHECK(mirror_s(s_pow(3) * y_pow(1)) == s_pow(-3) * y_pow(1));
}

TEST_CASE("reduction modulo a monic-in-y polynomial")
{
    RileyModulus m(phi_52());
    CHECK(m.deg_y() == 3);
    CHECK(m.lead_sign() == -1);
    CHECK(m.reduce(phi_52()).is_zero());
    XYPoly low = X(5) * Y(2) - XYPoly(3) * Y();
    CHECK(m.reduce(low) == low);

    XYPoly modulus = Y(3) + Y() * (X(2) - XYPoly(2)) - XYPoly(5) * X();
    RileyModulus mm(modulus);
    XYPoly p = Y(3);
    CHECK(mm.reduce(p) == -(Y() * (X(2) - XYPoly(2))) + XYPoly(5) * X());

    XYPoly q = Y(6) * X() + XYPoly(3) * Y(4) - X(3) * Y(3) + XYPoly(11);
    for (const RileyModulus *mod : {&m, &mm}) {
        XYPoly r = mod->reduce(q);
        CHECK(deg_y(r) < mod->deg_y());
        for (int x0 = -3; x0 <= 3; ++x0) {
            auto diff = oracle::y_coeffs_at(q - r, x0);
            CHECK(rem_monic(diff, oracle::y_coeffs_at(mod->poly(), x0)).empty());
        }
    }
    CHECK(reduce_mod(q, mm) == mm.reduce(q));
    CHECK(kind_of([] { RileyModulus(XYPoly(2) * Y() + XYPoly(1)); }) == ErrorKind::NonUnitLeading);
    CHECK(kind_of([] { RileyModulus(X() * Y() + XYPoly(1)); }) == ErrorKind::NonUnitLeading);
    CHECK(kind_of([] { RileyModulus m{XYPoly()}; }) == ErrorKind::ZeroPolynomial);
    CHECK(RileyModulus(XYPoly(1)).is_unit());
    CHECK(RileyModulus(XYPoly(-1)).reduce(X(4)).is_zero());
}

TEST_CASE("sy modulus")
{
    MPoly phi = s_pow(2) + s_pow(-2) - y_pow(1) - MPoly(1);
    SyModulus m(phi);
    CHECK(m.lead_sign() == -1);
    CHECK(m.reduce(y_pow(1)) == s_pow(2) + s_pow(-2) - MPoly(1));
    CHECK(reduce_mod(y_pow(2) * t_pow(1), m) == (s_pow(2) + s_pow(-2) - MPoly(1)).pow(2) * t_pow(1));
}

TEST_CASE("exact division in t")
{
    MPoly den = t_pow(2) - (s_pow(1) + s_pow(-1)) * t_pow(1) + MPoly(1);
    CHECK(div_exact_t(den * (t_pow(1) + MPoly(1)), den) == t_pow(1) + MPoly(1));
    CHECK(div_exact_t(t_pow(3), t_pow(2)) == t_pow(1));
    CHECK(div_exact_t(t_pow(3) + MPoly(1), t_pow(2)) == t_pow(1) + t_pow(-2));
    CHECK(kind_of([] { div_exact_t(t_pow(3) + MPoly(1), t_pow(2) + MPoly(1)); }) == ErrorKind::NonzeroRemainder);
    CHECK(kind_of([] { div_exact_t(t_pow(3), MPoly(2) * t_pow(1)); }) == ErrorKind::NonUnitLeading);
    CHECK(kind_of([] { div_exact_t(t_pow(3), MPoly()); }) == ErrorKind::DivisionByZero);
    CHECK(div_exact_t(MPoly(), den).is_zero());

    // over Z[s, y]/(phi) a multiple of phi in the numerator disappears
    MPoly phi = s_pow(2) + s_pow(-2) - y_pow(1) - MPoly(1);
    SyModulus m(phi);
    MPoly num = den * (t_pow(1) * y_pow(1) + MPoly(2)) + phi * t_pow(3);
    CHECK(div_exact_t(num, den, &m) == m.reduce(t_pow(1) * y_pow(1) + MPoly(2)));
}

TEST_CASE("resultant in y")
{
    CHECK(resultant_y(Y(2) - X(), Y() - XYPoly(1)) == UPoly{1, -1});
    XYPoly p = phi_52();
    CHECK(resultant_y(p, p).is_zero());
    XYPoly psi2 = XYPoly(2) * X(2) - X(2) * Y() + Y(2);
    UPoly res = resultant_y(p, psi2 - XYPoly(1));
    CHECK(res.eval(0) != 0);
    auto roots = complex_roots(res);
    int hits = 0;
    for (const auto &r : roots)
        if (std::abs(std::abs(r.value) - 1 / std::sqrt(2.0)) < 1e-9 && std::abs(r.value.imag()) < 1e-9) ++hits;
    CHECK(hits == 2);
    for (int x0 = -2; x0 <= 2; ++x0)
        CHECK(res.eval(x0) == oracle::sylvester_resultant(oracle::y_coeffs_at(p, x0), oracle::y_coeffs_at(psi2 - XYPoly(1), x0)));
}

TEST_CASE("y coefficients")
{
    auto c = y_coefficients(phi_52());
    REQUIRE(c.size() == 4);
    CHECK(c[0] == UPoly{1, 0, -4, 0, 2});
    CHECK(c[3] == UPoly{-1});
}

TEST_CASE("numeric evaluation")
{
    CHECK(eval(X(2) - Y() - XYPoly(1), 2.0, 3.0) == Complex(0));
    CHECK(std::abs(eval(phi_52(), 1 / std::sqrt(2.0), 0.5)) < 1e-12);
    CHECK(kind_of([] { eval_sy(s_pow(-1), 0.0, 1.0); }) == ErrorKind::DivisionByZero);
    CHECK(eval_sy(s_pow(2) * y_pow(1), Complex(0, 1), 3.0) == Complex(-3, 0));
    auto byt = eval_t(t_pow(2) + s_pow(1) * t_pow(-1), 2.0, 0.0);
    CHECK(byt.at(2) == Complex(1));
    CHECK(byt.at(-1) == Complex(2));
    auto py = partial_eval_x(phi_52(), 1.0);
    REQUIRE(py.size() == 4);
    CHECK(py[0] == Complex(-1));
    CHECK(eval_scale(X() - Y(), 2.0, -3.0) == doctest::Approx(5.0));
    CHECK(eval(UPoly{1, 2, 3}, Complex(0, 1)) == Complex(-2, 2));
    CHECK(to_double(Integer("1000000000000000000000")) == doctest::Approx(1e21));
}

TEST_CASE("text form")
{
    CHECK(to_string(XYPoly()) == "0");
    CHECK(to_string(X(2) - Y() - XYPoly(1)) == "x^2 - y - 1");
    CHECK(to_string(s_pow(-2) * t_pow(1)) == "s^-2*t");
}
