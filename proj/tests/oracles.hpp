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

// Independent reference computations for the tests. Nothing here calls the
// library's arithmetic beyond reading terms.

#ifndef TALEX_TESTS_ORACLES_HPP
#define TALEX_TESTS_ORACLES_HPP

#include <complex>
#include <cstdlib>
#include <vector>

#include <gmpxx.h>

#include "talex/polyring.hpp"

namespace oracle {

using talex::Integer;
using Rational = mpq_class;

inline Rational rpow(const Rational &b, int e)
{
    Rational out = 1;
    Rational base = e < 0 ? Rational(1) / b : b;
    for (int i = 0; i < std::abs(e); ++i) out *= base;
    return out;
}

inline Rational eval(const talex::MPoly &p, const Rational &s, const Rational &y, const Rational &t)
{
    Rational acc = 0;
    for (const auto &[m, c] : p.terms()) acc += Rational(c) * rpow(s, m.s) * rpow(y, m.y) * rpow(t, m.t);
    return acc;
}

inline Rational eval(const talex::XYPoly &p, const Rational &x, const Rational &y)
{
    Rational acc = 0;
    for (const auto &[m, c] : p.terms()) acc += Rational(c) * rpow(x, m.x) * rpow(y, m.y);
    return acc;
}

inline std::complex<double> eval_c(const talex::XYPoly &p, std::complex<double> x, std::complex<double> y)
{
    std::complex<double> acc = 0;
    for (const auto &[m, c] : p.terms()) acc += c.get_d() * std::pow(x, m.x) * std::pow(y, m.y);
    return acc;
}

// Fraction-free Gaussian elimination.
inline Integer bareiss_det(std::vector<std::vector<Integer>> a)
{
    const std::size_t n = a.size();
    if (n == 0) return 1;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t r = k + 1;
            while (r < n && a[r][k] == 0) ++r;
            if (r == n) return 0;
            std::swap(a[k], a[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

// Coefficients in y of p(x0, y), low to high, trimmed.
inline std::vector<Integer> y_coeffs_at(const talex::XYPoly &p, const Integer &x0)
{
    std::vector<Integer> out;
    for (const auto &[m, c] : p.terms()) {
        if (static_cast<std::size_t>(m.y) >= out.size()) out.resize(static_cast<std::size_t>(m.y) + 1);
        Integer v;
        mpz_pow_ui(v.get_mpz_t(), x0.get_mpz_t(), static_cast<unsigned long>(m.x));
        out[static_cast<std::size_t>(m.y)] += c * v;
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

// Sylvester determinant of two univariate integer polynomials (low to high).
inline Integer sylvester_resultant(const std::vector<Integer> &f, const std::vector<Integer> &g)
{
    const std::size_t m = f.size() - 1;
    const std::size_t n = g.size() - 1;
    const std::size_t size = m + n;
    if (size == 0) return 1;
    std::vector<std::vector<Integer>> s(size, std::vector<Integer>(size));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t i = 0; i <= m; ++i) s[r][r + i] = f[m - i];
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t i = 0; i <= n; ++i) s[n + r][r + i] = g[n - i];
    return bareiss_det(std::move(s));
}

struct IntMat2 {
    Integer a, b, c, d;
    friend IntMat2 operator*(const IntMat2 &x, const IntMat2 &y)
    {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
    }
    friend IntMat2 operator+(const IntMat2 &x, const IntMat2 &y) { return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d}; }
    friend IntMat2 operator-(const IntMat2 &x, const IntMat2 &y) { return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d}; }
    friend bool operator==(const IntMat2 &, const IntMat2 &) = default;
    IntMat2 scaled(const Integer &k) const { return {a * k, b * k, c * k, d * k}; }
    // inverse of a determinant-one matrix
    IntMat2 inverse() const { return {d, -b, -c, a}; }
};

} // namespace oracle

#endif
