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

#include "talex/roots.hpp"

#include <algorithm>
#include <cfloat>
#include <climits>
#include <cmath>
#include <numbers>

#include <Eigen/Dense>

namespace talex {

namespace {

using CLD = std::complex<long double>;

constexpr int max_aberth_iterations = 600;

struct Refined {
    std::vector<CLD> roots;
    bool converged = false;
};

CLD horner(const std::vector<CLD> &c, CLD z)
{
    CLD acc(0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
    return acc;
}

long double magnitude_sum(const std::vector<CLD> &c, long double r)
{
    long double acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * r + std::abs(*it);
    return acc;
}

std::vector<CLD> initial_guesses(const std::vector<CLD> &c)
{
    const auto n = c.size() - 1;
    std::vector<CLD> monic(n);
    bool finite = true;
    for (std::size_t i = 0; i < n; ++i) {
        monic[i] = c[i] / c[n];
        if (!std::isfinite(static_cast<double>(std::abs(monic[i])))) finite = false;
    }
    if (finite) {
        Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
        for (std::size_t i = 1; i < n; ++i)
            companion(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i - 1)) = 1.0;
        for (std::size_t i = 0; i < n; ++i)
            companion(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(n - 1)) =
                Complex(-static_cast<double>(monic[i].real()), -static_cast<double>(monic[i].imag()));
        Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
        if (solver.info() == Eigen::Success) {
            std::vector<CLD> out;
            out.reserve(n);
            bool ok = true;
            for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
                Complex v = solver.eigenvalues()(i);
                if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) ok = false;
                out.emplace_back(v.real(), v.imag());
            }
            if (ok) return out;
        }
    }
    // Fujiwara bound circle
    long double radius = 0;
    for (std::size_t i = 0; i < n; ++i) {
        long double a = std::abs(monic[i]);
        if (a > 0) radius = std::max(radius, std::pow(a, 1.0L / static_cast<long double>(n - i)));
    }
    radius = 2 * std::max(radius, 1e-3L);
    std::vector<CLD> out;
    for (std::size_t k = 0; k < n; ++k) {
        long double angle = 2 * std::numbers::pi_v<long double> * static_cast<long double>(k) /
                                static_cast<long double>(n) + 0.4L;
        out.push_back(std::polar(radius, angle));
    }
    return out;
}

Refined aberth(const std::vector<CLD> &c, std::vector<CLD> z)
{
    const std::size_t n = z.size();
    std::vector<CLD> dc(c.size() - 1);
    for (std::size_t i = 1; i < c.size(); ++i) dc[i - 1] = c[i] * static_cast<long double>(i);
    const long double eps = 32 * LDBL_EPSILON;
    Refined out;
    for (int iter = 0; iter < max_aberth_iterations; ++iter) {
        long double max_step = 0;
        for (std::size_t i = 0; i < n; ++i) {
            CLD p = horner(c, z[i]);
            if (p == CLD(0)) continue;
            CLD dp = horner(dc, z[i]);
            CLD ratio = dp == CLD(0) ? p : p / dp;
            CLD sum(0);
            for (std::size_t j = 0; j < n; ++j)
                if (j != i) {
                    CLD diff = z[i] - z[j];
                    if (diff != CLD(0)) sum += CLD(1) / diff;
                }
            CLD w = ratio / (CLD(1) - ratio * sum);
            if (!std::isfinite(static_cast<double>(std::abs(w)))) continue;
            z[i] -= w;
            max_step = std::max(max_step, std::abs(w) / std::max(1.0L, std::abs(z[i])));
        }
        if (max_step < eps) {
            out.converged = true;
            break;
        }
    }
    out.roots = std::move(z);
    return out;
}

// Solves a polynomial given by long double coefficients with nonzero leading
// and constant terms. Throws RootFindingError if residuals stay above tol.
std::vector<CLD> solve_numeric(const std::vector<CLD> &c, double tol)
{
    const std::size_t n = c.size() - 1;
    if (n == 1) return {-c[0] / c[1]};
    Refined r = aberth(c, initial_guesses(c));
    bool ok = true;
    for (const auto &z : r.roots) {
        long double residual = std::abs(horner(c, z));
        long double scale = magnitude_sum(c, std::abs(z));
        if (!(residual <= static_cast<long double>(tol) * scale)) ok = false;
    }
    if (!ok) {
        std::vector<ComplexRoot> partial;
        for (const auto &z : r.roots)
            partial.push_back({Complex(static_cast<double>(z.real()), static_cast<double>(z.imag())), 1});
        throw RootFindingError("root refinement did not reach the residual tolerance (degree " + std::to_string(n) +
                                   ")",
                               std::move(partial));
    }
    return r.roots;
}

std::vector<CLD> scaled_coefficients(const UPoly &p)
{
    long max_exp = LONG_MIN;
    for (const auto &c : p.coeffs()) {
        if (c == 0) continue;
        long e = 0;
        mpz_get_d_2exp(&e, c.get_mpz_t());
        max_exp = std::max(max_exp, e);
    }
    std::vector<CLD> out;
    out.reserve(p.coeffs().size());
    for (const auto &c : p.coeffs()) {
        if (c == 0) {
            out.emplace_back(0);
            continue;
        }
        long e = 0;
        double m = mpz_get_d_2exp(&e, c.get_mpz_t());
        out.emplace_back(std::ldexp(static_cast<long double>(m), static_cast<int>(e - max_exp)));
    }
    return out;
}

} // namespace

bool root_less(Complex a, Complex b)
{
    const double grid = 1e-9;
    double ra = std::round(a.real() / grid);
    double rb = std::round(b.real() / grid);
    if (ra != rb) return ra < rb;
    return a.imag() < b.imag();
}

std::vector<ComplexRoot> complex_roots(const UPoly &p, double tol)
{
    if (p.is_zero() || p.degree() < 1) throw Error(ErrorKind::InvalidParams, "complex_roots needs degree >= 1");
    std::vector<ComplexRoot> out;
    auto factors = squarefree_decomposition(p);
    for (std::size_t i = 0; i < factors.size(); ++i) {
        const UPoly &f = factors[i];
        if (f.degree() < 1) continue;
        const int mult = static_cast<int>(i) + 1;
        // strip x^k
        int shift = 0;
        while (f.coeff(shift) == 0) ++shift;
        for (int k = 0; k < shift; ++k) out.push_back({Complex(0.0), mult});
        std::vector<Integer> rest(f.coeffs().begin() + shift, f.coeffs().end());
        UPoly g(std::move(rest));
        if (g.degree() < 1) continue;
        try {
            for (const auto &z : solve_numeric(scaled_coefficients(g), tol))
                out.push_back({Complex(static_cast<double>(z.real()), static_cast<double>(z.imag())), mult});
        } catch (const RootFindingError &e) {
            auto partial = out;
            for (auto r : e.partial()) partial.push_back({r.value, mult});
            throw RootFindingError(e.what(), std::move(partial));
        }
    }
    std::sort(out.begin(), out.end(), [](const ComplexRoot &a, const ComplexRoot &b) { return root_less(a.value, b.value); });
    return out;
}

std::vector<Complex> complex_roots(std::span<const Complex> coeffs, double tol)
{
    std::vector<CLD> c(coeffs.begin(), coeffs.end());
    while (!c.empty() && c.back() == CLD(0)) c.pop_back();
    if (c.size() < 2) throw Error(ErrorKind::InvalidParams, "complex_roots needs degree >= 1");
    std::vector<Complex> out;
    std::size_t shift = 0;
    while (c[shift] == CLD(0)) ++shift;
    for (std::size_t k = 0; k < shift; ++k) out.emplace_back(0.0);
    c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(shift));
    if (c.size() >= 2)
        for (const auto &z : solve_numeric(c, tol))
            out.emplace_back(static_cast<double>(z.real()), static_cast<double>(z.imag()));
    std::sort(out.begin(), out.end(), root_less);
    return out;
}

} // namespace talex
