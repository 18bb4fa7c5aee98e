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

#include "talex/charvariety.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <random>
#include <thread>

#include "talex/error.hpp"
#include "talex/parallel.hpp"

namespace talex {

namespace {

using CLD = std::complex<long double>;

struct Jet {
    CLD value, dx, dy;
};

CLD ipow(CLD z, int e)
{
    CLD r(1);
    for (int i = 0; i < e; ++i) r *= z;
    return r;
}

Jet eval_jet(const XYPoly &p, CLD x, CLD y)
{
    Jet j{};
    for (const auto &[m, c] : p.terms()) {
        const long double cv = to_double(c);
        const CLD xe = ipow(x, m.x);
        const CLD ye = ipow(y, m.y);
        j.value += cv * xe * ye;
        if (m.x > 0) j.dx += cv * static_cast<long double>(m.x) * ipow(x, m.x - 1) * ye;
        if (m.y > 0) j.dy += cv * static_cast<long double>(m.y) * xe * ipow(y, m.y - 1);
    }
    return j;
}

double scaled_residual(const XYPoly &p, Complex x, Complex y)
{
    return std::abs(eval(p, x, y)) / std::max(1.0, eval_scale(p, x, y));
}

// Newton on (f, g); keeps a step only while the combined residual shrinks.
void polish(const XYPoly &f, const XYPoly &g, Complex &x, Complex &y)
{
    CLD cx(x), cy(y);
    auto norm = [&](CLD a, CLD b) {
        Jet jf = eval_jet(f, a, b);
        Jet jg = eval_jet(g, a, b);
        return std::abs(jf.value) + std::abs(jg.value);
    };
    long double best = norm(cx, cy);
    for (int it = 0; it < 30 && best > 0; ++it) {
        Jet jf = eval_jet(f, cx, cy);
        Jet jg = eval_jet(g, cx, cy);
        CLD det = jf.dx * jg.dy - jf.dy * jg.dx;
        if (det == CLD(0)) break;
        CLD nx = cx - (jf.value * jg.dy - jf.dy * jg.value) / det;
        CLD ny = cy - (jf.dx * jg.value - jf.value * jg.dx) / det;
        long double r = norm(nx, ny);
        if (!(r < best)) break;
        best = r;
        cx = nx;
        cy = ny;
    }
    x = Complex(static_cast<double>(cx.real()), static_cast<double>(cx.imag()));
    y = Complex(static_cast<double>(cy.real()), static_cast<double>(cy.imag()));
}

bool point_less(const CharacterPoint &a, const CharacterPoint &b)
{
    if (root_less(a.x, b.x)) return true;
    if (root_less(b.x, a.x)) return false;
    return root_less(a.y, b.y);
}

bool near(const CharacterPoint &a, const CharacterPoint &b, double radius)
{
    return std::abs(a.x - b.x) <= radius * std::max(1.0, std::abs(a.x)) &&
           std::abs(a.y - b.y) <= radius * std::max(1.0, std::abs(a.y));
}

std::vector<CharacterPoint> dedupe(std::vector<CharacterPoint> pts, double radius)
{
    std::vector<CharacterPoint> out;
    for (auto &p : pts) {
        auto it = std::find_if(out.begin(), out.end(), [&](const CharacterPoint &q) { return near(p, q, radius); });
        if (it == out.end()) out.push_back(p);
        else if (p.residual < it->residual) *it = p;
    }
    std::sort(out.begin(), out.end(), point_less);
    return out;
}

std::vector<Complex> y_roots(const XYPoly &phi, Complex x0, double tol)
{
    auto coeffs = partial_eval_x(phi, x0);
    if (coeffs.size() < 2) return {};
    return complex_roots(std::span<const Complex>(coeffs), tol);
}

} // namespace

double merge_radius(double tol) { return std::sqrt(tol); }

SolveResult solve_system(const XYPoly &phi, const XYPoly &g, double tol)
{
    RileyModulus check(phi);
    SolveResult out;
    if (check.is_unit()) return out;
    out.resultant = resultant_y(phi, g);
    if (out.resultant.is_zero()) {
        out.shared_component = true;
        return out;
    }
    if (out.resultant.degree() == 0) return out;
    const double filter = std::sqrt(tol);
    std::vector<CharacterPoint> raw;
    for (const auto &xr : complex_roots(out.resultant, tol)) {
        for (Complex y0 : y_roots(phi, xr.value, tol)) {
            Complex x = xr.value;
            Complex y = y0;
            if (scaled_residual(g, x, y) > filter) continue;
            polish(phi, g, x, y);
            if (scaled_residual(phi, x, y) > tol || scaled_residual(g, x, y) > tol) continue;
            raw.push_back({x, y, std::abs(eval(phi, x, y))});
        }
    }
    out.points = dedupe(std::move(raw), merge_radius(tol));
    return out;
}

std::string_view to_string(MonicStatus s) noexcept
{
    return s == MonicStatus::FiniteSet ? "FiniteSet" : "WholeComponentMonic";
}

std::string_view to_string(FiberedVerdict v) noexcept
{
    return v == FiberedVerdict::ConsistentWithFibered ? "ConsistentWithFibered" : "NonfiberedCertificate";
}

MonicReport monic_characters(const TwistedAlex &ta, double tol, const std::optional<XYPoly> &factor)
{
    MonicReport out;
    if (factor) {
        out.scope = "component";
        // the factor must divide phi: its zero set lies on the variety
        if (!RileyModulus(*factor).reduce(ta.riley.xy_form).is_zero())
            throw Error(ErrorKind::InvalidParams, "factor does not divide the Riley polynomial");
    }
    if (ta.is_zero()) return out;
    if (normalize_monic(ta).is_monic) {
        out.status = MonicStatus::WholeComponentMonic;
        return out;
    }
    const XYPoly &curve = factor ? *factor : ta.riley.xy_form;
    const XYPoly &top = ta.top();
    std::vector<CharacterPoint> candidates;
    SolveResult ones = solve_system(curve, top - XYPoly(1), tol);
    if (ones.shared_component) {
        out.status = MonicStatus::WholeComponentMonic;
        return out;
    }
    candidates = ones.points;
    // lower coefficients take over where psi_top vanishes
    SolveResult drops = solve_system(curve, top, tol);
    if (drops.shared_component) out.incomplete = true;
    candidates.insert(candidates.end(), drops.points.begin(), drops.points.end());

    std::vector<CharacterPoint> monic;
    for (const auto &pt : candidates) {
        NumericTPoly num = twisted_alexander_numeric(ta, pt, tol);
        if (num.is_zero()) continue;
        NormalizedNumeric n = normalize_monic(num);
        if (!n.is_monic) continue;
        out.points.push_back({pt, n.degree, n.poly.leading()});
    }
    std::sort(out.points.begin(), out.points.end(),
              [](const MonicPoint &a, const MonicPoint &b) { return point_less(a.point, b.point); });
    return out;
}

MonicReport monic_characters(const KnotPresentation &p, double tol, const std::optional<XYPoly> &factor)
{
    MonicReport out = monic_characters(twisted_alexander_symbolic(p), tol, factor);
    if (auto *j = std::get_if<JParams>(&p.source())) {
        if (j->k != 2 * j->q && !is_fibered_member(j->k, j->q)) out.bound = bezout_bound(j->k, j->q);
    }
    return out;
}

std::vector<CharacterPoint> degree_drop_locus(const TwistedAlex &ta, double tol)
{
    std::vector<CharacterPoint> out;
    if (ta.is_zero() || ta.top().is_constant()) return out;
    SolveResult drops = solve_system(ta.riley.xy_form, ta.top(), tol);
    if (drops.shared_component)
        throw Error(ErrorKind::InvalidParams, "psi_top vanishes on a whole component of the variety");
    for (const auto &pt : drops.points) {
        NumericTPoly num = twisted_alexander_numeric(ta, pt, tol);
        if (num.is_zero() || normalize_monic(num).degree < ta.genus_bound) out.push_back(pt);
    }
    return out;
}

std::vector<CharacterPoint> degree_drop_locus(const KnotPresentation &p, double tol)
{
    return degree_drop_locus(twisted_alexander_symbolic(p), tol);
}

bool MetabelianReport::all_full_degree() const
{
    return !entries.empty() &&
           std::all_of(entries.begin(), entries.end(), [&](const SliceEntry &e) { return e.degree == expected_degree; });
}

MetabelianReport metabelian_slice(const TwistedAlex &ta, double tol)
{
    MetabelianReport out;
    out.expected_degree = ta.genus_bound;
    if (ta.is_zero()) return out;
    const XYPoly &phi = ta.riley.xy_form;
    for (Complex y0 : y_roots(phi, 0.0, tol)) {
        CharacterPoint pt{0.0, y0, std::abs(eval(phi, 0.0, y0))};
        NormalizedNumeric n = normalize_monic(twisted_alexander_numeric(ta, pt, tol));
        out.entries.push_back({pt, n.degree, n.poly.leading(), n.is_monic});
    }
    return out;
}

MetabelianReport metabelian_slice(const KnotPresentation &p, double tol)
{
    return metabelian_slice(twisted_alexander_symbolic(p), tol);
}

bool is_fibered_member(int k, int q)
{
    return k == 1 || (k == 3 && q > 0) || (k == 2 && std::abs(q) == 1);
}

long bezout_bound(int k, int q)
{
    if (k <= 0 || q == 0) throw Error(ErrorKind::InvalidParams, "J(k, 2q) needs k > 0 and q != 0");
    if (k == 2 * q) throw Error(ErrorKind::FiberedOrExcluded, "the bound does not apply when k = 2q");
    if (is_fibered_member(k, q))
        throw Error(ErrorKind::FiberedOrExcluded,
                    "J(" + std::to_string(k) + "," + std::to_string(2 * q) + ") is fibered: every character is monic");
    const long K = k;
    const long Q = std::labs(q);
    if (k % 2 == 0) return 2 * (K + 1) * (K + 1) * Q * Q - (K + 1) * (K + 4) * Q;
    return (K + 1) * (K - 1) * Q;
}

CriterionReport finiteness_criterion(long alpha, const MPoly &delta)
{
    CriterionReport out;
    out.alpha = alpha;
    out.c = classical_invariants(delta).leading_coeff;
    auto test_prime = [&](long p) {
        if (p == 2) return;
        PrimeVerdict v;
        v.p = p;
        Integer cm = out.c % p;
        if (cm < 0) cm += p;
        v.c_mod_p = cm.get_si();
        v.c2_mod_p = (v.c_mod_p * v.c_mod_p) % p;
        v.passes = v.c_mod_p != 0 && v.c2_mod_p != 1 && v.c2_mod_p != p - 1;
        out.overall = out.overall || v.passes;
        out.primes.push_back(v);
    };
    long n = std::labs(alpha);
    for (long p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        test_prime(p);
        while (n % p == 0) n /= p;
    }
    if (n > 1) test_prime(n);
    return out;
}

unsigned thread_count_from_env()
{
    if (const char *env = std::getenv("TALEX_THREADS")) {
        char *end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && v > 0) return static_cast<unsigned>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

FiberedReport fibered_and_genus_detect(const KnotPresentation &p, int samples, std::uint64_t seed, double tol,
                                       unsigned threads)
{
    if (samples < 1) throw Error(ErrorKind::InvalidParams, "samples must be at least 1");
    FiberedReport out;
    out.classical = classical_invariants(alexander_poly(p));
    const TwistedAlex ta = twisted_alexander_symbolic(p);

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<Complex> xs;
    for (int i = 0; i < samples; ++i) {
        const double r = 3.0 * std::sqrt(unit(rng));
        const double theta = 2.0 * std::numbers::pi * unit(rng);
        xs.push_back(std::polar(r, theta));
    }

    std::vector<std::vector<SliceEntry>> per_sample(xs.size());
    if (!ta.is_zero())
        parallel_for(xs.size(), threads, [&](std::size_t i) {
            for (Complex y0 : y_roots(ta.riley.xy_form, xs[i], tol)) {
                CharacterPoint pt{xs[i], y0, std::abs(eval(ta.riley.xy_form, xs[i], y0))};
                NumericTPoly num = twisted_alexander_numeric(ta, pt, tol);
                if (num.is_zero()) continue;
                NormalizedNumeric n = normalize_monic(num);
                per_sample[i].push_back({pt, n.degree, n.poly.leading(), n.is_monic});
            }
        });

    for (const auto &entries : per_sample)
        for (const auto &e : entries) {
            ++out.points_checked;
            ++out.degree_histogram[e.degree];
            if (!e.monic && !out.certificate) {
                out.certificate = e;
                out.verdict = FiberedVerdict::NonfiberedCertificate;
            }
        }
    if (!out.degree_histogram.empty()) {
        auto modal = std::max_element(out.degree_histogram.begin(), out.degree_histogram.end(),
                                      [](const auto &a, const auto &b) { return a.second < b.second; });
        out.genus_estimate = (modal->first + 2) / 4;
    }
    out.consistent_with_classical = out.genus_estimate == out.classical.genus &&
                                    (out.verdict == FiberedVerdict::ConsistentWithFibered) == out.classical.fibered;
    return out;
}

} // namespace talex
