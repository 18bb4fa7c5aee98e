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

#include "talex/twisted.hpp"

#include <algorithm>
#include <cmath>

#include "talex/error.hpp"

namespace talex {

namespace {

MPoly reduce_opt(const MPoly &p, const SyModulus *m) { return m ? m->reduce(p) : p; }

Mat2 reduce_opt(const Mat2 &x, const SyModulus *m) { return m ? x.reduced(*m) : x; }

} // namespace

Mat2 phi_map(const GroupRingElt &e, const RepMatrices &rep)
{
    Mat2 out{MPoly(), MPoly(), MPoly(), MPoly()};
    for (const auto &[w, c] : e.terms())
        out = out + rep.image(w).scaled(MPoly(Monomial{.t = w.exponent_sum()}, c));
    return out;
}

MPoly fox_numerator(const KnotPresentation &p, Generator g, const RepMatrices &rep, const SyModulus *m)
{
    // walk the relator once, keeping rho(prefix) and its exponent sum
    const char pos = static_cast<char>(g);
    const char neg = inverse_letter(pos);
    Mat2 acc{MPoly(), MPoly(), MPoly(), MPoly()};
    Mat2 prefix = Mat2::identity();
    int e = 0;
    for (char c : p.relator().letters()) {
        if (c == pos) acc = acc + prefix.scaled(t_pow(e));
        prefix = reduce_opt(prefix * rep.letter(c), m);
        e += c >= 'a' ? 1 : -1;
        if (c == neg) acc = acc - prefix.scaled(t_pow(e));
    }
    return reduce_opt(acc.det(), m);
}

MPoly fox_denominator(Generator g, const RepMatrices &rep)
{
    const Mat2 &X = rep.letter(static_cast<char>(g));
    return (Mat2::identity() - X.scaled(t_pow(1))).det();
}

int even_shift_for(int low)
{
    int parity = ((low % 2) + 2) % 2;
    return parity - low;
}

int TwistedAlex::degree() const
{
    if (coeffs.empty()) throw Error(ErrorKind::ZeroPolynomial, "twisted Alexander polynomial is zero");
    return coeffs.rbegin()->first;
}

int TwistedAlex::low_degree() const
{
    if (coeffs.empty()) throw Error(ErrorKind::ZeroPolynomial, "twisted Alexander polynomial is zero");
    return coeffs.begin()->first;
}

const XYPoly &TwistedAlex::top() const
{
    if (coeffs.empty()) throw Error(ErrorKind::ZeroPolynomial, "twisted Alexander polynomial is zero");
    return coeffs.rbegin()->second;
}

XYPoly TwistedAlex::coeff(int j) const
{
    auto it = coeffs.find(j);
    return it == coeffs.end() ? XYPoly() : it->second;
}

TwistedAlex twisted_alexander_symbolic(const KnotPresentation &p, Convention c, int column)
{
    if (column != 1 && column != 2) throw Error(ErrorKind::InvalidParams, "column must be 1 or 2");
    TwistedAlex out;
    out.riley = riley_poly(p, c);
    out.column = column;
    const auto inv = classical_invariants(alexander_poly(p));
    out.genus = inv.genus;
    out.genus_bound = 4 * inv.genus - 2;

    const SyModulus m = out.riley.sy_modulus();
    const RepMatrices rep = RepMatrices::make(c);
    const Generator num_gen = column == 2 ? Generator::a : Generator::b;
    const Generator den_gen = column == 2 ? Generator::b : Generator::a;
    out.denominator = fox_denominator(den_gen, rep);
    if (m.is_unit()) {
        // empty variety: keep the unreduced numerator for degree queries
        out.numerator = fox_numerator(p, num_gen, rep, nullptr);
        return out;
    }
    out.numerator = fox_numerator(p, num_gen, rep, &m);

    const MPoly quotient = div_exact_t(out.numerator, out.denominator, &m);
    const RileyModulus rm = out.riley.modulus();
    std::map<int, XYPoly> raw;
    for (auto &[j, slice] : t_slices(quotient)) {
        XYPoly q = rm.reduce(to_xy(slice));
        if (!q.is_zero()) raw.emplace(j, std::move(q));
    }
    if (!raw.empty()) out.normalization_shift = even_shift_for(raw.begin()->first);
    for (auto &[j, q] : raw) out.coeffs.emplace(j + out.normalization_shift, std::move(q));
    return out;
}

int psi_top_degree(const TwistedAlex &ta)
{
    if (!ta.is_zero()) return total_degree_xy(ta.top());
    const int hi = t_range(ta.numerator).second;
    return total_degree_xy(to_xy(coeff_t(ta.numerator, hi)));
}

bool NumericTPoly::is_negligible(int j) const
{
    auto it = coeffs.find(j);
    if (it == coeffs.end()) return true;
    double maxc = 0;
    for (const auto &[i, v] : coeffs) maxc = std::max(maxc, std::abs(v));
    double scale = maxc;
    if (auto s = scales.find(j); s != scales.end()) scale = std::max(scale, s->second);
    return !(std::abs(it->second) > tol * scale);
}

bool NumericTPoly::is_zero() const
{
    return std::all_of(coeffs.begin(), coeffs.end(), [&](const auto &kv) { return is_negligible(kv.first); });
}

int NumericTPoly::degree() const
{
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        if (!is_negligible(it->first)) return it->first;
    throw Error(ErrorKind::ZeroPolynomial, "numeric twisted Alexander polynomial vanishes");
}

int NumericTPoly::low_degree() const
{
    for (const auto &[j, v] : coeffs)
        if (!is_negligible(j)) return j;
    throw Error(ErrorKind::ZeroPolynomial, "numeric twisted Alexander polynomial vanishes");
}

Complex NumericTPoly::leading() const { return coeffs.at(degree()); }

NumericTPoly twisted_alexander_numeric(const TwistedAlex &ta, const CharacterPoint &pt, double tol)
{
    const XYPoly &phi = ta.riley.xy_form;
    const double residual = std::abs(eval(phi, pt.x, pt.y));
    const double scale = eval_scale(phi, pt.x, pt.y);
    if (!(residual <= tol * std::max(1.0, scale)))
        throw Error(ErrorKind::NotOnVariety, "|phi(x, y)| = " + std::to_string(residual) + " at the requested point");
    NumericTPoly out;
    out.tol = tol;
    for (const auto &[j, psi] : ta.coeffs) {
        out.coeffs[j] = eval(psi, pt.x, pt.y);
        out.scales[j] = eval_scale(psi, pt.x, pt.y);
    }
    return out;
}

NumericTPoly twisted_alexander_numeric(const KnotPresentation &p, const CharacterPoint &pt, double tol, Convention c)
{
    return twisted_alexander_numeric(twisted_alexander_symbolic(p, c), pt, tol);
}

NormalizedNumeric normalize_monic(const NumericTPoly &p)
{
    NormalizedNumeric out;
    const int lo = p.low_degree();
    out.shift = even_shift_for(lo);
    out.poly.tol = p.tol;
    for (const auto &[j, v] : p.coeffs) {
        if (p.is_negligible(j)) continue;
        out.poly.coeffs[j + out.shift] = v;
        if (auto s = p.scales.find(j); s != p.scales.end()) out.poly.scales[j + out.shift] = s->second;
    }
    out.degree = out.poly.degree();
    const Complex lead = out.poly.leading();
    double lead_scale = 1.0;
    if (auto s = out.poly.scales.find(out.degree); s != out.poly.scales.end()) lead_scale = std::max(1.0, s->second);
    out.is_monic = std::abs(lead - Complex(1.0)) <= p.tol * lead_scale;
    return out;
}

NormalizedSymbolic normalize_monic(const TwistedAlex &ta)
{
    NormalizedSymbolic out;
    out.shift = even_shift_for(ta.low_degree());
    out.degree = ta.degree() + out.shift;
    out.is_monic = ta.top() == XYPoly(1);
    return out;
}

bool reciprocality_check(const TwistedAlex &ta)
{
    if (ta.is_zero()) return true;
    const int lo = ta.low_degree();
    const int hi = ta.degree();
    for (int i = 0; lo + i <= hi - i; ++i)
        if (ta.coeff(lo + i) != ta.coeff(hi - i)) return false;
    return true;
}

WadaReport wada_check(const KnotPresentation &p, Convention c)
{
    const RileyPolynomial r = riley_poly(p, c);
    const SyModulus m = r.sy_modulus();
    const RepMatrices rep = RepMatrices::make(c);
    const MPoly lhs = m.reduce(fox_numerator(p, Generator::b, rep, &m) * fox_denominator(Generator::b, rep));
    const MPoly rhs = m.reduce(fox_numerator(p, Generator::a, rep, &m) * fox_denominator(Generator::a, rep));
    WadaReport out;
    if (lhs.is_zero() || rhs.is_zero()) {
        out.holds = lhs.is_zero() && rhs.is_zero();
        return out;
    }
    const int d = t_range(lhs).first - t_range(rhs).first;
    if (d % 2 != 0) return out;
    out.i = d / 2;
    out.holds = lhs == rhs * t_pow(d);
    return out;
}

bool ReducibleFormulaReport::all_pass() const
{
    return !roots.empty() &&
           std::all_of(roots.begin(), roots.end(), [](const ReducibleRootCheck &r) { return r.on_variety && r.matches; });
}

ReducibleFormulaReport reducible_formula_check(const KnotPresentation &p, double tol)
{
    ReducibleFormulaReport out;
    out.knot = p.name();
    out.alexander = alexander_poly(p);
    const auto [lo, hi] = t_range(out.alexander);
    if (hi == lo) throw Error(ErrorKind::InvalidParams, "Alexander polynomial is constant");
    std::vector<Integer> dcoef(static_cast<std::size_t>(hi) + 1);
    std::vector<Integer> d2(2 * static_cast<std::size_t>(hi) + 1);
    for (int j = 0; j <= hi; ++j) {
        dcoef[static_cast<std::size_t>(j)] = out.alexander.coeff(Monomial{.t = j});
        d2[2 * static_cast<std::size_t>(j)] = dcoef[static_cast<std::size_t>(j)];
    }

    const RileyPolynomial r = riley_poly(p, Convention::riley);
    const SyModulus m = r.sy_modulus();
    const MPoly detM = fox_numerator(p, Generator::a, RepMatrices::make(Convention::riley), &m);

    for (const auto &root : complex_roots(UPoly(d2))) {
        ReducibleRootCheck rc;
        rc.s0 = root.value;
        const Complex s0 = root.value;
        rc.phi_residual = std::abs(eval_sy(r.sy_form, s0, 2.0));
        rc.on_variety = rc.phi_residual <= tol * std::max(1.0, eval_scale(r.xy_form, s0 + 1.0 / s0, 2.0));

        // Delta(s0 t) Delta(t / s0)
        std::vector<Complex> a(dcoef.size()), b(dcoef.size());
        for (std::size_t j = 0; j < dcoef.size(); ++j) {
            a[j] = to_double(dcoef[j]) * std::pow(s0, static_cast<double>(j));
            b[j] = to_double(dcoef[j]) * std::pow(s0, -static_cast<double>(j));
        }
        std::map<int, Complex> expected;
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) expected[static_cast<int>(i + j)] += a[i] * b[j];

        std::map<int, Complex> actual = eval_t(detM, s0, 2.0);
        double scale = 1.0;
        for (const auto &[j, v] : expected) scale = std::max(scale, std::abs(v));
        auto first_significant = [&](const std::map<int, Complex> &f) {
            for (const auto &[j, v] : f)
                if (std::abs(v) > tol * scale) return j;
            return 0;
        };
        const int shift = first_significant(expected) - first_significant(actual);
        double err = 0;
        std::map<int, Complex> diff = expected;
        for (const auto &[j, v] : actual) diff[j + shift] -= v;
        for (const auto &[j, v] : diff) err = std::max(err, std::abs(v));
        rc.max_coeff_error = err;
        rc.matches = err <= tol * scale;
        int top = 0;
        for (const auto &[j, v] : actual)
            if (std::abs(v) > tol * scale) top = j;
        rc.det_monic = actual.count(top) && std::abs(actual[top] - Complex(1.0)) <= tol * scale;
        out.roots.push_back(rc);
    }
    return out;
}

} // namespace talex
