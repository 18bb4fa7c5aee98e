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

#include "talex/polyring.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "talex/error.hpp"

namespace talex {

namespace {

using CLD = std::complex<long double>;

void append_factor(std::ostringstream &os, bool &any, char var, int e)
{
    if (e == 0) return;
    if (any) os << '*';
    os << var;
    if (e != 1) os << '^' << e;
    any = true;
}

template <class Poly, class Writer>
std::string render(const Poly &p, Writer &&write_monomial)
{
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    const auto &terms = p.terms();
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        const auto &[m, c] = *it;
        Integer mag = abs(c);
        if (first) os << (c < 0 ? "-" : "");
        else os << (c < 0 ? " - " : " + ");
        first = false;
        std::ostringstream mono;
        bool any = false;
        write_monomial(mono, any, m);
        if (!any) {
            os << mag.get_str();
        } else {
            if (mag != 1) os << mag.get_str() << '*';
            os << mono.str();
        }
    }
    return os.str();
}

template <class Poly>
int deg_y_impl(const Poly &p)
{
    if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "y-degree of the zero polynomial");
    int d = 0;
    for (const auto &[m, c] : p.terms()) d = std::max(d, m.y);
    return d;
}

template <class Poly>
Poly shift_y_impl(const Poly &p, long shift)
{
    using Mono = typename Poly::monomial_type;
    if (shift == 0 || p.is_zero()) return p;
    Mono ym{};
    ym.y = 1;
    Poly lin = Poly(ym, 1) + Poly(Integer(shift));
    int top = deg_y_impl(p);
    std::vector<Poly> powers{Poly(1)};
    for (int i = 1; i <= top; ++i) powers.push_back(powers.back() * lin);
    Poly out;
    std::vector<std::vector<typename Poly::Term>> by_y(static_cast<std::size_t>(top) + 1);
    for (const auto &[m, c] : p.terms()) {
        Mono r = m;
        r.y = 0;
        by_y[static_cast<std::size_t>(m.y)].emplace_back(r, c);
    }
    for (int i = 0; i <= top; ++i) {
        auto &slice = by_y[static_cast<std::size_t>(i)];
        if (slice.empty()) continue;
        out += Poly::from_terms(std::move(slice)) * powers[static_cast<std::size_t>(i)];
    }
    return out;
}

template <class Poly>
Poly substitute_y_impl(const Poly &p, long value)
{
    using Mono = typename Poly::monomial_type;
    std::vector<typename Poly::Term> out;
    out.reserve(p.size());
    for (const auto &[m, c] : p.terms()) {
        Mono r = m;
        r.y = 0;
        Integer v;
        mpz_pow_ui(v.get_mpz_t(), Integer(value).get_mpz_t(), static_cast<unsigned long>(m.y));
        out.emplace_back(r, c * v);
    }
    return Poly::from_terms(std::move(out));
}

} // namespace

double to_double(const Integer &c) { return c.get_d(); }

std::string to_string(const MPoly &p)
{
    return render(p, [](std::ostringstream &os, bool &any, const Monomial &m) {
        append_factor(os, any, 's', m.s);
        append_factor(os, any, 'y', m.y);
        append_factor(os, any, 't', m.t);
    });
}

std::string to_string(const XYPoly &p)
{
    return render(p, [](std::ostringstream &os, bool &any, const XYMonomial &m) {
        append_factor(os, any, 'x', m.x);
        append_factor(os, any, 'y', m.y);
    });
}

int deg_y(const MPoly &p) { return deg_y_impl(p); }
int deg_y(const XYPoly &p) { return deg_y_impl(p); }

MPoly coeff_t(const MPoly &p, int j)
{
    std::vector<MPoly::Term> out;
    for (const auto &[m, c] : p.terms())
        if (m.t == j) out.emplace_back(Monomial{m.s, m.y, 0}, c);
    return MPoly::from_terms(std::move(out));
}

std::pair<int, int> t_range(const MPoly &p)
{
    if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "t-range of the zero polynomial");
    auto [lo, hi] = p.exponent_box();
    return {lo[2], hi[2]};
}

std::map<int, MPoly> t_slices(const MPoly &p)
{
    std::map<int, std::vector<MPoly::Term>> raw;
    for (const auto &[m, c] : p.terms()) raw[m.t].emplace_back(Monomial{m.s, m.y, 0}, c);
    std::map<int, MPoly> out;
    for (auto &[j, terms] : raw) out.emplace(j, MPoly::from_terms(std::move(terms)));
    return out;
}

MPoly from_t_slices(const std::map<int, MPoly> &slices)
{
    std::vector<MPoly::Term> out;
    for (const auto &[j, poly] : slices)
        for (const auto &[m, c] : poly.terms()) out.emplace_back(Monomial{m.s, m.y, m.t + j}, c);
    return MPoly::from_terms(std::move(out));
}

bool has_t(const MPoly &p)
{
    return std::any_of(p.terms().begin(), p.terms().end(), [](const auto &term) { return term.first.t != 0; });
}

MPoly mirror_s(const MPoly &p)
{
    return p.map_monomials([](const Monomial &m) { return Monomial{-m.s, m.y, m.t}; });
}

MPoly shift_y(const MPoly &p, long shift) { return shift_y_impl(p, shift); }
XYPoly shift_y(const XYPoly &p, long shift) { return shift_y_impl(p, shift); }
MPoly substitute_y(const MPoly &p, long value) { return substitute_y_impl(p, value); }
XYPoly substitute_y(const XYPoly &p, long value) { return substitute_y_impl(p, value); }

UPoly power_sum_in_x(int n)
{
    if (n < 0) n = -n;
    UPoly prev(2);         // s^0 + s^0
    UPoly cur({0, 1});     // s + 1/s = x
    if (n == 0) return prev;
    const UPoly x({0, 1});
    for (int i = 2; i <= n; ++i) {
        UPoly next = x * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

XYPoly to_xy(const MPoly &p)
{
    if (has_t(p)) throw Error(ErrorKind::NotSymmetric, "polynomial depends on t");
    if (mirror_s(p) != p) throw Error(ErrorKind::NotSymmetric, "polynomial is not invariant under s -> 1/s");
    std::vector<XYPoly::Term> out;
    for (const auto &[m, c] : p.terms()) {
        if (m.s < 0) continue;
        if (m.s == 0) {
            out.emplace_back(XYMonomial{0, m.y}, c);
            continue;
        }
        // s^n and s^-n appear with the same coefficient: c (s^n + s^-n)
        UPoly ps = power_sum_in_x(m.s);
        for (int i = 0; i <= ps.degree(); ++i) {
            Integer k = ps.coeff(i);
            if (k != 0) out.emplace_back(XYMonomial{i, m.y}, c * k);
        }
    }
    return XYPoly::from_terms(std::move(out));
}

MPoly from_xy(const XYPoly &q)
{
    const MPoly x = s_pow(1) + s_pow(-1);
    std::vector<MPoly> xpow{MPoly(1)};
    MPoly out;
    for (const auto &[m, c] : q.terms()) {
        while (static_cast<int>(xpow.size()) <= m.x) xpow.push_back(xpow.back() * x);
        out += xpow[static_cast<std::size_t>(m.x)].scaled(Monomial{0, m.y, 0}, c);
    }
    return out;
}

int total_degree_xy(const XYPoly &p)
{
    if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "total degree of the zero polynomial");
    int d = 0;
    for (const auto &[m, c] : p.terms()) d = std::max(d, m.degree());
    return d;
}

// ---------------------------------------------------------------------------

template <class Mono>
MonicYModulus<Mono>::MonicYModulus(Poly phi) : phi_(std::move(phi))
{
    deg_y_ = deg_y_impl(phi_);
    std::vector<std::vector<typename Poly::Term>> raw(static_cast<std::size_t>(deg_y_) + 1);
    for (const auto &[m, c] : phi_.terms()) {
        Mono r = m;
        r.y = 0;
        raw[static_cast<std::size_t>(m.y)].emplace_back(r, c);
    }
    for (auto &terms : raw) slices_.push_back(Poly::from_terms(std::move(terms)));
    const Poly &lead = slices_.back();
    if (!lead.is_constant() || abs(lead.constant_term()) != 1)
        throw Error(ErrorKind::NonUnitLeading, "leading y-coefficient of the modulus is not +-1");
    lead_sign_ = lead.constant_term() > 0 ? 1 : -1;
}

template <class Mono>
typename MonicYModulus<Mono>::Poly MonicYModulus<Mono>::reduce(const Poly &p) const
{
    if (deg_y_ == 0) return {};
    if (p.is_zero()) return p;
    int top = deg_y_impl(p);
    if (top < deg_y_) return p;
    std::vector<std::vector<typename Poly::Term>> raw(static_cast<std::size_t>(top) + 1);
    for (const auto &[m, c] : p.terms()) {
        Mono r = m;
        r.y = 0;
        raw[static_cast<std::size_t>(m.y)].emplace_back(r, c);
    }
    std::vector<Poly> sl;
    sl.reserve(raw.size());
    for (auto &terms : raw) sl.push_back(Poly::from_terms(std::move(terms)));

    const auto d = static_cast<std::size_t>(deg_y_);
    for (std::size_t n = static_cast<std::size_t>(top); n >= d; --n) {
        if (sl[n].is_zero()) continue;
        Poly c = lead_sign_ > 0 ? sl[n] : Poly(-sl[n]);
        for (std::size_t j = 0; j < d; ++j)
            if (!slices_[j].is_zero()) sl[n - d + j] -= c * slices_[j];
        sl[n] = Poly();
    }
    std::vector<typename Poly::Term> out;
    for (std::size_t i = 0; i < d; ++i) {
        Mono ym{};
        ym.y = static_cast<int>(i);
        for (const auto &[m, c] : sl[i].terms()) out.emplace_back(m * ym, c);
    }
    return Poly::from_terms(std::move(out));
}

template class MonicYModulus<XYMonomial>;
template class MonicYModulus<Monomial>;

XYPoly reduce_mod(const XYPoly &p, const RileyModulus &m) { return m.reduce(p); }
MPoly reduce_mod(const MPoly &p, const SyModulus &m) { return m.reduce(p); }

MPoly div_exact_t(const MPoly &num, const MPoly &den, const SyModulus *m)
{
    if (den.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by the zero polynomial");
    auto den_slices = t_slices(den);
    const int dlo = den_slices.begin()->first;
    const int dhi = den_slices.rbegin()->first;
    if (den_slices.rbegin()->second != MPoly(1))
        throw Error(ErrorKind::NonUnitLeading, "denominator must have leading t-coefficient 1");

    auto reduce = [&](const MPoly &p) { return m ? m->reduce(p) : p; };
    std::map<int, MPoly> rem;
    for (auto &[j, c] : t_slices(num)) {
        MPoly r = reduce(c);
        if (!r.is_zero()) rem.emplace(j, std::move(r));
    }
    if (rem.empty()) return {};
    const int qlo = rem.begin()->first - dlo;

    std::map<int, MPoly> quotient;
    while (!rem.empty()) {
        const int top = rem.rbegin()->first;
        const int qexp = top - dhi;
        if (qexp < qlo) break;
        MPoly c = rem.rbegin()->second;
        for (const auto &[j, dj] : den_slices) {
            auto it = rem.find(qexp + j);
            MPoly updated = (it == rem.end() ? MPoly() : it->second) - c * dj;
            updated = reduce(updated);
            if (updated.is_zero()) {
                if (it != rem.end()) rem.erase(it);
            } else if (it != rem.end()) {
                it->second = std::move(updated);
            } else {
                rem.emplace(qexp + j, std::move(updated));
            }
        }
        quotient.emplace(qexp, std::move(c));
    }
    if (!rem.empty())
        throw Error(ErrorKind::NonzeroRemainder,
                    "remainder has " + std::to_string(rem.size()) + " nonzero t-coefficient(s)");
    return from_t_slices(quotient);
}

// ---------------------------------------------------------------------------

std::vector<UPoly> y_coefficients(const XYPoly &p)
{
    if (p.is_zero()) return {};
    int top = deg_y_impl(p);
    std::vector<std::vector<Integer>> raw(static_cast<std::size_t>(top) + 1);
    for (const auto &[m, c] : p.terms()) {
        auto &v = raw[static_cast<std::size_t>(m.y)];
        if (static_cast<int>(v.size()) <= m.x) v.resize(static_cast<std::size_t>(m.x) + 1);
        v[static_cast<std::size_t>(m.x)] = c;
    }
    std::vector<UPoly> out;
    out.reserve(raw.size());
    for (auto &v : raw) out.emplace_back(std::move(v));
    return out;
}

namespace {

using YPoly = std::vector<UPoly>; // over Z[x], low to high, no trailing zeros

void trim(YPoly &p)
{
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int ydeg(const YPoly &p) { return static_cast<int>(p.size()) - 1; }

YPoly yprem(const YPoly &a, const YPoly &b)
{
    YPoly rem = a;
    const int db = ydeg(b);
    const UPoly &lb = b.back();
    for (int i = ydeg(a); i >= db; --i) {
        UPoly top = rem[static_cast<std::size_t>(i)];
        for (auto &c : rem) c *= lb;
        for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= top * b[static_cast<std::size_t>(j)];
        rem.resize(static_cast<std::size_t>(i));
    }
    trim(rem);
    return rem;
}

} // namespace

UPoly resultant_y(const XYPoly &p, const XYPoly &q)
{
    if (p.is_zero() || q.is_zero()) return {};
    YPoly a = y_coefficients(p);
    YPoly b = y_coefficients(q);
    int sign = 1;
    if (ydeg(a) < ydeg(b)) {
        std::swap(a, b);
        if ((ydeg(a) % 2 == 1) && (ydeg(b) % 2 == 1)) sign = -sign;
    }
    if (ydeg(b) == 0) {
        UPoly r = b[0].pow(static_cast<unsigned>(ydeg(a)));
        return sign > 0 ? r : -r;
    }
    UPoly g(1);
    UPoly h(1);
    for (;;) {
        const int delta = ydeg(a) - ydeg(b);
        if ((ydeg(a) % 2 == 1) && (ydeg(b) % 2 == 1)) sign = -sign;
        YPoly r = yprem(a, b);
        a = std::move(b);
        if (r.empty()) return {};
        UPoly divisor = g * h.pow(static_cast<unsigned>(delta));
        for (auto &c : r) c = div_exact(c, divisor);
        b = std::move(r);
        g = a.back();
        if (delta > 0) h = div_exact(g.pow(static_cast<unsigned>(delta)), h.pow(static_cast<unsigned>(delta - 1)));
        if (ydeg(b) == 0) break;
    }
    const int da = ydeg(a);
    UPoly res = div_exact(b.back().pow(static_cast<unsigned>(da)), h.pow(static_cast<unsigned>(da - 1)));
    return sign > 0 ? res : -res;
}

// ---------------------------------------------------------------------------

namespace {

CLD ipow(CLD base, int e)
{
    if (e < 0) {
        base = CLD(1) / base;
        e = -e;
    }
    CLD r(1);
    while (e) {
        if (e & 1) r *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return r;
}

long double to_ld(const Integer &c)
{
    long exp = 0;
    double mant = mpz_get_d_2exp(&exp, c.get_mpz_t());
    return std::ldexp(static_cast<long double>(mant), static_cast<int>(exp));
}

} // namespace

Complex eval(const XYPoly &p, Complex x, Complex y)
{
    CLD acc(0);
    for (const auto &[m, c] : p.terms()) acc += to_ld(c) * ipow(CLD(x), m.x) * ipow(CLD(y), m.y);
    return Complex(static_cast<double>(acc.real()), static_cast<double>(acc.imag()));
}

double eval_scale(const XYPoly &p, Complex x, Complex y)
{
    long double acc = 0;
    for (const auto &[m, c] : p.terms())
        acc += std::fabs(to_ld(c)) * std::pow(static_cast<long double>(std::abs(x)), m.x) *
               std::pow(static_cast<long double>(std::abs(y)), m.y);
    return static_cast<double>(acc);
}

Complex eval_sy(const MPoly &p, Complex s, Complex y)
{
    auto values = eval_t(p, s, y);
    if (values.empty()) return 0.0;
    if (values.size() > 1 || values.begin()->first != 0)
        throw Error(ErrorKind::InvalidParams, "eval_sy on a polynomial with t");
    return values.begin()->second;
}

std::map<int, Complex> eval_t(const MPoly &p, Complex s, Complex y)
{
    if (s == Complex(0.0))
        for (const auto &[m, c] : p.terms())
            if (m.s < 0) throw Error(ErrorKind::DivisionByZero, "negative power of s at s = 0");
    std::map<int, CLD> acc;
    for (const auto &[m, c] : p.terms()) acc[m.t] += to_ld(c) * ipow(CLD(s), m.s) * ipow(CLD(y), m.y);
    std::map<int, Complex> out;
    for (const auto &[j, v] : acc) out[j] = Complex(static_cast<double>(v.real()), static_cast<double>(v.imag()));
    return out;
}

std::vector<Complex> partial_eval_x(const XYPoly &p, Complex x)
{
    if (p.is_zero()) return {};
    std::vector<CLD> acc(static_cast<std::size_t>(deg_y_impl(p)) + 1);
    for (const auto &[m, c] : p.terms()) acc[static_cast<std::size_t>(m.y)] += to_ld(c) * ipow(CLD(x), m.x);
    std::vector<Complex> out;
    out.reserve(acc.size());
    for (const auto &v : acc) out.emplace_back(static_cast<double>(v.real()), static_cast<double>(v.imag()));
    return out;
}

Complex eval(const UPoly &p, Complex x)
{
    CLD acc(0);
    const auto &c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * CLD(x) + to_ld(*it);
    return Complex(static_cast<double>(acc.real()), static_cast<double>(acc.imag()));
}

} // namespace talex
