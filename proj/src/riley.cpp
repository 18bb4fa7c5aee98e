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

#include "talex/riley.hpp"

#include <algorithm>

#include "talex/error.hpp"

namespace talex {

std::string_view to_string(Convention c) noexcept { return c == Convention::riley ? "riley" : "shifted"; }

Convention parse_convention(std::string_view text)
{
    if (text == "riley") return Convention::riley;
    if (text == "shifted") return Convention::shifted;
    throw Error(ErrorKind::Parse, "unknown convention '" + std::string(text) + "' (riley|shifted)");
}

RepMatrices RepMatrices::make(Convention c)
{
    RepMatrices r;
    r.convention = c;
    r.C = {s_pow(1), MPoly(1), MPoly(), s_pow(-1)};
    MPoly lower = c == Convention::riley ? MPoly(2) - y_pow(1) : -y_pow(1);
    r.D = {s_pow(1), MPoly(), lower, s_pow(-1)};
    r.Cinv_ = r.C.adjugate();
    r.Dinv_ = r.D.adjugate();
    return r;
}

const Mat2 &RepMatrices::letter(char c) const
{
    switch (c) {
    case 'a': return C;
    case 'A': return Cinv_;
    case 'b': return D;
    case 'B': return Dinv_;
    default: throw Error(ErrorKind::Parse, std::string("invalid letter '") + c + "'");
    }
}

Mat2 RepMatrices::image(const Word &w) const
{
    Mat2 out = Mat2::identity();
    for (char c : w.letters()) out = out * letter(c);
    return out;
}

RileyPolynomial riley_poly(const KnotPresentation &p, Convention c)
{
    const Mat2 W = RepMatrices::make(c).image(p.pivot());
    RileyPolynomial r;
    r.sy_form = W.a11 + (s_pow(-1) - s_pow(1)) * W.a12;
    r.xy_form = to_xy(r.sy_form);
    r.convention = c;
    r.source = p.name();
    return r;
}

RileyPolynomial convention_shift(const RileyPolynomial &r)
{
    // shifted(y) = riley(y + 2)
    const long shift = r.convention == Convention::riley ? 2 : -2;
    RileyPolynomial out;
    out.sy_form = shift_y(r.sy_form, shift);
    out.xy_form = shift_y(r.xy_form, shift);
    out.convention = r.convention == Convention::riley ? Convention::shifted : Convention::riley;
    out.source = r.source;
    return out;
}

MPoly trace_poly(const Word &w, const RepMatrices &rep) { return rep.image(w).trace(); }

MPoly trace_power(const MPoly &tr, int q)
{
    q = std::abs(q);
    MPoly prev(2);
    if (q == 0) return prev;
    MPoly cur = tr;
    for (int i = 1; i < q; ++i) {
        MPoly next = tr * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

std::optional<std::pair<int, int>> unit_multiple(const MPoly &a, const MPoly &b)
{
    if (a.size() != b.size() || a.is_zero()) return std::nullopt;
    const auto &ta = a.terms();
    const auto &tb = b.terms();
    // a unit multiple only shifts s, so compare against the first term of b
    for (const auto &[ma, ca] : ta) {
        if (ma.y != tb.front().first.y || ma.t != tb.front().first.t) continue;
        if (abs(ca) != abs(tb.front().second)) continue;
        int sign = ca == tb.front().second ? 1 : -1;
        int j = ma.s - tb.front().first.s;
        if (b.scaled(Monomial{.s = j}, sign) == a) return std::pair{sign, j};
    }
    return std::nullopt;
}

bool RecursionReport::all_hold() const
{
    return std::all_of(entries.begin(), entries.end(), [](const RecursionEntry &e) { return e.holds; });
}

RecursionReport riley_recursion_check(int k, int q_max, Convention c)
{
    if (k <= 0) throw Error(ErrorKind::InvalidParams, "k must be positive");
    if (q_max < 2) throw Error(ErrorKind::InvalidParams, "q_max must be at least 2");
    const RepMatrices rep = RepMatrices::make(c);
    const Word wm = j_base_word(k);
    const MPoly tr = trace_poly(wm, rep);
    const int deg_tr = total_degree_xy(to_xy(tr));

    std::vector<MPoly> phi;
    phi.push_back(riley_poly(KnotPresentation::from_pivot(Word()), c).sy_form);
    for (int q = 1; q <= q_max; ++q) phi.push_back(riley_poly(j_relator(JParams::make(k, q)), c).sy_form);

    RecursionReport report;
    report.k = k;
    report.convention = c;
    for (int q = 2; q <= q_max; ++q) {
        const auto uq = static_cast<std::size_t>(q);
        RecursionEntry e;
        e.q = q;
        MPoly rhs = tr * phi[uq - 1] - phi[uq - 2];
        e.difference = phi[uq] - rhs;
        if (e.difference.is_zero()) {
            e.holds = e.exact = true;
        } else if (auto unit = unit_multiple(phi[uq], rhs)) {
            e.holds = true;
            e.unit_sign = unit->first;
            e.unit_s_power = unit->second;
        }
        e.deg_phi = total_degree_xy(to_xy(phi[uq]));
        e.deg_prev = total_degree_xy(to_xy(phi[uq - 1]));
        e.deg_trace = deg_tr;
        e.degree_additive = e.deg_phi == e.deg_prev + e.deg_trace;
        report.entries.push_back(std::move(e));
    }
    return report;
}

MPoly reducible_specialization(const RileyPolynomial &r)
{
    return substitute_y(r.sy_form, r.convention == Convention::riley ? 2 : 0);
}

} // namespace talex
