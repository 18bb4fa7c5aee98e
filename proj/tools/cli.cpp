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

#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <iostream>
#include <map>
#include <numbers>
#include <sstream>

#include <CLI11.hpp>

#include "talex/charvariety.hpp"
#include "talex/error.hpp"
#include "talex/parallel.hpp"
#include "talex/serialize.hpp"

namespace talex::cli {

namespace {

struct Options {
    std::string verb;
    std::string knot;
    double tol = default_tol;
    std::uint64_t seed = 0;
    int samples = 50;
    std::string convention = "riley";
    std::string format = "text";
    std::string factor;
    std::string at;
    std::string vars = "xy";
    std::string k_range = "1:6";
    std::string q_range = "-3:3";
    std::string perturb;
};

// A report failed its own verification; exit 2.
struct Verification {
    bool ok = true;
};

Json poly_json(const XYPoly &p)
{
    Json j = to_json(p);
    Json out;
    out["text"] = to_string(p);
    out["vars"] = j["vars"];
    out["terms"] = j["terms"];
    return out;
}

Json poly_json(const MPoly &p)
{
    Json j = to_json(p);
    Json out;
    out["text"] = to_string(p);
    out["vars"] = j["vars"];
    out["terms"] = j["terms"];
    return out;
}

Json point_json(const CharacterPoint &p)
{
    return {{"x", to_json(p.x)}, {"y", to_json(p.y)}, {"residual", p.residual}};
}

Json command_json(const Options &o)
{
    return {{"verb", o.verb},       {"knot", o.knot},       {"tol", o.tol},         {"seed", o.seed},
            {"samples", o.samples}, {"convention", o.convention}, {"format", o.format}, {"factor", o.factor},
            {"at", o.at},           {"vars", o.vars},       {"k", o.k_range},       {"q", o.q_range},
            {"perturb", o.perturb}};
}

KnotPresentation require_knot(const Options &o)
{
    if (o.knot.empty()) throw Error(ErrorKind::Parse, "--knot is required for " + o.verb);
    return parse_knot_spec(o.knot);
}

Complex parse_complex(std::string text)
{
    text.erase(std::remove(text.begin(), text.end(), ' '), text.end());
    auto number = [&](const std::string &s) {
        std::size_t used = 0;
        double v = 0;
        try {
            v = std::stod(s, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (used != s.size() || s.empty()) throw Error(ErrorKind::Parse, "bad number '" + s + "' in --at");
        return v;
    };
    if (text.empty()) throw Error(ErrorKind::Parse, "empty coordinate in --at");
    if (text.back() != 'i') return {number(text), 0.0};
    std::string body = text.substr(0, text.size() - 1);
    // split at the last sign that is not an exponent sign
    std::size_t split = std::string::npos;
    for (std::size_t i = body.size(); i-- > 1;)
        if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
            split = i;
            break;
        }
    auto imag_part = [&](const std::string &s) {
        if (s.empty() || s == "+") return 1.0;
        if (s == "-") return -1.0;
        return number(s);
    };
    if (split == std::string::npos) return {0.0, imag_part(body)};
    return {number(body.substr(0, split)), imag_part(body.substr(split))};
}

std::pair<int, int> parse_range(const std::string &text, const char *flag)
{
    auto colon = text.find(':');
    try {
        if (colon == std::string::npos) {
            int v = std::stoi(text);
            return {v, v};
        }
        return {std::stoi(text.substr(0, colon)), std::stoi(text.substr(colon + 1))};
    } catch (const std::exception &) {
        throw Error(ErrorKind::Parse, std::string("bad range '") + text + "' for " + flag + " (expected a:b)");
    }
}

long knot_alpha(const KnotPresentation &p)
{
    if (auto *s = std::get_if<TwoBridgeParams>(&p.source())) return s->alpha;
    if (auto *j = std::get_if<JParams>(&p.source())) return j_to_twobridge(j->k, 2 * j->q).alpha;
    MPoly d = alexander_poly(p);
    Integer v = 0;
    for (const auto &[m, c] : d.terms()) v += (m.t % 2 == 0) ? c : Integer(-c);
    return Integer(abs(v)).get_si();
}

int expected_phi_degree(int k, int q)
{
    if (q < 0) return (k + 1) * -q;
    if (k == 1) return 2 * q - 2;
    return (k + 1) * q - 1;
}

int expected_psi_degree(int k, int q)
{
    if (k % 2 == 0) return (k + 1) * std::abs(q) - (k + 4) / 2;
    if (k == 1 && q > 0) return 0;
    return q > 0 ? (k - 3) / 2 : (k - 1) / 2;
}

// ---------------------------------------------------------------------------
// verbs

Json verb_present(const Options &o, Verification &)
{
    KnotPresentation p = require_knot(o);
    Json r;
    r["name"] = p.name();
    r["pivot"] = p.pivot().to_string();
    r["relator"] = p.relator().to_string();
    r["relator_length"] = p.relator().length();
    r["exponent_sum"] = p.relator().exponent_sum();
    if (auto *j = std::get_if<JParams>(&p.source())) {
        try {
            auto tb = j_to_twobridge(j->k, 2 * j->q);
            r["two_bridge"] = {{"alpha", tb.alpha}, {"beta", tb.beta}};
        } catch (const Error &e) {
            r["two_bridge"] = std::string(to_string(e.kind()));
        }
    }
    return r;
}

Json verb_alexander(const Options &o, Verification &)
{
    KnotPresentation p = require_knot(o);
    MPoly d = alexander_poly(p);
    auto inv = classical_invariants(d);
    Json r;
    r["knot"] = p.name();
    r["alexander"] = poly_json(d);
    r["genus"] = inv.genus;
    r["fibered"] = inv.fibered;
    r["leading_coeff"] = inv.leading_coeff.get_str();
    r["determinant"] = knot_alpha(p);
    return r;
}

Json verb_riley(const Options &o, Verification &)
{
    KnotPresentation p = require_knot(o);
    RileyPolynomial rp = riley_poly(p, parse_convention(o.convention));
    Json r;
    r["knot"] = p.name();
    r["convention"] = std::string(to_string(rp.convention));
    if (o.vars == "sy") r["phi"] = poly_json(rp.sy_form);
    else if (o.vars == "xy") r["phi"] = poly_json(rp.xy_form);
    else throw Error(ErrorKind::Parse, "--vars must be sy or xy");
    r["total_degree"] = total_degree_xy(rp.xy_form);
    r["deg_y"] = deg_y(rp.xy_form);
    r["lead_sign"] = rp.modulus().lead_sign();
    return r;
}

Json verb_talex(const Options &o, Verification &)
{
    KnotPresentation p = require_knot(o);
    TwistedAlex ta = twisted_alexander_symbolic(p, parse_convention(o.convention));
    Json r;
    r["knot"] = p.name();
    r["convention"] = o.convention;
    r["modulus"] = poly_json(ta.riley.xy_form);
    r["genus"] = ta.genus;
    r["genus_bound"] = ta.genus_bound;
    r["normalization_shift"] = ta.normalization_shift;
    Json psis = Json::array();
    for (const auto &[j, psi] : ta.coeffs) psis.push_back({{"j", j}, {"psi", poly_json(psi)}});
    r["psi"] = psis;
    if (ta.is_zero()) {
        r["empty_variety"] = true;
    } else {
        auto n = normalize_monic(ta);
        r["degree"] = n.degree;
        r["monic"] = n.is_monic;
        r["reciprocal"] = reciprocality_check(ta);
    }
    if (!o.at.empty()) {
        auto comma = o.at.find(',');
        if (comma == std::string::npos) throw Error(ErrorKind::Parse, "--at expects x,y");
        CharacterPoint pt{parse_complex(o.at.substr(0, comma)), parse_complex(o.at.substr(comma + 1)), 0};
        pt.residual = std::abs(eval(ta.riley.xy_form, pt.x, pt.y));
        NormalizedNumeric n = normalize_monic(twisted_alexander_numeric(ta, pt, o.tol));
        Json coeffs = Json::array();
        for (const auto &[j, v] : n.poly.coeffs) coeffs.push_back({{"j", j}, {"value", to_json(v)}});
        r["at"] = {{"point", point_json(pt)},
                   {"coeffs", coeffs},
                   {"degree", n.degree},
                   {"leading", to_json(n.poly.leading())},
                   {"monic", n.is_monic}};
    }
    return r;
}

Json verb_monic(const Options &o, Verification &)
{
    KnotPresentation p = require_knot(o);
    std::optional<XYPoly> factor;
    if (!o.factor.empty()) {
        try {
            factor = xypoly_from_json(Json::parse(o.factor));
        } catch (const Json::exception &e) {
            throw Error(ErrorKind::Parse, std::string("--factor: ") + e.what());
        }
    }
    MonicReport m = monic_characters(p, o.tol, factor);
    Json r;
    r["knot"] = p.name();
    r["status"] = std::string(to_string(m.status));
    r["scope"] = m.scope;
    r["count"] = m.points.size();
    Json pts = Json::array();
    for (const auto &mp : m.points)
        pts.push_back({{"point", point_json(mp.point)},
                       {"leading_index", mp.leading_index},
                       {"leading_value", to_json(mp.leading_value)}});
    r["points"] = pts;
    if (m.bound) r["bound"] = *m.bound;
    else r["bound"] = nullptr;
    r["incomplete"] = m.incomplete;
    return r;
}

Json verb_degdrop(const Options &o, Verification &)
{
    KnotPresentation p = require_knot(o);
    auto pts = degree_drop_locus(p, o.tol);
    Json r;
    r["knot"] = p.name();
    r["count"] = pts.size();
    Json arr = Json::array();
    for (const auto &pt : pts) arr.push_back(point_json(pt));
    r["points"] = arr;
    return r;
}

Json verb_metabelian(const Options &o, Verification &v)
{
    KnotPresentation p = require_knot(o);
    MetabelianReport m = metabelian_slice(p, o.tol);
    Json r;
    r["knot"] = p.name();
    r["expected_degree"] = m.expected_degree;
    Json arr = Json::array();
    for (const auto &e : m.entries)
        arr.push_back({{"point", point_json(e.point)},
                       {"degree", e.degree},
                       {"leading", to_json(e.leading)},
                       {"monic", e.monic}});
    r["entries"] = arr;
    r["all_full_degree"] = m.all_full_degree();
    // full degree is only promised under the arithmetic hypothesis
    auto crit = finiteness_criterion(knot_alpha(p), alexander_poly(p));
    bool hypothesis = std::any_of(crit.primes.begin(), crit.primes.end(),
                                  [](const PrimeVerdict &pv) { return pv.c_mod_p != 0; });
    r["hypothesis_holds"] = hypothesis;
    if (hypothesis && !m.entries.empty() && !m.all_full_degree()) v.ok = false;
    return r;
}

Json verb_bound(const Options &o, Verification &)
{
    KnotPresentation p = require_knot(o);
    auto *j = std::get_if<JParams>(&p.source());
    if (!j) throw Error(ErrorKind::Parse, "bound needs a J:k,l knot");
    Json r;
    r["knot"] = p.name();
    try {
        r["status"] = "ok";
        r["bound"] = bezout_bound(j->k, j->q);
    } catch (const Error &e) {
        if (e.kind() != ErrorKind::FiberedOrExcluded) throw;
        r["status"] = "FiberedOrExcluded";
        r["bound"] = nullptr;
        r["explanation"] = e.what();
    }
    return r;
}

Json verb_criterion(const Options &o, Verification &)
{
    KnotPresentation p = require_knot(o);
    CriterionReport c = finiteness_criterion(knot_alpha(p), alexander_poly(p));
    Json r;
    r["knot"] = p.name();
    r["alpha"] = c.alpha;
    r["c"] = c.c.get_str();
    Json arr = Json::array();
    for (const auto &pv : c.primes)
        arr.push_back({{"p", pv.p}, {"c_mod_p", pv.c_mod_p}, {"c2_mod_p", pv.c2_mod_p}, {"passes", pv.passes}});
    r["primes"] = arr;
    r["overall"] = c.overall;
    return r;
}

Json verb_fibered(const Options &o, Verification &v)
{
    KnotPresentation p = require_knot(o);
    FiberedReport f = fibered_and_genus_detect(p, o.samples, o.seed, o.tol, thread_count_from_env());
    Json r;
    r["knot"] = p.name();
    r["verdict"] = std::string(to_string(f.verdict));
    if (f.genus_estimate) r["genus_estimate"] = *f.genus_estimate;
    else r["genus_estimate"] = nullptr;
    r["points_checked"] = f.points_checked;
    Json hist = Json::array();
    for (const auto &[d, n] : f.degree_histogram) hist.push_back({{"degree", d}, {"count", n}});
    r["degree_histogram"] = hist;
    if (f.certificate)
        r["certificate"] = {{"point", point_json(f.certificate->point)},
                            {"degree", f.certificate->degree},
                            {"leading", to_json(f.certificate->leading)}};
    else r["certificate"] = nullptr;
    r["classical"] = {{"genus", f.classical.genus},
                      {"fibered", f.classical.fibered},
                      {"leading_coeff", f.classical.leading_coeff.get_str()}};
    r["consistent_with_classical"] = f.consistent_with_classical;
    if (f.genus_estimate && !f.consistent_with_classical) v.ok = false;
    return r;
}

Json verb_degrees(const Options &o, Verification &v)
{
    auto [k0, k1] = parse_range(o.k_range, "--k");
    auto [q0, q1] = parse_range(o.q_range, "--q");
    if (k0 < 1 || k1 < k0 || q1 < q0) throw Error(ErrorKind::Parse, "empty or invalid --k/--q range");
    std::vector<std::pair<int, int>> cases;
    for (int k = k0; k <= k1; ++k)
        for (int q = q0; q <= q1; ++q)
            if (q != 0) cases.emplace_back(k, q);
    std::vector<Json> rows(cases.size());
    parallel_for(cases.size(), thread_count_from_env(), [&](std::size_t i) {
        auto [k, q] = cases[i];
        KnotPresentation p = j_relator(JParams::make(k, q));
        TwistedAlex ta = twisted_alexander_symbolic(p, Convention::shifted);
        int dphi = total_degree_xy(ta.riley.xy_form);
        int dpsi = psi_top_degree(ta);
        int ephi = expected_phi_degree(k, q);
        int epsi = expected_psi_degree(k, q);
        rows[i] = {{"k", k},         {"q", q},         {"deg_phi", dphi}, {"expected_phi", ephi},
                   {"deg_psi", dpsi}, {"expected_psi", epsi}, {"pass", dphi == ephi && dpsi == epsi}};
    });
    Json r;
    Json table = Json::array();
    bool all = true;
    for (auto &row : rows) {
        all = all && row["pass"].get<bool>();
        table.push_back(std::move(row));
    }
    r["rows"] = table;
    r["all_pass"] = all;
    v.ok = all;
    return r;
}

// ---------------------------------------------------------------------------
// goldens

MPoly golden_phi1() { return MPoly(1) + (s_pow(-2) + s_pow(2)) * y_pow(2) - y_pow(3); }

MPoly golden_phi2()
{
    return MPoly(1) - MPoly(2) * (s_pow(-2) + s_pow(2)) * y_pow(1) +
           (MPoly(3) * s_pow(-2) + MPoly(2) + MPoly(3) * s_pow(2)) * y_pow(2) -
           (s_pow(-2) + MPoly(3) + s_pow(2)) * y_pow(3) + y_pow(4);
}

XYPoly xy_term(long c, int ex, int ey) { return XYPoly(XYMonomial{ex, ey}, c); }

XYPoly golden_phi_52()
{
    return xy_term(1, 0, 0) + xy_term(-4, 2, 0) + xy_term(2, 4, 0) + xy_term(2, 0, 1) + xy_term(-1, 2, 1) +
           xy_term(-1, 4, 1) + xy_term(-1, 0, 2) + xy_term(2, 2, 2) + xy_term(-1, 0, 3);
}

bool close(Complex a, Complex b, double tol) { return std::abs(a.real() - b.real()) <= tol && std::abs(a.imag() - b.imag()) <= tol; }

bool same_points(const std::vector<CharacterPoint> &got, std::vector<std::pair<Complex, Complex>> want, double tol)
{
    if (got.size() != want.size()) return false;
    for (const auto &pt : got) {
        auto it = std::find_if(want.begin(), want.end(),
                               [&](const auto &w) { return close(pt.x, w.first, tol) && close(pt.y, w.second, tol); });
        if (it == want.end()) return false;
        want.erase(it);
    }
    return true;
}

Json verb_goldens(const Options &o, Verification &v)
{
    struct Item {
        std::string name;
        std::function<std::pair<bool, std::string>()> check;
    };
    MPoly phi1 = golden_phi1();
    if (o.perturb == "phi1") phi1 += y_pow(1);
    else if (!o.perturb.empty()) throw Error(ErrorKind::Parse, "--perturb accepts only phi1");

    const double r2 = 1.0 / std::numbers::sqrt2;
    const double r6 = 1.0 / std::sqrt(6.0);
    std::vector<Item> items = {
        {"7_4/factorization",
         [&] {
             auto r = riley_poly(parse_knot_spec("W:bAbABaBabAbABaBa"));
             auto unit = unit_multiple(r.sy_form, phi1 * golden_phi2());
             return std::pair{unit.has_value(), unit ? "unit " + std::to_string(unit->first) + "*s^" +
                                                          std::to_string(unit->second)
                                                    : std::string("not a unit multiple")};
         }},
        {"7_4/reducible-slice",
         [&] {
             MPoly d = alexander_poly(parse_knot_spec("K:15,11"));
             MPoly d_s2 = d.map_monomials([](Monomial m) { return Monomial{2 * m.t, 0, 0}; });
             bool ok = d == MPoly(4) * t_pow(2) - MPoly(7) * t_pow(1) + MPoly(4) &&
                       substitute_y(phi1, 2) == s_pow(-2) * d_s2;
             return std::pair{ok, "phi1(s,2) = " + to_string(substitute_y(phi1, 2))};
         }},
        {"5_2/phi",
         [&] {
             auto r = riley_poly(parse_knot_spec("K:7,3"));
             return std::pair{r.xy_form == golden_phi_52(), to_string(r.xy_form)};
         }},
        {"5_2/psi",
         [&] {
             auto ta = twisted_alexander_symbolic(parse_knot_spec("K:7,3"));
             XYPoly psi2 = xy_term(2, 2, 0) - xy_term(1, 2, 1) + xy_term(1, 0, 2);
             bool ok = ta.coeffs.size() == 3 && ta.coeff(2) == psi2 && ta.coeff(0) == psi2 &&
                       ta.coeff(1) == xy_term(-2, 1, 0);
             return std::pair{ok, "psi2 = " + to_string(ta.coeff(2)) + ", psi1 = " + to_string(ta.coeff(1))};
         }},
        {"5_2/monic",
         [&] {
             auto m = monic_characters(parse_knot_spec("K:7,3"));
             std::vector<CharacterPoint> pts;
             for (const auto &mp : m.points) pts.push_back(mp.point);
             bool ok = m.status == MonicStatus::FiniteSet && same_points(pts, {{-r2, 0.5}, {r2, 0.5}}, 1e-9);
             return std::pair{ok, std::to_string(pts.size()) + " points"};
         }},
        {"5_2/degree-drop",
         [&] {
             auto pts = degree_drop_locus(parse_knot_spec("K:7,3"));
             bool ok = same_points(pts, {{Complex(0, -r6), -2.0 / 3}, {Complex(0, r6), -2.0 / 3}}, 1e-9);
             return std::pair{ok, std::to_string(pts.size()) + " points"};
         }},
        {"5_2/psi2-zero-psi1-one",
         [&] {
             auto ta = twisted_alexander_symbolic(parse_knot_spec("K:7,3"));
             auto s = solve_system(ta.riley.xy_form, ta.coeff(2));
             int hits = 0;
             for (const auto &pt : s.points)
                 if (std::abs(eval(ta.coeff(1), pt.x, pt.y) - 1.0) < 1e-9) ++hits;
             return std::pair{!s.shared_component && hits == 0, std::to_string(hits) + " common points"};
         }},
        {"criterion/5_2-and-7_4",
         [&] {
             auto c74 = finiteness_criterion(15, alexander_poly(parse_knot_spec("K:15,11")));
             auto c52 = finiteness_criterion(7, alexander_poly(parse_knot_spec("K:7,3")));
             bool ok = !c74.overall && c74.c == 4 && c52.overall && c52.c == 2;
             return std::pair{ok, std::string("7_4 ") + (c74.overall ? "true" : "false") + ", 5_2 " +
                                      (c52.overall ? "true" : "false")};
         }},
        {"bound/k-equals-2q",
         [&] {
             try {
                 bezout_bound(4, 2);
             } catch (const Error &e) {
                 return std::pair{e.kind() == ErrorKind::FiberedOrExcluded, std::string(e.what())};
             }
             return std::pair{false, std::string("bound accepted k = 2q")};
         }},
        {"bound/J(2,4)",
         [&] {
             auto m = monic_characters(parse_knot_spec("J:2,4"));
             bool ok = m.bound && *m.bound == 36 && m.points.size() == 2;
             return std::pair{ok, std::to_string(m.points.size()) + " <= " + (m.bound ? std::to_string(*m.bound) : "?")};
         }},
    };
    Json arr = Json::array();
    bool all = true;
    for (const auto &item : items) {
        bool ok = false;
        std::string detail;
        try {
            std::tie(ok, detail) = item.check();
        } catch (const std::exception &e) {
            detail = e.what();
        }
        all = all && ok;
        arr.push_back({{"item", item.name}, {"pass", ok}, {"detail", detail}});
    }
    v.ok = all;
    return {{"items", arr}, {"all_pass", all}};
}

// ---------------------------------------------------------------------------
// text rendering

std::string scalar_text(const Json &j)
{
    if (j.is_string()) return j.get<std::string>();
    return j.dump();
}

bool is_complex(const Json &j) { return j.is_object() && j.size() == 2 && j.contains("re") && j.contains("im"); }

bool is_poly(const Json &j) { return j.is_object() && j.contains("text") && j.contains("terms"); }

bool is_flat(const Json &j)
{
    if (is_complex(j) || is_poly(j) || !j.is_structured()) return true;
    return false;
}

std::string flat_text(const Json &j)
{
    if (is_complex(j)) return scalar_text(j["re"]) + (j["im"].get<double>() < 0 ? " - " : " + ") +
                              scalar_text(Json(std::abs(j["im"].get<double>()))) + "i";
    if (is_poly(j)) return j["text"].get<std::string>();
    return scalar_text(j);
}

void render(const Json &j, std::ostream &os, int indent);

void render_table(const Json &arr, std::ostream &os, int indent)
{
    std::vector<std::string> cols;
    for (const auto &[k, val] : arr[0].items()) cols.push_back(k);
    std::vector<std::vector<std::string>> cells;
    std::vector<std::size_t> width(cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) width[c] = cols[c].size();
    for (const auto &row : arr) {
        std::vector<std::string> line;
        for (std::size_t c = 0; c < cols.size(); ++c) {
            line.push_back(row.contains(cols[c]) ? flat_text(row[cols[c]]) : "");
            width[c] = std::max(width[c], line.back().size());
        }
        cells.push_back(std::move(line));
    }
    auto emit = [&](const std::vector<std::string> &line) {
        os << std::string(static_cast<std::size_t>(indent), ' ');
        for (std::size_t c = 0; c < line.size(); ++c) {
            os << line[c];
            if (c + 1 < line.size()) os << std::string(width[c] - line[c].size() + 2, ' ');
        }
        os << '\n';
    };
    emit(cols);
    for (const auto &line : cells) emit(line);
}

void render(const Json &j, std::ostream &os, int indent)
{
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    if (j.is_object()) {
        for (const auto &[k, val] : j.items()) {
            if (is_flat(val)) {
                os << pad << k << ": " << flat_text(val) << '\n';
            } else {
                os << pad << k << ":\n";
                render(val, os, indent + 2);
            }
        }
        return;
    }
    if (j.is_array()) {
        if (j.empty()) {
            os << pad << "(none)\n";
            return;
        }
        bool table = std::all_of(j.begin(), j.end(), [](const Json &e) {
            return e.is_object() && !is_flat(e) &&
                   std::all_of(e.begin(), e.end(), [](const Json &x) { return is_flat(x); });
        });
        if (table) {
            render_table(j, os, indent);
            return;
        }
        for (const auto &e : j) {
            if (is_flat(e)) {
                os << pad << "- " << flat_text(e) << '\n';
            } else {
                os << pad << "-\n";
                render(e, os, indent + 2);
            }
        }
        return;
    }
    os << pad << flat_text(j) << '\n';
}

int exit_code_for(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::Parse:
    case ErrorKind::InvalidParams:
    case ErrorKind::NotAKnot:
    case ErrorKind::Unknot:
    case ErrorKind::NotOnVariety:
    case ErrorKind::NotSymmetric:
    case ErrorKind::NonUnitLeading:
        return exit_usage;
    default: return exit_failed;
    }
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    using Handler = Json (*)(const Options &, Verification &);
    const std::vector<std::pair<std::string, Handler>> verbs = {
        {"present", verb_present},     {"alexander", verb_alexander}, {"riley", verb_riley},
        {"talex", verb_talex},         {"monic", verb_monic},         {"degdrop", verb_degdrop},
        {"metabelian", verb_metabelian}, {"bound", verb_bound},       {"criterion", verb_criterion},
        {"fibered", verb_fibered},     {"degrees", verb_degrees},     {"goldens", verb_goldens},
    };

    Options o;
    CLI::App app{"Riley polynomials, twisted Alexander polynomials and monic characters of 2-bridge knots", "talex"};
    app.require_subcommand(1);
    std::map<std::string, CLI::App *> subs;
    for (const auto &[name, handler] : verbs) {
        CLI::App *sub = app.add_subcommand(name);
        sub->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
        if (name != "degrees" && name != "goldens") sub->add_option("--knot", o.knot, "K:alpha,beta | J:k,l | W:word");
        if (name == "riley" || name == "talex")
            sub->add_option("--convention", o.convention, "riley or shifted")->check(CLI::IsMember({"riley", "shifted"}));
        if (name == "riley") sub->add_option("--vars", o.vars, "sy or xy")->check(CLI::IsMember({"sy", "xy"}));
        if (name == "talex") sub->add_option("--at", o.at, "character point x,y (complex as a+bi)");
        if (name == "talex" || name == "monic" || name == "degdrop" || name == "metabelian" || name == "fibered")
            sub->add_option("--tol", o.tol, "numeric tolerance")->check(CLI::PositiveNumber);
        if (name == "monic") sub->add_option("--factor", o.factor, "restrict to a factor of phi (polynomial JSON)");
        if (name == "fibered") {
            sub->add_option("--samples", o.samples, "number of random x values")->check(CLI::PositiveNumber);
            sub->add_option("--seed", o.seed, "sampler seed");
        }
        if (name == "degrees") {
            sub->add_option("--k", o.k_range, "k range a:b");
            sub->add_option("--q", o.q_range, "q range a:b");
        }
        if (name == "goldens") sub->add_option("--perturb", o.perturb, "negative control: perturb a golden input");
        subs[name] = sub;
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }

    Handler handler = nullptr;
    for (const auto &[name, h] : verbs)
        if (subs[name]->parsed()) {
            o.verb = name;
            handler = h;
        }

    Json doc;
    doc["schema_version"] = schema_version;
    doc["command"] = command_json(o);
    Verification verification;
    try {
        doc["result"] = handler(o, verification);
    } catch (const Error &e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e.kind());
    }
    doc["verified"] = verification.ok;
    if (o.format == "json") out << doc.dump(2) << '\n';
    else render(doc, out, 0);
    return verification.ok ? exit_ok : exit_failed;
}

} // namespace talex::cli
