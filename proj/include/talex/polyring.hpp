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

#ifndef TALEX_POLYRING_HPP
#define TALEX_POLYRING_HPP

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "talex/sparse_poly.hpp"
#include "talex/upoly.hpp"

namespace talex {

/// Laurent in s and t, ordinary in y.
using MPoly = SparsePoly<Monomial>;
/// Ordinary polynomial in x = s + 1/s and y.
using XYPoly = SparsePoly<XYMonomial>;

using Complex = std::complex<double>;

// Variable shorthands.
inline MPoly s_pow(int e) { return MPoly(Monomial{.s = e}, 1); }
inline MPoly y_pow(int e) { return MPoly(Monomial{.y = e}, 1); }
inline MPoly t_pow(int e) { return MPoly(Monomial{.t = e}, 1); }
inline XYPoly x_pow_xy(int e) { return XYPoly(XYMonomial{.x = e}, 1); }
inline XYPoly y_pow_xy(int e) { return XYPoly(XYMonomial{.y = e}, 1); }

std::string to_string(const MPoly &p);
std::string to_string(const XYPoly &p);

// ---------------------------------------------------------------------------
// Slicing helpers

/// Degree in y; throws ZeroPolynomial on zero.
int deg_y(const MPoly &p);
int deg_y(const XYPoly &p);

/// Coefficient of t^j as a polynomial in (s, y).
MPoly coeff_t(const MPoly &p, int j);
/// Lowest and highest t-exponent; throws ZeroPolynomial on zero.
std::pair<int, int> t_range(const MPoly &p);
/// Map t-exponent -> coefficient in (s, y).
std::map<int, MPoly> t_slices(const MPoly &p);
MPoly from_t_slices(const std::map<int, MPoly> &slices);

bool has_t(const MPoly &p);

/// s -> 1/s.
MPoly mirror_s(const MPoly &p);
/// y -> y + shift, exactly.
MPoly shift_y(const MPoly &p, long shift);
XYPoly shift_y(const XYPoly &p, long shift);
/// y -> value.
MPoly substitute_y(const MPoly &p, long value);
XYPoly substitute_y(const XYPoly &p, long value);

// ---------------------------------------------------------------------------
// Symmetric forms

/// q(x, y) with q(s + 1/s, y) = p(s, y). Throws NotSymmetric unless p has no
/// t and p(s, y) = p(1/s, y).
XYPoly to_xy(const MPoly &p);
/// Substitutes x = s + 1/s.
MPoly from_xy(const XYPoly &q);

/// Maximum of e_x + e_y over terms; throws ZeroPolynomial on zero.
int total_degree_xy(const XYPoly &p);

/// Polynomial in x whose value is s^n + s^-n.
UPoly power_sum_in_x(int n);

// ---------------------------------------------------------------------------
// Reduction modulo a polynomial whose leading coefficient in y is +-1

/// Modulus for remainder division in y. The leading y-coefficient must be the
/// constant +-1, so division never leaves the integers.
template <class Mono>
class MonicYModulus {
public:
    using Poly = SparsePoly<Mono>;

    /// Throws NonUnitLeading if the leading y-coefficient is not +-1, and
    /// ZeroPolynomial on zero.
    explicit MonicYModulus(Poly phi);

    const Poly &poly() const noexcept { return phi_; }
    int deg_y() const noexcept { return deg_y_; }
    int lead_sign() const noexcept { return lead_sign_; }
    /// True when phi is +-1: the quotient ring is zero.
    bool is_unit() const noexcept { return deg_y_ == 0; }

    /// Remainder with y-degree below deg_y().
    Poly reduce(const Poly &p) const;

private:
    Poly phi_;
    int deg_y_ = 0;
    int lead_sign_ = 1;
    // phi split by y-degree, each slice with y exponent 0
    std::vector<Poly> slices_;
};

using RileyModulus = MonicYModulus<XYMonomial>;
using SyModulus = MonicYModulus<Monomial>;

extern template class MonicYModulus<XYMonomial>;
extern template class MonicYModulus<Monomial>;

XYPoly reduce_mod(const XYPoly &p, const RileyModulus &m);
MPoly reduce_mod(const MPoly &p, const SyModulus &m);

/// Quotient num / den where den has leading t-coefficient exactly 1. With a
/// modulus, coefficients live in Z[s^+-1, y]/(phi) and are reduced after every
/// step. Throws NonzeroRemainder if the remainder does not vanish.
MPoly div_exact_t(const MPoly &num, const MPoly &den, const SyModulus *m = nullptr);

// ---------------------------------------------------------------------------
// Elimination

/// Res_y(p, q) via the fraction-free subresultant remainder sequence.
UPoly resultant_y(const XYPoly &p, const XYPoly &q);

/// Coefficients of p as a polynomial in y over Z[x]; entry i multiplies y^i.
std::vector<UPoly> y_coefficients(const XYPoly &p);

// ---------------------------------------------------------------------------
// Numeric evaluation

Complex eval(const XYPoly &p, Complex x, Complex y);
/// Evaluation of a t-free MPoly. Throws DivisionByZero for s = 0 with
/// negative s-exponents.
Complex eval_sy(const MPoly &p, Complex s, Complex y);
/// Evaluates every t-coefficient at (s, y).
std::map<int, Complex> eval_t(const MPoly &p, Complex s, Complex y);
/// p(x, .) as complex coefficients, low to high in y.
std::vector<Complex> partial_eval_x(const XYPoly &p, Complex x);
Complex eval(const UPoly &p, Complex x);
/// Sum of |c| |x|^e |y|^f over terms, the natural scale for residuals.
double eval_scale(const XYPoly &p, Complex x, Complex y);

double to_double(const Integer &c);

} // namespace talex

#endif
