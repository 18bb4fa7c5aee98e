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

#ifndef TALEX_TWISTED_HPP
#define TALEX_TWISTED_HPP

#include <map>
#include <string>
#include <vector>

#include "talex/riley.hpp"
#include "talex/roots.hpp"

namespace talex {

/// A numeric character (x, y) with its residual |phi(x, y)|.
struct CharacterPoint {
    Complex x;
    Complex y;
    double residual = 0;
};

/// Each word w goes to t^e(w) rho(w).
Mat2 phi_map(const GroupRingElt &e, const RepMatrices &rep);

/// det Phi(d r / d g), reduced modulo phi when a modulus is given. Column 2
/// of the Alexander matrix removed means g = a.
MPoly fox_numerator(const KnotPresentation &p, Generator g, const RepMatrices &rep, const SyModulus *m);

/// det Phi(1 - g) = 1 - (s + 1/s) t + t^2 for either generator.
MPoly fox_denominator(Generator g, const RepMatrices &rep);

/// Delta_{K,chi}(t) = sum psi_j(x, y) t^j, each psi_j reduced modulo phi.
struct TwistedAlex {
    std::map<int, XYPoly> coeffs;
    RileyPolynomial riley;
    int genus = 0;
    /// 4g - 2
    int genus_bound = 0;
    /// Exponent shift applied to the raw quotient; always even.
    int normalization_shift = 0;
    /// Column of the Alexander matrix that was removed.
    int column = 2;
    /// Reduced numerator det M_j in (s, y, t) before division.
    MPoly numerator;
    MPoly denominator;

    RileyModulus modulus() const { return riley.modulus(); }
    bool is_zero() const noexcept { return coeffs.empty(); }
    /// Highest exponent; throws ZeroPolynomial when empty.
    int degree() const;
    int low_degree() const;
    const XYPoly &top() const;
    XYPoly coeff(int j) const;
};

/// Wada's invariant with coefficients in Z[x, y]/(phi). column = 2 removes the
/// b-column (numerator from d r / d a), column = 1 removes the a-column.
TwistedAlex twisted_alexander_symbolic(const KnotPresentation &p, Convention c = Convention::riley, int column = 2);

/// Total degree of psi_top. On an empty variety (phi = +-1) the quotient ring
/// is zero and the top t-coefficient of the unreduced numerator is used.
int psi_top_degree(const TwistedAlex &ta);

/// Complex coefficients in t. Entries below the zero threshold count as zero
/// for degree and monic queries.
struct NumericTPoly {
    std::map<int, Complex> coeffs;
    /// Evaluation scale of each coefficient (sum of |terms|).
    std::map<int, double> scales;
    double tol = default_tol;

    bool is_negligible(int j) const;
    bool is_zero() const;
    /// Highest significant exponent; throws ZeroPolynomial.
    int degree() const;
    int low_degree() const;
    Complex leading() const;
};

/// Evaluates psi_j at pt. Throws NotOnVariety unless |phi(pt)| <= tol * max(1, scale).
NumericTPoly twisted_alexander_numeric(const TwistedAlex &ta, const CharacterPoint &pt, double tol = default_tol);
NumericTPoly twisted_alexander_numeric(const KnotPresentation &p, const CharacterPoint &pt, double tol = default_tol,
                                       Convention c = Convention::riley);

struct NormalizedNumeric {
    NumericTPoly poly;
    int shift = 0;
    int degree = 0;
    bool is_monic = false;
};

struct NormalizedSymbolic {
    int shift = 0;
    int degree = 0;
    /// psi_top reduces to the constant 1.
    bool is_monic = false;
};

/// Even shift so the lowest exponent lands in {0, 1}; monic means the leading
/// coefficient equals 1 (not -1). Throws ZeroPolynomial.
NormalizedNumeric normalize_monic(const NumericTPoly &p);
NormalizedSymbolic normalize_monic(const TwistedAlex &ta);

/// Even shift moving the lowest exponent into {0, 1}.
int even_shift_for(int low);

/// psi_{lo + i} = psi_{hi - i} exactly.
bool reciprocality_check(const TwistedAlex &ta);

struct WadaReport {
    bool holds = false;
    /// det M1 det Phi(1 - b) = t^(2i) det M2 det Phi(1 - a)
    int i = 0;
};

WadaReport wada_check(const KnotPresentation &p, Convention c = Convention::riley);

struct ReducibleRootCheck {
    Complex s0;
    double phi_residual = 0;
    double max_coeff_error = 0;
    bool on_variety = false;
    bool matches = false;
    bool det_monic = false;
};

struct ReducibleFormulaReport {
    std::string knot;
    MPoly alexander;
    std::vector<ReducibleRootCheck> roots;
    bool all_pass() const;
};

/// At every root s0 of Delta_K(s^2) compares det M at (s0, y = 2) with
/// Delta_K(s0 t) Delta_K(t / s0).
ReducibleFormulaReport reducible_formula_check(const KnotPresentation &p, double tol = 1e-8);

} // namespace talex

#endif
