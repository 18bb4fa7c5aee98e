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

#ifndef TALEX_UPOLY_HPP
#define TALEX_UPOLY_HPP

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "talex/sparse_poly.hpp"

namespace talex {

/// Dense univariate polynomial over the integers, coefficient i multiplies x^i.
class UPoly {
public:
    UPoly() = default;
    UPoly(long c) : coeffs_{Integer(c)} { trim(); }
    UPoly(const Integer &c) : coeffs_{c} { trim(); }
    UPoly(std::initializer_list<long> low_to_high);
    explicit UPoly(std::vector<Integer> low_to_high) : coeffs_(std::move(low_to_high)) { trim(); }

    static UPoly monomial(int degree, const Integer &c = 1);

    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// Throws ZeroPolynomial on the zero polynomial.
    int degree() const;
    const Integer &lead() const;
    const std::vector<Integer> &coeffs() const noexcept { return coeffs_; }
    Integer coeff(int i) const;

    UPoly operator-() const;
    UPoly &operator+=(const UPoly &o);
    UPoly &operator-=(const UPoly &o);
    UPoly &operator*=(const UPoly &o);
    friend UPoly operator+(UPoly a, const UPoly &b) { return a += b; }
    friend UPoly operator-(UPoly a, const UPoly &b) { return a -= b; }
    friend UPoly operator*(UPoly a, const UPoly &b) { return a *= b; }
    friend bool operator==(const UPoly &, const UPoly &) = default;

    UPoly pow(unsigned n) const;
    UPoly derivative() const;
    Integer content() const;
    UPoly primitive_part() const;
    Integer eval(const Integer &x) const;

    std::string to_string(char var = 'x') const;

private:
    void trim();
    std::vector<Integer> coeffs_;
};

/// Exact quotient of a by b over the integers; throws NonzeroRemainder if b
/// does not divide a in Z[x].
UPoly div_exact(const UPoly &a, const UPoly &b);

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) a = q b + r.
UPoly pseudo_remainder(const UPoly &a, const UPoly &b);

/// Primitive gcd in Z[x], normalized to a positive leading coefficient.
UPoly gcd(const UPoly &a, const UPoly &b);

/// Squarefree decomposition a = c * prod f_i^i; entry i-1 holds f_i (possibly 1).
std::vector<UPoly> squarefree_decomposition(const UPoly &a);

} // namespace talex

#endif
