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

#include "talex/upoly.hpp"

#include <algorithm>
#include <sstream>

#include "talex/error.hpp"

namespace talex {

UPoly::UPoly(std::initializer_list<long> low_to_high)
{
    for (long c : low_to_high) coeffs_.emplace_back(c);
    trim();
}

UPoly UPoly::monomial(int degree, const Integer &c)
{
    std::vector<Integer> v(static_cast<std::size_t>(degree) + 1);
    v.back() = c;
    return UPoly(std::move(v));
}

void UPoly::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

int UPoly::degree() const
{
    if (coeffs_.empty()) throw Error(ErrorKind::ZeroPolynomial, "degree of the zero polynomial");
    return static_cast<int>(coeffs_.size()) - 1;
}

const Integer &UPoly::lead() const
{
    if (coeffs_.empty()) throw Error(ErrorKind::ZeroPolynomial, "leading coefficient of the zero polynomial");
    return coeffs_.back();
}

Integer UPoly::coeff(int i) const
{
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[static_cast<std::size_t>(i)];
}

UPoly UPoly::operator-() const
{
    UPoly out = *this;
    for (auto &c : out.coeffs_) c = -c;
    return out;
}

UPoly &UPoly::operator+=(const UPoly &o)
{
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

UPoly &UPoly::operator-=(const UPoly &o)
{
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

UPoly &UPoly::operator*=(const UPoly &o)
{
    if (is_zero() || o.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Integer> out(coeffs_.size() + o.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            mpz_addmul(out[i + j].get_mpz_t(), coeffs_[i].get_mpz_t(), o.coeffs_[j].get_mpz_t());
    }
    coeffs_ = std::move(out);
    trim();
    return *this;
}

UPoly UPoly::pow(unsigned n) const
{
    UPoly result(1);
    UPoly base = *this;
    while (n) {
        if (n & 1u) result *= base;
        n >>= 1u;
        if (n) base *= base;
    }
    return result;
}

UPoly UPoly::derivative() const
{
    if (coeffs_.size() <= 1) return {};
    std::vector<Integer> out(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
    return UPoly(std::move(out));
}

Integer UPoly::content() const
{
    Integer g = 0;
    for (const auto &c : coeffs_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

UPoly UPoly::primitive_part() const
{
    if (is_zero()) return {};
    Integer g = content();
    if (lead() < 0) g = -g;
    UPoly out = *this;
    for (auto &c : out.coeffs_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return out;
}

Integer UPoly::eval(const Integer &x) const
{
    Integer acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::string UPoly::to_string(char var) const
{
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const Integer &c = coeffs_[i];
        if (c == 0) continue;
        Integer mag = abs(c);
        if (first) os << (c < 0 ? "-" : "");
        else os << (c < 0 ? " - " : " + ");
        first = false;
        if (i == 0 || mag != 1) os << mag.get_str() << (i ? "*" : "");
        if (i >= 1) os << var;
        if (i >= 2) os << '^' << i;
    }
    return os.str();
}

UPoly div_exact(const UPoly &a, const UPoly &b)
{
    if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by the zero polynomial");
    if (a.is_zero()) return {};
    int da = a.degree();
    int db = b.degree();
    if (da < db) throw Error(ErrorKind::NonzeroRemainder, "exact division: divisor has larger degree");
    std::vector<Integer> rem = a.coeffs();
    std::vector<Integer> quo(static_cast<std::size_t>(da - db) + 1);
    const auto &bc = b.coeffs();
    const Integer &lb = b.lead();
    for (int i = da - db; i >= 0; --i) {
        Integer &top = rem[static_cast<std::size_t>(i + db)];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t()))
            throw Error(ErrorKind::NonzeroRemainder, "exact division: coefficient not divisible");
        Integer q;
        mpz_divexact(q.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
        for (int j = 0; j <= db; ++j)
            mpz_submul(rem[static_cast<std::size_t>(i + j)].get_mpz_t(), q.get_mpz_t(),
                       bc[static_cast<std::size_t>(j)].get_mpz_t());
        quo[static_cast<std::size_t>(i)] = std::move(q);
    }
    for (const auto &c : rem)
        if (c != 0) throw Error(ErrorKind::NonzeroRemainder, "exact division left a remainder");
    return UPoly(std::move(quo));
}

UPoly pseudo_remainder(const UPoly &a, const UPoly &b)
{
    if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "pseudo-remainder by zero");
    if (a.is_zero()) return {};
    int db = b.degree();
    std::vector<Integer> rem = a.coeffs();
    const auto &bc = b.coeffs();
    const Integer &lb = b.lead();
    int steps = a.degree() - db + 1;
    if (steps <= 0) return a;
    for (int i = a.degree(); i >= db; --i) {
        Integer top = rem[static_cast<std::size_t>(i)];
        for (auto &c : rem) c *= lb;
        for (int j = 0; j <= db; ++j)
            mpz_submul(rem[static_cast<std::size_t>(i - db + j)].get_mpz_t(), top.get_mpz_t(),
                       bc[static_cast<std::size_t>(j)].get_mpz_t());
        rem.resize(static_cast<std::size_t>(i));
    }
    return UPoly(std::move(rem));
}

UPoly gcd(const UPoly &a, const UPoly &b)
{
    if (a.is_zero()) return b.primitive_part();
    if (b.is_zero()) return a.primitive_part();
    UPoly u = a.primitive_part();
    UPoly v = b.primitive_part();
    if (u.degree() < v.degree()) std::swap(u, v);
    while (!v.is_zero()) {
        UPoly r = pseudo_remainder(u, v);
        u = std::move(v);
        v = r.primitive_part();
    }
    return u.primitive_part();
}

std::vector<UPoly> squarefree_decomposition(const UPoly &a)
{
    // Yun's algorithm on the primitive part.
    std::vector<UPoly> out;
    UPoly f = a.primitive_part();
    if (f.is_zero() || f.degree() == 0) return out;
    UPoly fp = f.derivative();
    UPoly g = gcd(f, fp);
    UPoly b = div_exact(f, g);
    UPoly c = div_exact(fp, g);
    UPoly d = c - b.derivative();
    while (b.degree() > 0) {
        UPoly h = gcd(b, d);
        out.push_back(h);
        b = div_exact(b, h);
        c = div_exact(d, h);
        d = c - b.derivative();
    }
    while (!out.empty() && out.back().degree() == 0) out.pop_back();
    return out;
}

} // namespace talex
