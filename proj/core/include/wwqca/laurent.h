// Copyright 2026 The wwqca Authors
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

#ifndef WWQCA_LAURENT_H
#define WWQCA_LAURENT_H

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "wwqca/error.h"

namespace wwqca {

/// Exponent triple (i, j, k) of the monomial x^i y^j z^k.
using Monomial = std::array<int, 3>;

/// Reduces v into [0, m).
inline int64_t mod_floor(int64_t v, int64_t m) {
    int64_t r = v % m;
    return r < 0 ? r + m : r;
}

/// Laurent polynomial in x, y, z with coefficients in Z_m.
///
/// Canonical form: no zero coefficients are stored, and terms are ordered
/// lexicographically by exponent triple. Equality is therefore structural.
class LaurentPoly {
   public:
    explicit LaurentPoly(int64_t modulus = 2);

    static LaurentPoly constant(int64_t modulus, int64_t c);
    static LaurentPoly monomial(int64_t modulus, Monomial e, int64_t c = 1);
    /// Parses text such as "2 x y^-1 + z^2", "xyz + x" or "x/y + 1/yz" (at most
    /// one '/' per term; everything after it divides).
    static LaurentPoly parse(std::string_view text, int64_t modulus);

    int64_t modulus() const { return modulus_; }
    const std::map<Monomial, int64_t> &terms() const { return terms_; }
    int64_t coeff(const Monomial &e) const;
    int64_t constant_term() const { return coeff({0, 0, 0}); }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Monomial &e, int64_t c);

    LaurentPoly operator+(const LaurentPoly &o) const;
    LaurentPoly operator-(const LaurentPoly &o) const;
    LaurentPoly operator*(const LaurentPoly &o) const;
    LaurentPoly operator-() const;
    LaurentPoly scaled(int64_t c) const;
    LaurentPoly &operator+=(const LaurentPoly &o);

    /// x^i y^j z^k -> x^-i y^-j z^-k.
    LaurentPoly antipode() const;
    /// Substitution x -> y -> z -> x, so x^i y^j z^k -> x^k y^i z^j.
    LaurentPoly cycle_variables() const;
    /// Same integer coefficients read in a different modulus (must divide or be used with care).
    LaurentPoly with_modulus(int64_t modulus) const;

    bool operator==(const LaurentPoly &o) const {
        return modulus_ == o.modulus_ && terms_ == o.terms_;
    }
    bool operator!=(const LaurentPoly &o) const { return !(*this == o); }

    std::string str() const;

   private:
    int64_t modulus_;
    std::map<Monomial, int64_t> terms_;
};

/// Translation-invariant Pauli data: 2q polynomial entries, X block then Z block.
struct SympVec {
    int64_t modulus = 2;
    std::vector<LaurentPoly> entries;

    SympVec() = default;
    SympVec(int64_t modulus, size_t size);
    static SympVec from_strings(int64_t modulus, const std::vector<std::string> &rows);

    size_t size() const { return entries.size(); }
    size_t qudits() const { return entries.size() / 2; }
    LaurentPoly &operator[](size_t k) { return entries[k]; }
    const LaurentPoly &operator[](size_t k) const { return entries[k]; }

    SympVec operator+(const SympVec &o) const;
    SympVec scaled(int64_t c) const;
    SympVec antipode() const;
    /// Cyclic relabeling x->y->z->x of variables and of the rows inside each block.
    SympVec cycle() const;
    bool is_zero() const;
    bool operator==(const SympVec &o) const {
        return modulus == o.modulus && entries == o.entries;
    }
};

/// u^dagger Omega v with Omega = [[0, I], [-I, 0]] and dagger = transpose plus antipode.
/// The constant term is the same-cell commutation exponent; other monomials give
/// the exponents against translated copies.
LaurentPoly symp_pair(const SympVec &u, const SympVec &v);

/// Dense matrix of Laurent polynomials.
class SympMatrix {
   public:
    SympMatrix(int64_t modulus, size_t rows, size_t cols);
    static SympMatrix identity(int64_t modulus, size_t n);
    /// [[0, I_q], [-I_q, 0]].
    static SympMatrix omega(int64_t modulus, size_t q);
    static SympMatrix from_columns(const std::vector<SympVec> &cols);

    int64_t modulus() const { return modulus_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    LaurentPoly &at(size_t r, size_t c) { return data_[r * cols_ + c]; }
    const LaurentPoly &at(size_t r, size_t c) const { return data_[r * cols_ + c]; }
    SympVec column(size_t c) const;

    SympMatrix operator*(const SympMatrix &o) const;
    SympMatrix operator+(const SympMatrix &o) const;
    SympVec operator*(const SympVec &v) const;
    /// Transpose combined with antipode of every entry.
    SympMatrix dagger() const;
    bool operator==(const SympMatrix &o) const;
    bool operator!=(const SympMatrix &o) const { return !(*this == o); }

   private:
    int64_t modulus_;
    size_t rows_, cols_;
    std::vector<LaurentPoly> data_;
};

}  // namespace wwqca

#endif
