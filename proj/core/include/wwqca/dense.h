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

#ifndef WWQCA_DENSE_H
#define WWQCA_DENSE_H

#include <cstdint>
#include <string>
#include <vector>

namespace wwqca {

/// Element of Z[zeta] with zeta a primitive 2K-th root of unity, K a power of two,
/// stored in the basis 1, zeta, ..., zeta^{K-1} (so zeta^K = -1). Exact.
class Cyclo {
   public:
    explicit Cyclo(int64_t K = 1);
    static Cyclo root(int64_t K, int64_t k);  // zeta^k
    static Cyclo integer(int64_t K, int64_t v);

    int64_t order() const { return K_; }
    bool is_zero() const;
    Cyclo operator+(const Cyclo &o) const;
    Cyclo operator-(const Cyclo &o) const;
    Cyclo operator*(const Cyclo &o) const;
    Cyclo &operator+=(const Cyclo &o);
    /// Complex conjugate.
    Cyclo conj() const;
    bool operator==(const Cyclo &o) const { return K_ == o.K_ && c_ == o.c_; }
    bool operator!=(const Cyclo &o) const { return !(*this == o); }
    std::string str() const;

   private:
    int64_t K_;
    std::vector<int64_t> c_;
};

/// Dense square or rectangular matrix over Cyclo, used only as an oracle on
/// registers of a handful of sites.
class DenseMatrix {
   public:
    DenseMatrix(int64_t K, size_t rows, size_t cols);
    static DenseMatrix identity(int64_t K, size_t n);
    /// |c> -> zeta^{phase[c]} |perm[c]>.
    static DenseMatrix monomial(int64_t K, const std::vector<size_t> &perm, const std::vector<int64_t> &phase);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    int64_t order() const { return K_; }
    Cyclo &at(size_t r, size_t c) { return data_[r * cols_ + c]; }
    const Cyclo &at(size_t r, size_t c) const { return data_[r * cols_ + c]; }

    DenseMatrix operator*(const DenseMatrix &o) const;
    DenseMatrix scaled(const Cyclo &s) const;
    /// Kronecker product; this matrix is the more significant factor.
    DenseMatrix kron(const DenseMatrix &o) const;
    /// Conjugate transpose (zeta -> zeta^-1).
    DenseMatrix dagger() const;
    DenseMatrix pow(int64_t k) const;
    bool operator==(const DenseMatrix &o) const;
    bool operator!=(const DenseMatrix &o) const { return !(*this == o); }

   private:
    int64_t K_;
    size_t rows_, cols_;
    std::vector<Cyclo> data_;
};

/// Textbook matrices on one site of dimension d, with zeta = e^{i pi / K}.
namespace dense_gates {
DenseMatrix shift(int64_t K, int64_t d);                       // |a> -> |a+1>
DenseMatrix clock(int64_t K, int64_t d);                       // |a> -> e^{2 pi i a/d} |a>
DenseMatrix diag_exponents(int64_t K, const std::vector<int64_t> &e);  // zeta^{e[a]}
DenseMatrix hadamard_unnormalized(int64_t K);                  // [[1,1],[1,-1]]
}  // namespace dense_gates

}  // namespace wwqca

#endif
