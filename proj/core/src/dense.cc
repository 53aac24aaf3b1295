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

#include "wwqca/dense.h"

#include <sstream>

#include "wwqca/error.h"
#include "wwqca/laurent.h"

namespace wwqca {

Cyclo::Cyclo(int64_t K) : K_(K), c_(K, 0) {
}

Cyclo Cyclo::root(int64_t K, int64_t k) {
    Cyclo r(K);
    int64_t e = mod_floor(k, 2 * K);
    if (e < K) {
        r.c_[e] = 1;
    } else {
        r.c_[e - K] = -1;
    }
    return r;
}

Cyclo Cyclo::integer(int64_t K, int64_t v) {
    Cyclo r(K);
    r.c_[0] = v;
    return r;
}

bool Cyclo::is_zero() const {
    for (auto v : c_) {
        if (v != 0) {
            return false;
        }
    }
    return true;
}

Cyclo &Cyclo::operator+=(const Cyclo &o) {
    if (K_ != o.K_) {
        throw UsageError("cyclotomic order mismatch");
    }
    for (int64_t k = 0; k < K_; k++) {
        c_[k] += o.c_[k];
    }
    return *this;
}

Cyclo Cyclo::operator+(const Cyclo &o) const {
    Cyclo r = *this;
    r += o;
    return r;
}

Cyclo Cyclo::operator-(const Cyclo &o) const {
    Cyclo r = *this;
    for (int64_t k = 0; k < K_; k++) {
        r.c_[k] -= o.c_[k];
    }
    return r;
}

Cyclo Cyclo::operator*(const Cyclo &o) const {
    if (K_ != o.K_) {
        throw UsageError("cyclotomic order mismatch");
    }
    Cyclo r(K_);
    for (int64_t i = 0; i < K_; i++) {
        if (c_[i] == 0) {
            continue;
        }
        for (int64_t j = 0; j < K_; j++) {
            int64_t v = c_[i] * o.c_[j];
            if (v == 0) {
                continue;
            }
            int64_t e = i + j;
            if (e < K_) {
                r.c_[e] += v;
            } else {
                r.c_[e - K_] -= v;
            }
        }
    }
    return r;
}

Cyclo Cyclo::conj() const {
    // zeta^-k = -zeta^{K-k} for 0 < k < K.
    Cyclo r(K_);
    r.c_[0] = c_[0];
    for (int64_t k = 1; k < K_; k++) {
        r.c_[K_ - k] = -c_[k];
    }
    return r;
}

std::string Cyclo::str() const {
    std::ostringstream out;
    bool first = true;
    for (int64_t k = 0; k < K_; k++) {
        if (c_[k] == 0) {
            continue;
        }
        if (!first) {
            out << " + ";
        }
        first = false;
        out << c_[k];
        if (k) {
            out << " z^" << k;
        }
    }
    return first ? "0" : out.str();
}

DenseMatrix::DenseMatrix(int64_t K, size_t rows, size_t cols)
    : K_(K), rows_(rows), cols_(cols), data_(rows * cols, Cyclo(K)) {
}

DenseMatrix DenseMatrix::identity(int64_t K, size_t n) {
    DenseMatrix r(K, n, n);
    for (size_t k = 0; k < n; k++) {
        r.at(k, k) = Cyclo::integer(K, 1);
    }
    return r;
}

DenseMatrix DenseMatrix::monomial(int64_t K, const std::vector<size_t> &perm, const std::vector<int64_t> &phase) {
    DenseMatrix r(K, perm.size(), perm.size());
    for (size_t c = 0; c < perm.size(); c++) {
        r.at(perm[c], c) = Cyclo::root(K, phase[c]);
    }
    return r;
}

DenseMatrix DenseMatrix::operator*(const DenseMatrix &o) const {
    if (cols_ != o.rows_ || K_ != o.K_) {
        throw UsageError("dense shape mismatch");
    }
    DenseMatrix r(K_, rows_, o.cols_);
    for (size_t i = 0; i < rows_; i++) {
        for (size_t k = 0; k < cols_; k++) {
            const Cyclo &a = at(i, k);
            if (a.is_zero()) {
                continue;
            }
            for (size_t j = 0; j < o.cols_; j++) {
                const Cyclo &b = o.at(k, j);
                if (!b.is_zero()) {
                    r.at(i, j) += a * b;
                }
            }
        }
    }
    return r;
}

DenseMatrix DenseMatrix::scaled(const Cyclo &s) const {
    DenseMatrix r = *this;
    for (auto &v : r.data_) {
        v = v * s;
    }
    return r;
}

DenseMatrix DenseMatrix::kron(const DenseMatrix &o) const {
    DenseMatrix r(K_, rows_ * o.rows_, cols_ * o.cols_);
    for (size_t i = 0; i < rows_; i++) {
        for (size_t j = 0; j < cols_; j++) {
            const Cyclo &a = at(i, j);
            if (a.is_zero()) {
                continue;
            }
            for (size_t k = 0; k < o.rows_; k++) {
                for (size_t l = 0; l < o.cols_; l++) {
                    r.at(i * o.rows_ + k, j * o.cols_ + l) = a * o.at(k, l);
                }
            }
        }
    }
    return r;
}

DenseMatrix DenseMatrix::dagger() const {
    DenseMatrix r(K_, cols_, rows_);
    for (size_t i = 0; i < rows_; i++) {
        for (size_t j = 0; j < cols_; j++) {
            r.at(j, i) = at(i, j).conj();
        }
    }
    return r;
}

DenseMatrix DenseMatrix::pow(int64_t k) const {
    if (rows_ != cols_ || k < 0) {
        throw UsageError("pow needs a square matrix and k >= 0");
    }
    DenseMatrix r = identity(K_, rows_);
    for (int64_t i = 0; i < k; i++) {
        r = r * *this;
    }
    return r;
}

bool DenseMatrix::operator==(const DenseMatrix &o) const {
    return K_ == o.K_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

namespace dense_gates {

DenseMatrix shift(int64_t K, int64_t d) {
    std::vector<size_t> perm(d);
    std::vector<int64_t> ph(d, 0);
    for (int64_t a = 0; a < d; a++) {
        perm[a] = static_cast<size_t>((a + 1) % d);
    }
    return DenseMatrix::monomial(K, perm, ph);
}

DenseMatrix clock(int64_t K, int64_t d) {
    if ((2 * K) % d != 0) {
        throw UsageError("clock dimension must divide 2K");
    }
    std::vector<int64_t> e(d);
    for (int64_t a = 0; a < d; a++) {
        e[a] = a * (2 * K / d);
    }
    return diag_exponents(K, e);
}

DenseMatrix diag_exponents(int64_t K, const std::vector<int64_t> &e) {
    std::vector<size_t> perm(e.size());
    for (size_t a = 0; a < e.size(); a++) {
        perm[a] = a;
    }
    return DenseMatrix::monomial(K, perm, e);
}

DenseMatrix hadamard_unnormalized(int64_t K) {
    DenseMatrix h(K, 2, 2);
    h.at(0, 0) = Cyclo::integer(K, 1);
    h.at(0, 1) = Cyclo::integer(K, 1);
    h.at(1, 0) = Cyclo::integer(K, 1);
    h.at(1, 1) = Cyclo::integer(K, -1);
    return h;
}

}  // namespace dense_gates

}  // namespace wwqca
