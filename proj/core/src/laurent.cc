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

#include "wwqca/laurent.h"

#include <cctype>
#include <sstream>

namespace wwqca {

namespace {

void require_same(int64_t a, int64_t b) {
    if (a != b) {
        throw UsageError("modulus mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
    }
}

}  // namespace

LaurentPoly::LaurentPoly(int64_t modulus) : modulus_(modulus) {
    if (modulus < 2) {
        throw UsageError("modulus must be at least 2");
    }
}

LaurentPoly LaurentPoly::constant(int64_t modulus, int64_t c) {
    return monomial(modulus, {0, 0, 0}, c);
}

LaurentPoly LaurentPoly::monomial(int64_t modulus, Monomial e, int64_t c) {
    LaurentPoly p(modulus);
    p.add_term(e, c);
    return p;
}

int64_t LaurentPoly::coeff(const Monomial &e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? 0 : it->second;
}

void LaurentPoly::add_term(const Monomial &e, int64_t c) {
    auto &slot = terms_[e];
    slot = mod_floor(slot + mod_floor(c, modulus_), modulus_);
    if (slot == 0) {
        terms_.erase(e);
    }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly &o) const {
    LaurentPoly r = *this;
    r += o;
    return r;
}

LaurentPoly &LaurentPoly::operator+=(const LaurentPoly &o) {
    require_same(modulus_, o.modulus_);
    for (const auto &[e, c] : o.terms_) {
        add_term(e, c);
    }
    return *this;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly &o) const {
    return *this + (-o);
}

LaurentPoly LaurentPoly::operator-() const {
    return scaled(-1);
}

LaurentPoly LaurentPoly::scaled(int64_t c) const {
    LaurentPoly r(modulus_);
    for (const auto &[e, v] : terms_) {
        r.add_term(e, v * mod_floor(c, modulus_));
    }
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly &o) const {
    require_same(modulus_, o.modulus_);
    LaurentPoly r(modulus_);
    for (const auto &[e1, c1] : terms_) {
        for (const auto &[e2, c2] : o.terms_) {
            r.add_term({e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]}, c1 * c2);
        }
    }
    return r;
}

LaurentPoly LaurentPoly::antipode() const {
    LaurentPoly r(modulus_);
    for (const auto &[e, c] : terms_) {
        r.add_term({-e[0], -e[1], -e[2]}, c);
    }
    return r;
}

LaurentPoly LaurentPoly::cycle_variables() const {
    LaurentPoly r(modulus_);
    for (const auto &[e, c] : terms_) {
        r.add_term({e[2], e[0], e[1]}, c);
    }
    return r;
}

LaurentPoly LaurentPoly::with_modulus(int64_t modulus) const {
    LaurentPoly r(modulus);
    for (const auto &[e, c] : terms_) {
        r.add_term(e, c);
    }
    return r;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream out;
    bool first = true;
    static const char names[3] = {'x', 'y', 'z'};
    for (const auto &[e, c] : terms_) {
        if (!first) {
            out << " + ";
        }
        first = false;
        bool unit = e == Monomial{0, 0, 0};
        bool need_space = false;
        if (c != 1 || unit) {
            out << c;
            need_space = true;
        }
        for (int k = 0; k < 3; k++) {
            if (e[k] == 0) {
                continue;
            }
            if (need_space) {
                out << ' ';
            }
            out << names[k];
            if (e[k] != 1) {
                out << '^' << e[k];
            }
            need_space = true;
        }
    }
    return out.str();
}

// Grammar: poly := term (('+' | '-') term)*, term := factor*, factor := integer |
// ('x'|'y'|'z') ('^' '-'? digits)?. Whitespace and '*' between factors are ignored.
LaurentPoly LaurentPoly::parse(std::string_view text, int64_t modulus) {
    LaurentPoly result(modulus);
    size_t i = 0;
    auto skip = [&]() {
        while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == '*')) {
            i++;
        }
    };
    auto read_int = [&]() -> int64_t {
        size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            i++;
        }
        if (start == i) {
            throw UsageError("expected digits in polynomial '" + std::string(text) + "'");
        }
        return std::stoll(std::string(text.substr(start, i - start)));
    };
    int sign = 1;
    skip();
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        sign = text[i] == '-' ? -1 : 1;
        i++;
    }
    while (true) {
        int64_t coeff = 1;
        Monomial e{0, 0, 0};
        bool any = false;
        int side = 1;  // -1 after '/': later factors divide
        while (true) {
            skip();
            if (i >= text.size() || text[i] == '+' || text[i] == '-') {
                break;
            }
            char ch = text[i];
            if (ch == '/' && any && side == 1) {
                side = -1;
                i++;
                continue;
            }
            if (std::isdigit(static_cast<unsigned char>(ch))) {
                int64_t c = read_int();
                if (side == -1 && c != 1) {
                    throw UsageError("only monomial denominators are supported in '" + std::string(text) + "'");
                }
                coeff *= c;
            } else if (ch == 'x' || ch == 'y' || ch == 'z') {
                i++;
                int64_t p = 1;
                if (i < text.size() && text[i] == '^') {
                    i++;
                    int s = 1;
                    if (i < text.size() && text[i] == '-') {
                        s = -1;
                        i++;
                    }
                    p = s * read_int();
                }
                e[ch - 'x'] += side * static_cast<int>(p);
            } else {
                throw UsageError("unexpected character '" + std::string(1, ch) + "' in polynomial");
            }
            any = true;
        }
        if (!any) {
            throw UsageError("empty term in polynomial '" + std::string(text) + "'");
        }
        if (!(coeff == 0 && e == Monomial{0, 0, 0})) {
            result.add_term(e, sign * coeff);
        }
        if (i >= text.size()) {
            break;
        }
        sign = text[i] == '-' ? -1 : 1;
        i++;
    }
    return result;
}

SympVec::SympVec(int64_t modulus, size_t size)
    : modulus(modulus), entries(size, LaurentPoly(modulus)) {
}

SympVec SympVec::from_strings(int64_t modulus, const std::vector<std::string> &rows) {
    SympVec v(modulus, rows.size());
    for (size_t k = 0; k < rows.size(); k++) {
        v.entries[k] = LaurentPoly::parse(rows[k], modulus);
    }
    return v;
}

SympVec SympVec::operator+(const SympVec &o) const {
    require_same(modulus, o.modulus);
    if (size() != o.size()) {
        throw UsageError("vector size mismatch");
    }
    SympVec r = *this;
    for (size_t k = 0; k < size(); k++) {
        r.entries[k] += o.entries[k];
    }
    return r;
}

SympVec SympVec::scaled(int64_t c) const {
    SympVec r = *this;
    for (auto &p : r.entries) {
        p = p.scaled(c);
    }
    return r;
}

SympVec SympVec::antipode() const {
    SympVec r = *this;
    for (auto &p : r.entries) {
        p = p.antipode();
    }
    return r;
}

SympVec SympVec::cycle() const {
    size_t q = qudits();
    SympVec r(modulus, size());
    for (size_t blk = 0; blk < 2; blk++) {
        for (size_t k = 0; k < q; k++) {
            r.entries[blk * q + (k + 1) % q] = entries[blk * q + k].cycle_variables();
        }
    }
    return r;
}

bool SympVec::is_zero() const {
    for (const auto &p : entries) {
        if (!p.is_zero()) {
            return false;
        }
    }
    return true;
}

LaurentPoly symp_pair(const SympVec &u, const SympVec &v) {
    require_same(u.modulus, v.modulus);
    if (u.size() != v.size() || u.size() % 2 != 0) {
        throw UsageError("symp_pair needs equal even-length vectors");
    }
    size_t q = u.qudits();
    LaurentPoly r(u.modulus);
    for (size_t d = 0; d < q; d++) {
        r += u[d].antipode() * v[q + d];
        r += -(u[q + d].antipode() * v[d]);
    }
    return r;
}

SympMatrix::SympMatrix(int64_t modulus, size_t rows, size_t cols)
    : modulus_(modulus), rows_(rows), cols_(cols), data_(rows * cols, LaurentPoly(modulus)) {
}

SympMatrix SympMatrix::identity(int64_t modulus, size_t n) {
    SympMatrix r(modulus, n, n);
    for (size_t k = 0; k < n; k++) {
        r.at(k, k) = LaurentPoly::constant(modulus, 1);
    }
    return r;
}

SympMatrix SympMatrix::omega(int64_t modulus, size_t q) {
    SympMatrix r(modulus, 2 * q, 2 * q);
    for (size_t k = 0; k < q; k++) {
        r.at(k, q + k) = LaurentPoly::constant(modulus, 1);
        r.at(q + k, k) = LaurentPoly::constant(modulus, -1);
    }
    return r;
}

SympMatrix SympMatrix::from_columns(const std::vector<SympVec> &cols) {
    if (cols.empty()) {
        throw UsageError("no columns");
    }
    SympMatrix r(cols[0].modulus, cols[0].size(), cols.size());
    for (size_t c = 0; c < cols.size(); c++) {
        require_same(cols[c].modulus, r.modulus_);
        if (cols[c].size() != r.rows_) {
            throw UsageError("ragged columns");
        }
        for (size_t k = 0; k < r.rows_; k++) {
            r.at(k, c) = cols[c][k];
        }
    }
    return r;
}

SympVec SympMatrix::column(size_t c) const {
    SympVec v(modulus_, rows_);
    for (size_t k = 0; k < rows_; k++) {
        v[k] = at(k, c);
    }
    return v;
}

SympMatrix SympMatrix::operator*(const SympMatrix &o) const {
    require_same(modulus_, o.modulus_);
    if (cols_ != o.rows_) {
        throw UsageError("matrix shape mismatch");
    }
    SympMatrix r(modulus_, rows_, o.cols_);
    for (size_t i = 0; i < rows_; i++) {
        for (size_t k = 0; k < cols_; k++) {
            const auto &a = at(i, k);
            if (a.is_zero()) {
                continue;
            }
            for (size_t j = 0; j < o.cols_; j++) {
                const auto &b = o.at(k, j);
                if (!b.is_zero()) {
                    r.at(i, j) += a * b;
                }
            }
        }
    }
    return r;
}

SympMatrix SympMatrix::operator+(const SympMatrix &o) const {
    require_same(modulus_, o.modulus_);
    if (rows_ != o.rows_ || cols_ != o.cols_) {
        throw UsageError("matrix shape mismatch");
    }
    SympMatrix r = *this;
    for (size_t k = 0; k < data_.size(); k++) {
        r.data_[k] += o.data_[k];
    }
    return r;
}

SympVec SympMatrix::operator*(const SympVec &v) const {
    require_same(modulus_, v.modulus);
    if (v.size() != cols_) {
        throw UsageError("matrix-vector shape mismatch");
    }
    SympVec r(modulus_, rows_);
    for (size_t i = 0; i < rows_; i++) {
        for (size_t k = 0; k < cols_; k++) {
            if (!at(i, k).is_zero() && !v[k].is_zero()) {
                r[i] += at(i, k) * v[k];
            }
        }
    }
    return r;
}

SympMatrix SympMatrix::dagger() const {
    SympMatrix r(modulus_, cols_, rows_);
    for (size_t i = 0; i < rows_; i++) {
        for (size_t j = 0; j < cols_; j++) {
            r.at(j, i) = at(i, j).antipode();
        }
    }
    return r;
}

bool SympMatrix::operator==(const SympMatrix &o) const {
    return modulus_ == o.modulus_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

}  // namespace wwqca
