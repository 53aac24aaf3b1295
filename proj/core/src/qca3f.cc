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

#include "wwqca/qca3f.h"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <utility>

#include "qca3f_data.h"
#include "wwqca/error.h"

namespace wwqca {

namespace {

constexpr size_t kSize = 12;
// Largest |exponent| in the shipped matrices (e.g. x y^2 z in F1).
constexpr int kShippedRadius = 2;
constexpr uint64_t kDataChecksum = 0x93fea60ab6df76e1ULL;

std::string trim(std::string_view s) {
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) {
        return "";
    }
    size_t e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> content_lines(std::string_view text) {
    std::vector<std::string> lines;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        std::string t = trim(line);
        if (!t.empty() && t[0] != '#') {
            lines.push_back(t);
        }
    }
    return lines;
}

}  // namespace

uint64_t fnv1a64(std::string_view data) {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

uint64_t qca3f_data_checksum() {
    return kDataChecksum;
}

Qca3f::Qca3f(SympMatrix matrix) : matrix_(std::move(matrix)) {
    if (matrix_.rows() != kSize || matrix_.cols() != kSize || matrix_.modulus() != 2) {
        throw UsageError("the 3-fermion QCA is a 12 x 12 matrix over F2");
    }
}

Qca3f Qca3f::load() {
    std::string_view text = detail::kQca3fMatrices;
    uint64_t h = fnv1a64(text);
    if (h != kDataChecksum) {
        std::ostringstream msg;
        msg << "qca3f data checksum mismatch: got 0x" << std::hex << h;
        throw IntegrityError(msg.str());
    }
    return parse(text);
}

Qca3f Qca3f::parse(std::string_view text) {
    SympMatrix m(2, kSize, kSize);
    int block = -1;
    size_t row = 0;
    std::vector<bool> seen(4, false);
    for (const std::string &line : content_lines(text)) {
        if (line.front() == '[') {
            static const char *names[] = {"[B1]", "[B2]", "[F1]", "[F2]"};
            block = -1;
            for (int b = 0; b < 4; b++) {
                if (line == names[b]) {
                    block = b;
                }
            }
            if (block < 0 || seen[block]) {
                throw UsageError("bad or repeated block header '" + line + "'");
            }
            seen[block] = true;
            row = 0;
            continue;
        }
        if (block < 0 || row >= kSize) {
            throw UsageError("unexpected line '" + line + "'");
        }
        std::vector<std::string> cells;
        std::string_view rest = line;
        while (true) {
            size_t bar = rest.find('|');
            cells.push_back(trim(rest.substr(0, bar)));
            if (bar == std::string_view::npos) {
                break;
            }
            rest = rest.substr(bar + 1);
        }
        if (cells.size() != 3) {
            throw UsageError("expected 3 entries in row '" + line + "'");
        }
        for (size_t c = 0; c < 3; c++) {
            m.at(row, 3 * block + c) = LaurentPoly::parse(cells[c], 2);
        }
        row++;
    }
    for (int b = 0; b < 4; b++) {
        if (!seen[b]) {
            throw UsageError("missing block in qca3f data");
        }
    }
    return Qca3f(std::move(m));
}

const LaurentPoly &Qca3f::entry(Qca3fBlock block, int row, int col) const {
    if (row < 1 || row > 12 || col < 1 || col > 3) {
        throw UsageError("block entry out of range");
    }
    return matrix_.at(row - 1, 3 * static_cast<int>(block) + col - 1);
}

LaurentPoly &Qca3f::entry(Qca3fBlock block, int row, int col) {
    return const_cast<LaurentPoly &>(std::as_const(*this).entry(block, row, col));
}

bool verify_square_identity(const SympMatrix &m) {
    return m.rows() == m.cols() && m * m == SympMatrix::identity(m.modulus(), m.rows());
}

bool verify_symplectic(const SympMatrix &m) {
    if (m.rows() != m.cols() || m.rows() % 2 != 0) {
        return false;
    }
    SympMatrix omega = SympMatrix::omega(m.modulus(), m.rows() / 2);
    return m.dagger() * omega * m == omega;
}

int propagation_radius(const SympMatrix &m) {
    int radius = 0;
    for (size_t r = 0; r < m.rows(); r++) {
        for (size_t c = 0; c < m.cols(); c++) {
            for (const auto &[e, coeff] : m.at(r, c).terms()) {
                for (int k = 0; k < 3; k++) {
                    radius = std::max(radius, std::abs(e[k]));
                }
            }
        }
    }
    return radius;
}

SympVec apply(const Qca3f &qca, const SympVec &v) {
    if (v.size() != kSize || v.modulus != 2) {
        throw UsageError("qca3f acts on 12-entry vectors over F2");
    }
    return qca.matrix() * v;
}

SympVec parse_qca3f_vector(std::string_view text) {
    auto lines = content_lines(text);
    if (lines.size() != kSize) {
        throw UsageError("expected 12 polynomial lines, got " + std::to_string(lines.size()));
    }
    return SympVec::from_strings(2, lines);
}

Report verify_qca3f(const Qca3f &qca) {
    Report r;
    r.expect(verify_square_identity(qca.matrix()), "qca3f.square", "M M = I12");
    r.expect(verify_symplectic(qca.matrix()), "qca3f.symplectic", "M^dagger Omega M = Omega");
    int radius = propagation_radius(qca.matrix());
    r.expect(radius <= kShippedRadius, "qca3f.local", "radius " + std::to_string(radius));
    return r;
}

}  // namespace wwqca
