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

#ifndef WWQCA_QCA3F_H
#define WWQCA_QCA3F_H

#include <cstdint>
#include <string>
#include <string_view>

#include "wwqca/laurent.h"
#include "wwqca/report.h"

namespace wwqca {

/// The 3-fermion QCA that squares to the identity, as a 12 x 12 matrix over
/// F2[x^+-1, y^+-1, z^+-1] with columns (B1 B2 F1 F2).
///
/// Coordinates 0-2 are Z on the first qubit of the x, y, z edges, 3-5 Z on the
/// second qubit, 6-8 X on the first and 9-11 X on the second. Column k is the
/// image of unit vector k, so B1 holds the images of Z_1, B2 of Z_2, F1 of X_1
/// and F2 of X_2.
enum class Qca3fBlock { B1 = 0, B2 = 1, F1 = 2, F2 = 3 };

class Qca3f {
   public:
    /// The shipped data; IntegrityError if its checksum does not match.
    static Qca3f load();
    /// Parses the block text format of core/data/qca3f_matrices.txt.
    static Qca3f parse(std::string_view text);
    explicit Qca3f(SympMatrix matrix);

    const SympMatrix &matrix() const { return matrix_; }
    /// 1-based row and column inside a block.
    const LaurentPoly &entry(Qca3fBlock block, int row, int col) const;
    LaurentPoly &entry(Qca3fBlock block, int row, int col);

   private:
    SympMatrix matrix_;
};

/// FNV-1a 64-bit hash.
uint64_t fnv1a64(std::string_view data);
/// Checksum the shipped data file must have.
uint64_t qca3f_data_checksum();

/// M M = I over F2.
bool verify_square_identity(const SympMatrix &m);
/// M^dagger Omega M = Omega with Omega = [[0, I6], [I6, 0]] over F2.
bool verify_symplectic(const SympMatrix &m);
/// Largest |exponent| of any variable in any entry: the image of a cell's
/// operators lies within this many cells in each direction.
int propagation_radius(const SympMatrix &m);

/// M v; UsageError unless v has 12 entries over F2.
SympVec apply(const Qca3f &qca, const SympVec &v);
/// Twelve polynomials, one per non-comment line.
SympVec parse_qca3f_vector(std::string_view text);

/// qca3f.square, qca3f.symplectic and qca3f.local (propagation radius at most 2).
Report verify_qca3f(const Qca3f &qca);

}  // namespace wwqca

#endif
