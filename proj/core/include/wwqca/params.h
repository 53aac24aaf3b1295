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

#ifndef WWQCA_PARAMS_H
#define WWQCA_PARAMS_H

#include <cstdint>

namespace wwqca {

/// Level data for the Z_{2N} models, N = 2^n.
///
/// Phases are exponents mod 4N in units of pi/(2N); the clock phase
/// omega = e^{i pi/N} is exponent 2.
struct ModelParams {
    int n = 1;
    int64_t N = 2;
    int64_t D = 4;      // qudit order 2N
    int64_t P = 8;      // phase modulus 4N
    int64_t m = 1;      // 3m = -1 mod 2N

    static ModelParams make(int n);
    bool operator==(const ModelParams &o) const { return n == o.n; }
    bool operator!=(const ModelParams &o) const { return n != o.n; }
};

/// m = ((3 + (-1)^n)/2 * 2^(n+1) - 1) / 3.
int64_t make_m(int n);

}  // namespace wwqca

#endif
