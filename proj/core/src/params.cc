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

#include "wwqca/params.h"

#include "wwqca/error.h"

namespace wwqca {

int64_t make_m(int n) {
    if (n < 1 || n > 20) {
        throw UsageError("n must be in [1, 20]");
    }
    int64_t lead = (n % 2 == 0) ? 2 : 1;
    return (lead * (int64_t{1} << (n + 1)) - 1) / 3;
}

ModelParams ModelParams::make(int n) {
    ModelParams p;
    p.n = n;
    p.m = make_m(n);
    p.N = int64_t{1} << n;
    p.D = 2 * p.N;
    p.P = 4 * p.N;
    return p;
}

}  // namespace wwqca
