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

#ifndef WWQCA_ERROR_H
#define WWQCA_ERROR_H

#include <stdexcept>
#include <string>

namespace wwqca {

/// Bad arguments: mismatched moduli, shapes, lattice sizes, unknown names.
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A construction contract failed (e.g. a restriction that does not preserve the
/// pinned subspace, or no circuit labeling passes).
struct DefinitionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Embedded data does not match its recorded checksum.
struct IntegrityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// String operators do not close into a scalar.
struct GeometryError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace wwqca

#endif
