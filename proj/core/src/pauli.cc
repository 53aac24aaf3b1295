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

#include "wwqca/pauli.h"

#include <sstream>

namespace wwqca {

PauliOp::PauliOp(const ModelParams &params) : params_(params), phase_(0) {
}

PauliOp::PauliOp(const ModelParams &params, Factors factors, int64_t phase)
    : params_(params), phase_(phase), factors_(std::move(factors)) {
    normalize();
}

void PauliOp::normalize() {
    phase_ = mod_floor(phase_, params_.P);
    for (auto it = factors_.begin(); it != factors_.end();) {
        it->second.first = mod_floor(it->second.first, params_.D);
        it->second.second = mod_floor(it->second.second, params_.D);
        if (it->second.first == 0 && it->second.second == 0) {
            it = factors_.erase(it);
        } else {
            ++it;
        }
    }
}

PauliOp PauliOp::x(const ModelParams &params, int edge, int64_t power) {
    return PauliOp(params, {{edge, {power, 0}}}, 0);
}

PauliOp PauliOp::z(const ModelParams &params, int edge, int64_t power) {
    return PauliOp(params, {{edge, {0, power}}}, 0);
}

PauliOp PauliOp::scalar(const ModelParams &params, int64_t phase) {
    return PauliOp(params, {}, phase);
}

PauliOp PauliOp::from_figure(const ModelParams &params, const Factors &factors, int64_t figure_phase) {
    // Z^b X^a = omega^{ab} X^a Z^b.
    int64_t ph = figure_phase;
    for (const auto &[e, ab] : factors) {
        ph += 2 * mod_floor(ab.first, params.D) * mod_floor(ab.second, params.D);
    }
    return PauliOp(params, factors, ph);
}

int64_t PauliOp::figure_phase() const {
    int64_t ph = phase_;
    for (const auto &[e, ab] : factors_) {
        ph -= 2 * ab.first * ab.second;
    }
    return mod_floor(ph, params_.P);
}

int64_t PauliOp::x_exp(int edge) const {
    auto it = factors_.find(edge);
    return it == factors_.end() ? 0 : it->second.first;
}

int64_t PauliOp::z_exp(int edge) const {
    auto it = factors_.find(edge);
    return it == factors_.end() ? 0 : it->second.second;
}

PauliOp &PauliOp::operator*=(const PauliOp &o) {
    if (params_ != o.params_) {
        throw UsageError("Pauli params mismatch");
    }
    int64_t ph = phase_ + o.phase_;
    for (const auto &[e, ab2] : o.factors_) {
        auto it = factors_.find(e);
        if (it == factors_.end()) {
            factors_.emplace(e, ab2);
            continue;
        }
        // X^a1 Z^b1 X^a2 Z^b2 = omega^{b1 a2} X^{a1+a2} Z^{b1+b2}
        ph += 2 * it->second.second * ab2.first;
        it->second.first = mod_floor(it->second.first + ab2.first, params_.D);
        it->second.second = mod_floor(it->second.second + ab2.second, params_.D);
        if (it->second.first == 0 && it->second.second == 0) {
            factors_.erase(it);
        }
    }
    phase_ = mod_floor(ph, params_.P);
    return *this;
}

PauliOp PauliOp::operator*(const PauliOp &o) const {
    PauliOp r = *this;
    r *= o;
    return r;
}

PauliOp PauliOp::dagger() const {
    // (X^a Z^b)^dag = Z^-b X^-a = omega^{ab} X^-a Z^-b
    int64_t ph = -phase_;
    Factors f;
    for (const auto &[e, ab] : factors_) {
        ph += 2 * ab.first * ab.second;
        f.emplace(e, std::make_pair(-ab.first, -ab.second));
    }
    return PauliOp(params_, std::move(f), ph);
}

PauliOp PauliOp::pow(int64_t k) const {
    if (k < 0) {
        return dagger().pow(-k);
    }
    PauliOp result(params_);
    PauliOp base = *this;
    while (k > 0) {
        if (k & 1) {
            result *= base;
        }
        k >>= 1;
        if (k) {
            base = base * base;
        }
    }
    return result;
}

PauliOp PauliOp::with_phase(int64_t added) const {
    PauliOp r = *this;
    r.phase_ = mod_floor(r.phase_ + added, params_.P);
    return r;
}

std::string PauliOp::str() const {
    std::ostringstream out;
    out << "w'^" << phase_;
    for (const auto &[e, ab] : factors_) {
        out << " e" << e << ":X^" << ab.first << "Z^" << ab.second;
    }
    return out.str();
}

int64_t comm_exponent(const PauliOp &a, const PauliOp &b) {
    if (a.params() != b.params()) {
        throw UsageError("Pauli params mismatch");
    }
    const auto &fa = a.factors();
    const auto &fb = b.factors();
    int64_t c = 0;
    auto ia = fa.begin();
    auto ib = fb.begin();
    while (ia != fa.end() && ib != fb.end()) {
        if (ia->first < ib->first) {
            ++ia;
        } else if (ib->first < ia->first) {
            ++ib;
        } else {
            c += ia->second.second * ib->second.first - ia->second.first * ib->second.second;
            ++ia;
            ++ib;
        }
    }
    return mod_floor(c, a.params().D);
}

PauliOp instantiate(const SympVec &v, const Vec3 &cell, const Lattice &lattice,
                    const ModelParams &params, int64_t figure_phase, bool truncate) {
    if (v.size() != 6) {
        throw UsageError("instantiate expects a 6-row vector");
    }
    if (params.D % v.modulus != 0 && v.modulus % params.D != 0) {
        throw UsageError("vector modulus incompatible with qudit order");
    }
    PauliOp::Factors f;
    for (int blk = 0; blk < 2; blk++) {
        for (int d = 0; d < 3; d++) {
            for (const auto &[mono, c] : v[blk * 3 + d].terms()) {
                auto e = lattice.edge_id(cell + Vec3{mono[0], mono[1], mono[2]}, d);
                if (!e) {
                    if (truncate) {
                        continue;
                    }
                    throw UsageError("operator support leaves the lattice");
                }
                auto &slot = f[*e];
                (blk == 0 ? slot.first : slot.second) += c;
            }
        }
    }
    return PauliOp::from_figure(params, f, figure_phase);
}

}  // namespace wwqca
