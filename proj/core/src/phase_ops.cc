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

#include "wwqca/phase_ops.h"

#include <algorithm>
#include <set>
#include <sstream>

#include "wwqca/error.h"
#include "wwqca/laurent.h"

namespace wwqca {

int Register::add_site(int64_t modulus, std::string label) {
    if (modulus < 2) {
        throw UsageError("site modulus must be at least 2");
    }
    moduli_.push_back(modulus);
    labels_.push_back(std::move(label));
    return static_cast<int>(moduli_.size()) - 1;
}

namespace {

using Sites = PhaseTableOp::Sites;
using Table = PhaseTableOp::Table;
using Components = PhaseTableOp::Components;

std::vector<int64_t> moduli_of(const Register &reg, const Sites &sites) {
    std::vector<int64_t> m;
    m.reserve(sites.size());
    for (int s : sites) {
        m.push_back(reg.modulus(s));
    }
    return m;
}

size_t product(const std::vector<int64_t> &m, int64_t minus) {
    size_t r = 1;
    for (auto v : m) {
        r *= static_cast<size_t>(v - minus);
    }
    return r;
}

/// Value of an anchored component at a full configuration.
int64_t eval_component(const Table &t, const std::vector<int64_t> &moduli, const std::vector<int64_t> &x) {
    size_t idx = 0;
    for (size_t i = 0; i < x.size(); i++) {
        if (x[i] == 0) {
            return 0;
        }
        idx = idx * static_cast<size_t>(moduli[i] - 1) + static_cast<size_t>(x[i] - 1);
    }
    return t[idx];
}

/// Moebius-inverts a full table over sites and accumulates its anchored parts.
void decompose_into(Components &out, const Sites &sites, const std::vector<int64_t> &moduli,
                    std::vector<int64_t> full, int64_t P) {
    size_t k = sites.size();
    std::vector<size_t> stride(k, 1);
    for (size_t i = k; i-- > 1;) {
        stride[i - 1] = stride[i] * static_cast<size_t>(moduli[i]);
    }
    for (size_t i = 0; i < k; i++) {
        size_t m = static_cast<size_t>(moduli[i]);
        for (size_t idx = 0; idx < full.size(); idx++) {
            size_t xi = (idx / stride[i]) % m;
            if (xi != 0) {
                full[idx] -= full[idx - xi * stride[i]];
            }
        }
    }
    std::vector<int64_t> x(k);
    for (size_t idx = 0; idx < full.size(); idx++) {
        int64_t v = mod_floor(full[idx], P);
        if (v == 0) {
            continue;
        }
        Sites q;
        std::vector<int64_t> qm;
        size_t sub = 0;
        for (size_t i = 0; i < k; i++) {
            int64_t xi = static_cast<int64_t>((idx / stride[i]) % static_cast<size_t>(moduli[i]));
            if (xi != 0) {
                q.push_back(sites[i]);
                qm.push_back(moduli[i]);
                sub = sub * static_cast<size_t>(moduli[i] - 1) + static_cast<size_t>(xi - 1);
            }
        }
        auto &t = out[q];
        if (t.empty()) {
            t.assign(product(qm, 1), 0);
        }
        t[sub] = mod_floor(t[sub] + v, P);
    }
}

/// Iterates x over all configurations of the given moduli, last fastest.
bool next_config(std::vector<int64_t> &x, const std::vector<int64_t> &moduli) {
    for (size_t i = x.size(); i-- > 0;) {
        if (++x[i] < moduli[i]) {
            return true;
        }
        x[i] = 0;
    }
    return false;
}

}  // namespace

PhaseTableOp::PhaseTableOp(RegisterPtr reg) : reg_(std::move(reg)) {
    if (!reg_) {
        throw UsageError("null register");
    }
}

PhaseTableOp PhaseTableOp::scalar(RegisterPtr reg, int64_t phase) {
    PhaseTableOp r(std::move(reg));
    int64_t v = mod_floor(phase, r.params().P);
    if (v) {
        r.comps_[{}] = {v};
    }
    return r;
}

PhaseTableOp PhaseTableOp::shift_op(RegisterPtr reg, int site, int64_t amount) {
    PhaseTableOp r(std::move(reg));
    int64_t v = mod_floor(amount, r.reg_->modulus(site));
    if (v) {
        r.shift_[site] = v;
    }
    return r;
}

PhaseTableOp PhaseTableOp::diagonal(RegisterPtr reg, Sites sites,
                                    const std::function<int64_t(const std::vector<int64_t> &)> &f) {
    PhaseTableOp r(std::move(reg));
    Sites sorted = sites;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw UsageError("repeated site in diagonal operator");
    }
    // f sees coordinates in the caller's order.
    std::vector<size_t> from(sites.size());
    for (size_t i = 0; i < sites.size(); i++) {
        from[i] = static_cast<size_t>(std::lower_bound(sorted.begin(), sorted.end(), sites[i]) - sorted.begin());
    }
    auto m = moduli_of(*r.reg_, sorted);
    std::vector<int64_t> full;
    full.reserve(product(m, 0));
    std::vector<int64_t> x(sites.size(), 0), y(sites.size());
    do {
        for (size_t i = 0; i < sites.size(); i++) {
            y[i] = x[from[i]];
        }
        full.push_back(f(y));
    } while (next_config(x, m));
    r.add_full(sorted, std::move(full));
    return r;
}

PhaseTableOp PhaseTableOp::from_components(RegisterPtr reg, Components comps) {
    PhaseTableOp r(std::move(reg));
    int64_t P = r.params().P;
    for (auto &[q, t] : comps) {
        if (t.size() != product(moduli_of(*r.reg_, q), 1)) {
            throw UsageError("component table has the wrong size");
        }
        for (auto &v : t) {
            v = mod_floor(v, P);
        }
    }
    r.comps_ = std::move(comps);
    r.prune();
    return r;
}

void PhaseTableOp::add_full(const Sites &sites, std::vector<int64_t> full) {
    decompose_into(comps_, sites, moduli_of(*reg_, sites), std::move(full), params().P);
    prune();
}

void PhaseTableOp::add_components(const Components &c, int64_t sign) {
    int64_t P = params().P;
    for (const auto &[q, t] : c) {
        auto &mine = comps_[q];
        if (mine.empty()) {
            mine.assign(t.size(), 0);
        }
        for (size_t i = 0; i < t.size(); i++) {
            mine[i] = mod_floor(mine[i] + sign * t[i], P);
        }
    }
}

void PhaseTableOp::prune() {
    for (auto it = comps_.begin(); it != comps_.end();) {
        bool zero = std::all_of(it->second.begin(), it->second.end(), [](int64_t v) { return v == 0; });
        it = zero ? comps_.erase(it) : std::next(it);
    }
}

Components PhaseTableOp::shifted(const Shift &t) const {
    Components out;
    int64_t P = params().P;
    for (const auto &[q, table] : comps_) {
        bool touched = false;
        for (int s : q) {
            touched |= t.count(s) > 0;
        }
        if (!touched) {
            auto &dst = out[q];
            if (dst.empty()) {
                dst.assign(table.size(), 0);
            }
            for (size_t i = 0; i < table.size(); i++) {
                dst[i] = mod_floor(dst[i] + table[i], P);
            }
            continue;
        }
        auto m = moduli_of(*reg_, q);
        std::vector<int64_t> off(q.size(), 0);
        for (size_t i = 0; i < q.size(); i++) {
            auto it = t.find(q[i]);
            if (it != t.end()) {
                off[i] = it->second;
            }
        }
        std::vector<int64_t> full;
        full.reserve(product(m, 0));
        std::vector<int64_t> x(q.size(), 0), y(q.size());
        do {
            for (size_t i = 0; i < q.size(); i++) {
                y[i] = mod_floor(x[i] + off[i], m[i]);
            }
            full.push_back(eval_component(table, m, y));
        } while (next_config(x, m));
        decompose_into(out, q, m, std::move(full), P);
    }
    return out;
}

int64_t PhaseTableOp::shift_at(int site) const {
    auto it = shift_.find(site);
    return it == shift_.end() ? 0 : it->second;
}

int64_t PhaseTableOp::phase_at(const Config &c) const {
    int64_t acc = 0;
    for (const auto &[q, t] : comps_) {
        std::vector<int64_t> x;
        x.reserve(q.size());
        for (int s : q) {
            auto it = c.find(s);
            x.push_back(it == c.end() ? 0 : mod_floor(it->second, reg_->modulus(s)));
        }
        acc += eval_component(t, moduli_of(*reg_, q), x);
    }
    return mod_floor(acc, params().P);
}

std::vector<int> PhaseTableOp::support() const {
    std::set<int> s;
    for (const auto &[site, v] : shift_) {
        s.insert(site);
    }
    for (const auto &[q, t] : comps_) {
        s.insert(q.begin(), q.end());
    }
    return {s.begin(), s.end()};
}

bool PhaseTableOp::is_scalar() const {
    return shift_.empty() && (comps_.empty() || (comps_.size() == 1 && comps_.begin()->first.empty()));
}

int64_t PhaseTableOp::scalar_of() const {
    if (!is_scalar()) {
        throw DefinitionError("not a scalar: " + str());
    }
    return comps_.empty() ? 0 : comps_.begin()->second[0];
}

PhaseTableOp PhaseTableOp::operator*(const PhaseTableOp &o) const {
    if (reg_ != o.reg_) {
        throw UsageError("operators live on different registers");
    }
    PhaseTableOp r(reg_);
    r.shift_ = o.shift_;
    for (const auto &[site, v] : shift_) {
        int64_t w = mod_floor(r.shift_at(site) + v, reg_->modulus(site));
        if (w) {
            r.shift_[site] = w;
        } else {
            r.shift_.erase(site);
        }
    }
    r.comps_ = o.comps_;
    r.add_components(o.shift_.empty() ? comps_ : shifted(o.shift_), 1);
    r.prune();
    return r;
}

PhaseTableOp PhaseTableOp::dagger() const {
    // |c> -> omega'^{-D(c - s)} |c - s>.
    PhaseTableOp r(reg_);
    Shift neg;
    for (const auto &[site, v] : shift_) {
        int64_t w = mod_floor(-v, reg_->modulus(site));
        r.shift_[site] = w;
        neg[site] = w;
    }
    r.add_components(neg.empty() ? comps_ : shifted(neg), -1);
    r.prune();
    return r;
}

PhaseTableOp PhaseTableOp::pow(int64_t k) const {
    if (k < 0) {
        return dagger().pow(-k);
    }
    PhaseTableOp r(reg_), base = *this;
    while (k) {
        if (k & 1) {
            r = r * base;
        }
        k >>= 1;
        if (k) {
            base = base * base;
        }
    }
    return r;
}

PhaseTableOp PhaseTableOp::with_phase(int64_t added) const {
    return scalar(reg_, added) * *this;
}

PhaseTableOp PhaseTableOp::restrict(const std::vector<int> &pinned) const {
    std::set<int> pin(pinned.begin(), pinned.end());
    PhaseTableOp r(reg_);
    for (const auto &[site, v] : shift_) {
        if (pin.count(site)) {
            throw DefinitionError("restriction violated: shift on pinned site " + std::to_string(site) + " (" +
                                  reg_->label(site) + ")");
        }
        r.shift_[site] = v;
    }
    for (const auto &[q, t] : comps_) {
        bool hit = std::any_of(q.begin(), q.end(), [&](int s) { return pin.count(s) > 0; });
        if (!hit) {
            r.comps_[q] = t;
        }
    }
    return r;
}

DenseMatrix PhaseTableOp::dense(const std::vector<int> &order) const {
    std::set<int> have(order.begin(), order.end());
    for (int s : support()) {
        if (!have.count(s)) {
            throw UsageError("dense order misses support site " + std::to_string(s));
        }
    }
    auto m = moduli_of(*reg_, order);
    size_t dim = product(m, 0);
    std::vector<size_t> perm(dim);
    std::vector<int64_t> phase(dim);
    std::vector<int64_t> x(order.size(), 0);
    size_t idx = 0;
    do {
        Config c;
        size_t target = 0;
        for (size_t i = 0; i < order.size(); i++) {
            c[order[i]] = x[i];
            int64_t y = mod_floor(x[i] + shift_at(order[i]), m[i]);
            target = target * static_cast<size_t>(m[i]) + static_cast<size_t>(y);
        }
        perm[idx] = target;
        phase[idx] = phase_at(c);
        idx++;
    } while (next_config(x, m));
    return DenseMatrix::monomial(params().D, perm, phase);
}

bool PhaseTableOp::operator==(const PhaseTableOp &o) const {
    return reg_ == o.reg_ && shift_ == o.shift_ && comps_ == o.comps_;
}

std::string PhaseTableOp::str() const {
    std::ostringstream out;
    out << "shift{";
    bool first = true;
    for (const auto &[site, v] : shift_) {
        out << (first ? "" : ",") << site << ":" << v;
        first = false;
    }
    out << "} phase{";
    first = true;
    for (const auto &[q, t] : comps_) {
        out << (first ? "" : " ") << "[";
        for (size_t i = 0; i < q.size(); i++) {
            out << (i ? "," : "") << q[i];
        }
        out << "]=";
        for (size_t i = 0; i < t.size(); i++) {
            out << (i ? "," : "") << t[i];
        }
        first = false;
    }
    out << "}";
    return out.str();
}

PhaseTableOp gate(const RegisterPtr &reg, GateKind kind, const std::vector<int> &sites) {
    const auto &p = reg->params();
    auto need = [&](size_t count) {
        if (sites.size() != count) {
            throw UsageError("gate arity mismatch");
        }
    };
    auto need_modulus = [&](int site, int64_t m) {
        if (reg->modulus(site) != m) {
            throw UsageError("gate modulus mismatch at site " + std::to_string(site));
        }
    };
    switch (kind) {
        case GateKind::Xhat:
            need(1);
            need_modulus(sites[0], p.N);
            [[fallthrough]];
        case GateKind::X:
            need(1);
            return PhaseTableOp::shift_op(reg, sites[0], 1);
        case GateKind::Zhat:
            need(1);
            need_modulus(sites[0], p.N);
            [[fallthrough]];
        case GateKind::Z: {
            need(1);
            int64_t step = p.P / reg->modulus(sites[0]);
            if (p.P % reg->modulus(sites[0])) {
                throw UsageError("clock phase not representable");
            }
            return PhaseTableOp::diagonal(reg, {sites[0]}, [step](const auto &x) { return step * x[0]; });
        }
        case GateKind::Shat:
            need(1);
            need_modulus(sites[0], p.N);
            [[fallthrough]];
        case GateKind::S: {
            need(1);
            int64_t m = reg->modulus(sites[0]);
            if (p.P % (2 * m)) {
                throw UsageError("square-root clock phase not representable");
            }
            int64_t step = p.P / (2 * m);
            return PhaseTableOp::diagonal(reg, {sites[0]}, [step](const auto &x) { return step * x[0]; });
        }
        case GateKind::CZ: {
            need(2);
            need_modulus(sites[0], 2);
            need_modulus(sites[1], 2);
            int64_t half = p.D;
            return PhaseTableOp::diagonal(reg, {sites[0], sites[1]},
                                          [half](const auto &x) { return half * x[0] * x[1]; });
        }
        case GateKind::CZhat: {
            need(2);
            need_modulus(sites[0], p.N);
            need_modulus(sites[1], 2);
            int64_t half = p.D, top = p.N - 1;
            return PhaseTableOp::diagonal(reg, {sites[0], sites[1]},
                                          [=](const auto &x) { return x[0] == top ? half * x[1] : 0; });
        }
    }
    throw UsageError("unknown gate kind");
}

void LinearPermutation::add(int control, int target, int64_t coeff) {
    if (control == target || by_target_.count(control) || is_control_.count(target)) {
        throw UsageError("linear permutation controls may not be targets");
    }
    terms_.push_back(Term{control, target, coeff});
    by_target_[target][control] += coeff;
    is_control_[control] = true;
}

DenseMatrix LinearPermutation::dense(const Register &reg, const std::vector<int> &order) const {
    std::map<int, size_t> pos;
    for (size_t i = 0; i < order.size(); i++) {
        pos[order[i]] = i;
    }
    auto m = moduli_of(reg, order);
    size_t dim = product(m, 0);
    std::vector<size_t> perm(dim);
    std::vector<int64_t> phase(dim, 0);
    std::vector<int64_t> x(order.size(), 0);
    size_t idx = 0;
    do {
        std::vector<int64_t> y = x;
        for (const auto &t : terms_) {
            y[pos.at(t.target)] += t.coeff * x[pos.at(t.control)];
        }
        size_t target = 0;
        for (size_t i = 0; i < order.size(); i++) {
            target = target * static_cast<size_t>(m[i]) + static_cast<size_t>(mod_floor(y[i], m[i]));
        }
        perm[idx++] = target;
    } while (next_config(x, m));
    return DenseMatrix::monomial(reg.params().D, perm, phase);
}

PhaseTableOp conjugate(const PhaseTableOp &op, const LinearPermutation &g) {
    // g |c> = |pi c>, so g op g^dagger |c> = omega'^{D(pi^-1 c)} |c + pi s>.
    const auto &reg = *op.reg();
    const auto &targets = g.by_target();
    for (const auto &[t, ctrls] : targets) {
        for (const auto &[c, coeff] : ctrls) {
            if ((coeff * reg.modulus(c)) % reg.modulus(t) != 0) {
                throw UsageError("conjugation needs a group homomorphism: control modulus must be a multiple of the target modulus");
            }
        }
    }
    PhaseTableOp::Shift shift = op.shift();
    for (const auto &[t, ctrls] : targets) {
        int64_t add = 0;
        for (const auto &[c, coeff] : ctrls) {
            add += coeff * op.shift_at(c);
        }
        int64_t v = mod_floor(op.shift_at(t) + add, reg.modulus(t));
        if (v) {
            shift[t] = v;
        } else {
            shift.erase(t);
        }
    }
    Components comps;
    int64_t P = op.params().P;
    for (const auto &[q, table] : op.components()) {
        std::set<int> r(q.begin(), q.end());
        bool touched = false;
        for (int s : q) {
            auto it = targets.find(s);
            if (it != targets.end()) {
                touched = true;
                for (const auto &[c, coeff] : it->second) {
                    r.insert(c);
                }
            }
        }
        if (!touched) {
            auto &dst = comps[q];
            if (dst.empty()) {
                dst.assign(table.size(), 0);
            }
            for (size_t i = 0; i < table.size(); i++) {
                dst[i] = mod_floor(dst[i] + table[i], P);
            }
            continue;
        }
        Sites rs(r.begin(), r.end());
        std::map<int, size_t> pos;
        for (size_t i = 0; i < rs.size(); i++) {
            pos[rs[i]] = i;
        }
        auto rm = moduli_of(reg, rs);
        auto qm = moduli_of(reg, q);
        std::vector<int64_t> full;
        full.reserve(product(rm, 0));
        std::vector<int64_t> x(rs.size(), 0), y(q.size());
        do {
            for (size_t i = 0; i < q.size(); i++) {
                int64_t v = x[pos[q[i]]];
                auto it = targets.find(q[i]);
                if (it != targets.end()) {
                    for (const auto &[c, coeff] : it->second) {
                        v -= coeff * x[pos[c]];
                    }
                }
                y[i] = mod_floor(v, qm[i]);
            }
            full.push_back(eval_component(table, qm, y));
        } while (next_config(x, rm));
        decompose_into(comps, rs, rm, std::move(full), P);
    }
    // |c> -> omega'^{D'(c)} |c + s'> is the shift applied after the diagonal.
    PhaseTableOp result = PhaseTableOp::from_components(op.reg(), std::move(comps));
    for (const auto &[site, v] : shift) {
        result = PhaseTableOp::shift_op(op.reg(), site, v) * result;
    }
    return result;
}

}  // namespace wwqca
