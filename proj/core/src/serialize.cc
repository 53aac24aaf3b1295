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

#include "wwqca/serialize.h"

#include <json.hpp>

#include "wwqca/error.h"

namespace wwqca {

using nlohmann::json;

namespace {

json parse_json(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::exception &e) {
        throw UsageError(std::string("malformed JSON: ") + e.what());
    }
}

template <typename T>
T field(const json &j, const char *key) {
    if (!j.is_object() || !j.contains(key)) {
        throw UsageError(std::string("missing JSON field '") + key + "'");
    }
    try {
        return j.at(key).get<T>();
    } catch (const json::exception &e) {
        throw UsageError(std::string("bad JSON field '") + key + "': " + e.what());
    }
}

json vec_json(const SympVec &v) {
    json entries = json::array();
    for (const auto &e : v.entries) {
        entries.push_back(e.str());
    }
    return {{"schema", kJsonSchemaVersion}, {"modulus", v.modulus}, {"size", v.size()}, {"entries", entries}};
}

}  // namespace

std::string to_json(const LaurentPoly &p) {
    json j = {{"schema", kJsonSchemaVersion}, {"modulus", p.modulus()}, {"poly", p.str()}};
    return j.dump();
}

LaurentPoly laurent_from_json(std::string_view text) {
    json j = parse_json(text);
    return LaurentPoly::parse(field<std::string>(j, "poly"), field<int64_t>(j, "modulus"));
}

std::string to_json(const SympVec &v) {
    return vec_json(v).dump();
}

SympVec symp_vec_from_json(std::string_view text) {
    json j = parse_json(text);
    auto entries = field<std::vector<std::string>>(j, "entries");
    if (entries.size() != field<size_t>(j, "size")) {
        throw UsageError("vector size does not match its entries");
    }
    return SympVec::from_strings(field<int64_t>(j, "modulus"), entries);
}

std::string to_json(const SympMatrix &m) {
    json rows = json::array();
    for (size_t r = 0; r < m.rows(); r++) {
        json row = json::array();
        for (size_t c = 0; c < m.cols(); c++) {
            row.push_back(m.at(r, c).str());
        }
        rows.push_back(row);
    }
    json j = {{"schema", kJsonSchemaVersion},
              {"modulus", m.modulus()},
              {"rows", m.rows()},
              {"cols", m.cols()},
              {"entries", rows}};
    return j.dump();
}

SympMatrix symp_matrix_from_json(std::string_view text) {
    json j = parse_json(text);
    int64_t modulus = field<int64_t>(j, "modulus");
    auto rows = field<size_t>(j, "rows");
    auto cols = field<size_t>(j, "cols");
    auto entries = field<std::vector<std::vector<std::string>>>(j, "entries");
    if (entries.size() != rows) {
        throw UsageError("matrix row count does not match its entries");
    }
    SympMatrix m(modulus, rows, cols);
    for (size_t r = 0; r < rows; r++) {
        if (entries[r].size() != cols) {
            throw UsageError("matrix column count does not match its entries");
        }
        for (size_t c = 0; c < cols; c++) {
            m.at(r, c) = LaurentPoly::parse(entries[r][c], modulus);
        }
    }
    return m;
}

std::string to_json(const PauliOp &op, const Lattice &lattice) {
    json factors = json::array();
    for (const auto &[e, xz] : op.factors()) {
        const Edge &edge = lattice.edge(e);
        factors.push_back({{"cell", edge.cell}, {"dir", edge.dir}, {"x", xz.first}, {"z", xz.second}});
    }
    json j = {{"schema", kJsonSchemaVersion},
              {"D", op.params().D},
              {"phase_exp", op.phase()},
              {"factors", factors}};
    return j.dump();
}

PauliOp pauli_from_json(std::string_view text, const Lattice &lattice) {
    json j = parse_json(text);
    int64_t d = field<int64_t>(j, "D");
    int n = 0;
    while ((int64_t{2} << n) < d) {
        n++;
    }
    if (n < 1 || (int64_t{2} << n) != d) {
        throw UsageError("D must be 2N with N = 2^n, n >= 1");
    }
    ModelParams params = ModelParams::make(n);
    PauliOp::Factors factors;
    for (const auto &f : field<json>(j, "factors")) {
        auto cell = field<Vec3>(f, "cell");
        auto id = lattice.edge_id(cell, field<int>(f, "dir"));
        if (!id) {
            throw UsageError("factor names an edge outside the lattice");
        }
        factors[*id] = {field<int64_t>(f, "x"), field<int64_t>(f, "z")};
    }
    return PauliOp(params, factors, field<int64_t>(j, "phase_exp"));
}

std::string to_json(const PhaseTableOp &op) {
    const Register &reg = *op.reg();
    json sites = json::array();
    for (size_t s = 0; s < reg.size(); s++) {
        sites.push_back({{"modulus", reg.modulus(static_cast<int>(s))}, {"label", reg.label(static_cast<int>(s))}});
    }
    json shift = json::array();
    for (const auto &[s, v] : op.shift()) {
        shift.push_back({s, v});
    }
    json comps = json::array();
    for (const auto &[q, table] : op.components()) {
        comps.push_back({{"sites", q}, {"table", table}});
    }
    json j = {{"schema", kJsonSchemaVersion},
              {"n", op.params().n},
              {"register", sites},
              {"shift", shift},
              {"components", comps}};
    return j.dump();
}

PhaseTableOp phase_table_from_json(std::string_view text) {
    json j = parse_json(text);
    auto reg = std::make_shared<Register>(ModelParams::make(field<int>(j, "n")));
    for (const auto &s : field<json>(j, "register")) {
        reg->add_site(field<int64_t>(s, "modulus"), field<std::string>(s, "label"));
    }
    RegisterPtr ptr = reg;
    PhaseTableOp::Components comps;
    for (const auto &c : field<json>(j, "components")) {
        auto q = field<PhaseTableOp::Sites>(c, "sites");
        size_t expect = 1;
        for (int s : q) {
            if (s < 0 || static_cast<size_t>(s) >= reg->size()) {
                throw UsageError("component names a site outside the register");
            }
            expect *= static_cast<size_t>(reg->modulus(s) - 1);
        }
        auto table = field<PhaseTableOp::Table>(c, "table");
        if (table.size() != expect) {
            throw UsageError("component table has the wrong length");
        }
        comps[q] = table;
    }
    PhaseTableOp op = PhaseTableOp::from_components(ptr, comps);
    for (const auto &s : field<json>(j, "shift")) {
        auto pair = s.get<std::vector<int64_t>>();
        if (pair.size() != 2 || pair[0] < 0 || static_cast<size_t>(pair[0]) >= reg->size()) {
            throw UsageError("bad shift entry");
        }
        op = PhaseTableOp::shift_op(ptr, static_cast<int>(pair[0]), pair[1]) * op;
    }
    return op;
}

}  // namespace wwqca
