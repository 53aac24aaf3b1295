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

#include "cli.h"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <json.hpp>
#include <random>
#include <sstream>

#include "wwqca/automorphism.h"
#include "wwqca/error.h"
#include "wwqca/models.h"
#include "wwqca/qca3f.h"
#include "wwqca/serialize.h"
#include "wwqca/spin.h"
#include "wwqca/stabilizer.h"

namespace wwqca::cli {

namespace {

using nlohmann::json;

struct Options {
    std::string model = "hww";
    int n = 1;
    std::vector<int> torus;
    std::vector<int> slab;
    std::string format = "text";
    uint64_t seed = 20260101;

    // spin
    std::string boundary = "U";
    int length = 1;
    // automorphism
    std::string variant = "qudit_qubit";
    // qca3f
    bool check = false;
    std::string apply_file;
    // derive / export-op
    std::string op;
    int loc = 0;
    // labeling
    bool search = false;
};

Lattice make_lattice(const Options &o, const std::vector<int> &fallback_torus) {
    if (!o.slab.empty() && !o.torus.empty()) {
        throw UsageError("give either --torus or --slab, not both");
    }
    if (!o.slab.empty()) {
        return Lattice::slab(o.slab[0], o.slab[1], o.slab[2]);
    }
    const auto &t = o.torus.empty() ? fallback_torus : o.torus;
    return Lattice::torus(t[0], t[1], t[2]);
}

json params_json(const Options &o, const std::string &command) {
    json p = {{"n", o.n}, {"seed", o.seed}};
    if (!o.torus.empty()) {
        p["torus"] = o.torus;
    }
    if (!o.slab.empty()) {
        p["slab"] = o.slab;
    }
    return {{"schema", kJsonSchemaVersion}, {"command", command}, {"params", p}};
}

std::vector<CheckRecord> records(const Report &r) {
    std::vector<CheckRecord> out = r.summary();
    auto failed = r.failed();
    std::stable_sort(failed.begin(), failed.end(), [](const CheckRecord &a, const CheckRecord &b) {
        return std::tie(a.check_id, a.location) < std::tie(b.check_id, b.location);
    });
    // Per check id: the summary line, then its failures.
    std::vector<CheckRecord> merged;
    for (const auto &s : out) {
        merged.push_back(s);
        for (const auto &f : failed) {
            if (f.check_id == s.check_id) {
                merged.push_back(f);
            }
        }
    }
    return merged;
}

/// Prints a report (plus optional result fields) and returns the exit code.
int emit(const Options &o, const std::string &command, const Report &r, json result, std::ostream &out,
         const std::string &text_result = "") {
    if (o.format == "json") {
        json j = params_json(o, command);
        json checks = json::array();
        for (const auto &c : records(r)) {
            json rec = {{"check_id", c.check_id}, {"location", c.location}, {"status", c.pass ? "pass" : "fail"}};
            if (!c.residual.empty()) {
                rec["residual"] = c.residual;
            }
            checks.push_back(rec);
        }
        j["checks"] = checks;
        if (!result.is_null()) {
            j["result"] = result;
        }
        j["status"] = r.all_pass() ? "pass" : "fail";
        out << j.dump(2) << "\n";
    } else {
        for (const auto &c : records(r)) {
            out << (c.pass ? "PASS " : "FAIL ") << c.check_id << "  " << c.location;
            if (!c.residual.empty()) {
                out << "  " << c.residual;
            }
            out << "\n";
        }
        if (!text_result.empty()) {
            out << text_result << "\n";
        }
    }
    return r.all_pass() ? kOk : kCheckFailed;
}

int cmd_verify(const Options &o, std::ostream &out) {
    ModelParams p = ModelParams::make(o.n);
    Lattice l = make_lattice(o, {3, 3, 3});
    ModelId id = parse_model_id(o.model);
    Report r;
    if (id == ModelId::H1family) {
        SplitModel sm(l, p);
        r = l.is_slab() ? verify_split_slab(sm) : verify_separator(sm);
    } else {
        r = verify_relation_catalog(l, p);
    }
    return emit(o, "verify", r, nullptr, out);
}

int cmd_gsd(const Options &o, std::ostream &out) {
    ModelParams p = ModelParams::make(o.n);
    Lattice l = make_lattice(o, {3, 3, 3});
    ModelId id = parse_model_id(o.model);
    json result;
    std::string value;
    if (id == ModelId::H1family) {
        value = split_gsd(SplitModel(l, p)).str();
        result = {{"gsd", value}};
    } else {
        GsdResult g = gsd(id, l, p);
        value = g.gsd.str();
        result = {{"gsd", value}, {"hilbert_dim", g.hilbert_dim.str()}, {"group_order", g.group_order.str()},
                  {"generators", g.generators}};
    }
    if (o.format == "json") {
        json j = params_json(o, "gsd");
        j["model"] = o.model;
        j["lattice"] = l.describe();
        j["result"] = result;
        j["status"] = "pass";
        out << j.dump(2) << "\n";
    } else {
        out << value << "\n";
    }
    return kOk;
}

int cmd_spin(const Options &o, std::ostream &out) {
    ModelParams p = ModelParams::make(o.n);
    SpinModel model = parse_spin_model(o.model);
    Plane plane = parse_plane(o.boundary);
    int width = std::max(4, 2 * o.length + 2);
    Options lo = o;
    if (lo.slab.empty()) {
        if (!lo.torus.empty()) {
            throw UsageError("spin needs a slab");
        }
        lo.slab = {width, width, 1};
    }
    Lattice l = make_lattice(lo, {});
    int64_t k = boundary_spin(model, l, p, plane, o.length);
    std::string value = root_of_unity(k, p);
    if (o.format == "json") {
        json j = params_json(lo, "spin");
        j["result"] = {{"exponent", k}, {"unit", "pi/" + std::to_string(p.D)}, {"theta", value}};
        j["status"] = "pass";
        out << j.dump(2) << "\n";
    } else {
        out << value << "\n";
    }
    return kOk;
}

int cmd_separator(const Options &o, std::ostream &out) {
    ModelParams p = ModelParams::make(o.n);
    Lattice l = make_lattice(o, {3, 3, 3});
    if (l.is_slab()) {
        throw UsageError("separator axioms are checked on a torus");
    }
    return emit(o, "separator", verify_separator(SplitModel(l, p)), nullptr, out);
}

int cmd_automorphism(const Options &o, std::ostream &out) {
    Automorphism a(parse_variant(o.variant), ModelParams::make(o.n));
    return emit(o, "automorphism", verify_automorphism(a), nullptr, out);
}

std::string read_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw UsageError("cannot read '" + path + "'");
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int cmd_qca3f(const Options &o, std::ostream &out) {
    Qca3f q = Qca3f::load();
    if (!o.apply_file.empty()) {
        SympVec v = parse_qca3f_vector(read_file(o.apply_file));
        SympVec w = apply(q, v);
        if (o.format == "json") {
            json j = params_json(o, "qca3f");
            j["result"] = json::parse(to_json(w));
            j["status"] = "pass";
            out << j.dump(2) << "\n";
        } else {
            for (const auto &e : w.entries) {
                out << e.str() << "\n";
            }
        }
        return kOk;
    }
    Report r = verify_qca3f(q);
    // Involution on random vectors of small monomials, reproducible by seed.
    std::mt19937_64 rng(o.seed);
    std::uniform_int_distribution<int> exp(-2, 2), bit(0, 1);
    for (int trial = 0; trial < 8; trial++) {
        SympVec v(2, 12);
        for (auto &e : v.entries) {
            for (int t = 0; t < 3; t++) {
                if (bit(rng)) {
                    e.add_term({exp(rng), exp(rng), exp(rng)}, 1);
                }
            }
        }
        r.expect(apply(q, apply(q, v)) == v, "qca3f.involution", "seed " + std::to_string(o.seed));
    }
    return emit(o, "qca3f", r, nullptr, out);
}

int cmd_derive(const Options &o, std::ostream &out) {
    ModelParams p = ModelParams::make(o.n);
    Lattice l = make_lattice(o, {3, 3, 3});
    SplitModel sm(l, p);
    PhaseTableOp op = sm.make(parse_split_operator(o.op), o.loc);
    if (o.format == "json") {
        out << json::parse(to_json(op)).dump(2) << "\n";
    } else {
        out << op.str() << "\n";
    }
    return kOk;
}

int cmd_export(const Options &o, std::ostream &out) {
    ModelParams p = ModelParams::make(o.n);
    Lattice l = make_lattice(o, {3, 3, 3});
    Model m(l, p);
    PauliOp op = m.make(parse_operator_kind(o.op), o.loc);
    if (o.format == "json") {
        out << json::parse(to_json(op, l)).dump(2) << "\n";
    } else {
        out << op.str() << "\n";
    }
    return kOk;
}

std::string labeling_text(const EdgeLabeling &lab) {
    static const char *slots[] = {"+x", "+y", "+z", "-x", "-y", "-z"};
    std::string s;
    for (int k = 0; k < 6; k++) {
        s += (k ? " " : "") + std::to_string(k + 1) + ":" + slots[lab[k]];
    }
    return s;
}

int cmd_labeling(const Options &o, std::ostream &out) {
    ModelParams p = ModelParams::make(o.n);
    Lattice l = make_lattice(o, {3, 3, 3});
    Report r = certify_labeling(l, p, kFrozenLabeling);
    json result = {{"frozen", labeling_text(kFrozenLabeling)}};
    std::string text = "frozen labeling " + labeling_text(kFrozenLabeling);
    if (o.search) {
        json all = json::array();
        for (const auto &lab : all_passing_labelings(l, p)) {
            all.push_back(labeling_text(lab));
            text += "\npassing " + labeling_text(lab);
        }
        result["passing"] = all;
    }
    return emit(o, "labeling", r, result, out, text);
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Exact checks for Z_2N Walker-Wang models, their automorphisms and QCA certificates", "wwqca"};
    app.require_subcommand(1, 1);
    Options o;

    auto lattice_flags = [&](CLI::App *c) {
        c->add_option("--n", o.n, "N = 2^n")->check(CLI::Range(1, 4));
        c->add_option("--torus", o.torus, "torus Lx Ly Lz")->expected(3);
        c->add_option("--slab", o.slab, "slab Lx Ly M")->expected(3);
        c->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
        c->add_option("--seed", o.seed, "seed for randomized checks");
    };
    auto *verify = app.add_subcommand("verify", "relation catalog (hww, htww, cond) or split-model axioms (h1)");
    verify->add_option("--model", o.model, "hww, htww, cond or h1");
    lattice_flags(verify);
    auto *gsd_cmd = app.add_subcommand("gsd", "ground-state degeneracy by exact group counting");
    gsd_cmd->add_option("--model", o.model, "hww, htww, cond or h1");
    lattice_flags(gsd_cmd);
    auto *spin = app.add_subcommand("spin", "topological spin of the boundary anyon");
    spin->add_option("--model", o.model, "cond or h1")->required();
    spin->add_option("--boundary", o.boundary, "U or L");
    spin->add_option("--length", o.length, "string length")->check(CLI::Range(1, 8));
    lattice_flags(spin);
    auto *sep = app.add_subcommand("separator", "separator and flipper axioms of the split model");
    lattice_flags(sep);
    auto *aut = app.add_subcommand("automorphism", "dense-matrix certificate of a qudit automorphism");
    aut->add_option("--variant", o.variant, "qubit_pair, qudit_qubit, extension_unrotated, alternative_extension");
    lattice_flags(aut);
    auto *qca = app.add_subcommand("qca3f", "3-fermion QCA certificates");
    auto *check_flag = qca->add_flag("--check", o.check, "square and symplectic certificates (default)");
    qca->add_option("--apply", o.apply_file, "file with 12 polynomials, one per line")->excludes(check_flag);
    lattice_flags(qca);
    auto *derive = app.add_subcommand("derive", "export a split-model operator (bhat, fhat, xhat, ahat)");
    derive->add_option("--op", o.op, "operator")->required();
    derive->add_option("--loc,--p,--e,--v", o.loc, "plaquette, edge or vertex index");
    lattice_flags(derive);
    auto *exp = app.add_subcommand("export-op", "export a Pauli operator of the lattice model");
    exp->add_option("--op", o.op, "A_v, B_p, Btilde_p, C_e, ScriptX_e, F_p, BtildePrime_p")->required();
    exp->add_option("--loc,--p,--e,--v", o.loc, "plaquette, edge or vertex index");
    lattice_flags(exp);
    auto *lab = app.add_subcommand("labeling", "print and certify the frozen circuit labeling");
    lab->add_flag("--search", o.search, "also list every passing labeling");
    lattice_flags(lab);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        app.exit(e, out, err);
        return kUsage;
    }

    try {
        if (*verify) return cmd_verify(o, out);
        if (*gsd_cmd) return cmd_gsd(o, out);
        if (*spin) return cmd_spin(o, out);
        if (*sep) return cmd_separator(o, out);
        if (*aut) return cmd_automorphism(o, out);
        if (*qca) return cmd_qca3f(o, out);
        if (*derive) return cmd_derive(o, out);
        if (*exp) return cmd_export(o, out);
        if (*lab) return cmd_labeling(o, out);
    } catch (const UsageError &e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const IntegrityError &e) {
        err << "integrity error: " << e.what() << "\n";
        return kCheckFailed;
    } catch (const std::exception &e) {
        err << "check failed: " << e.what() << "\n";
        return kCheckFailed;
    }
    return kUsage;
}

}  // namespace wwqca::cli
