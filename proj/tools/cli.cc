// Copyright 2026 The hsp-elimination Authors
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

#include <algorithm>
#include <cctype>
#include <fstream>
#include <optional>

#include "CLI11.hpp"
#include "hsp/abelian_group.h"
#include "hsp/dihedral_group.h"
#include "hsp/elimination.h"
#include "hsp/errors.h"
#include "hsp/game.h"
#include "hsp/hsp_states.h"
#include "hsp/report_json.h"
#include "hsp/verify.h"

namespace hsp::cli {

namespace {

struct Options {
    std::string group;
    int m = 1;
    std::uint64_t seed = 1;
    std::size_t trials = 100;
    std::optional<double> tol;
    std::size_t cap = kDefaultDimensionCap;
    std::string format = "json";
    std::string out_path;
    // subcommand specific
    std::string subgroup;
    std::string kind;
    std::string secret;
    std::string rule = "sole-survivor";
    std::string povm;
    double delta = 1e-6;
    std::size_t max_rounds = 1000;
    std::size_t max_subset = 3;
    bool dihedral = false;
    bool with_matrices = true;
};

// Check failures are reported through the exit code, not exceptions.
struct Outcome {
    Json result;
    bool pass = true;
};

bool looks_dihedral(const std::string &group) {
    return !group.empty() && std::tolower(static_cast<unsigned char>(group.front())) == 'd';
}

Tolerances tolerances(const Options &o) { return o.tol ? Tolerances::uniform(*o.tol) : Tolerances{}; }

Json header(const std::string &command, const Options &o) {
    return {{"command", command},
            {"group", o.group},
            {"m", o.m},
            {"cap", o.cap},
            {"tolerances", tolerances_json(tolerances(o))}};
}

const HiddenSubgroupState &pick(const std::vector<HiddenSubgroupState> &states, const std::string &label) {
    for (const auto &s : states) {
        if (s.label == label) {
            return s;
        }
    }
    throw DomainError("unknown subgroup label '" + label + "'");
}

std::vector<HiddenSubgroupState> candidates_for(const Options &o) {
    if (looks_dihedral(o.group)) {
        if (o.m != 1) {
            throw DomainError("dihedral states are built for m = 1 only");
        }
        return dihedral_candidate_set(parse_dihedral_spec(o.group, o.cap));
    }
    return candidate_set(parse_group_spec(o.group, o.cap), o.m, o.cap);
}

CPovm build_povm(const Options &o, const std::string &kind, const std::vector<HiddenSubgroupState> &states, Json &meta) {
    const Tolerances tol = tolerances(o);
    const Eigen::Index d = states.front().density.dim();
    meta["kind"] = kind;
    if (kind == "identity") {
        return CPovm(std::vector<CMatrix>{CMatrix::Identity(d, d)});
    }
    if (kind == "generic") {
        auto rhos = densities(states);
        std::size_t max_subset = looks_dihedral(o.group) ? std::min<std::size_t>(o.max_subset, rhos.size()) : o.max_subset;
        auto gc = generic_construction(rhos, max_subset, tol);
        meta["generic_construction"] = generic_json(gc);
        return elimination_povm(gc, 2, tol);
    }
    if (looks_dihedral(o.group)) {
        throw DomainError("observable kind '" + kind + "' needs an Abelian group");
    }
    if (o.m != 1) {
        throw DomainError("observable kind '" + kind + "' is defined on C[G] (m = 1)");
    }
    auto g = parse_group_spec(o.group, o.cap);
    if (kind == "fourier") {
        auto f = fourier_observable(g);
        Json chars = Json::array();
        for (const auto &chi : f.characters) {
            chars.push_back(character_json(chi));
        }
        meta["characters"] = chars;
        return f.povm;
    }
    if (kind == "class") {
        auto a = class_observable(g);
        Json classes = Json::array();
        for (const auto &cls : a.classes) {
            Json members = Json::array();
            for (const auto &chi : cls) {
                members.push_back(character_json(chi));
            }
            classes.push_back(members);
        }
        meta["classes"] = classes;
        return a.povm;
    }
    throw DomainError("unknown observable kind '" + kind + "' (class, fourier, identity, generic)");
}

Outcome cmd_subgroups(const Options &o) {
    Json list = Json::array();
    if (looks_dihedral(o.group)) {
        auto d = parse_dihedral_spec(o.group, o.cap);
        for (int k = 0; k < d.n(); ++k) {
            auto h = hidden_reflection(d, k);
            list.push_back({{"label", "k=" + std::to_string(k)}, {"order", 2}, {"elements", {{0, 0}, {k, 1}}},
                            {"generators", {{k, 1}}}});
        }
        return {{{"group", d.to_string()}, {"order", d.order()}, {"kind", "hidden_reflections"}, {"count", list.size()},
                 {"subgroups", list}}};
    }
    auto g = parse_group_spec(o.group, o.cap);
    auto subs = enumerate_subgroups(g, o.cap);
    for (std::size_t i = 0; i < subs.size(); ++i) {
        Json j = subgroup_json(subs[i]);
        j["label"] = subgroup_label(i, subs[i].order(), g.order());
        list.push_back(j);
    }
    return {{{"group", g.to_string()}, {"order", g.order()}, {"count", subs.size()}, {"subgroups", list}}};
}

Outcome cmd_state(const Options &o) {
    auto states = candidates_for(o);
    Json list = Json::array();
    for (const auto &s : states) {
        if (o.subgroup.empty() || s.label == o.subgroup) {
            list.push_back(state_json(s, o.with_matrices));
        }
    }
    if (!o.subgroup.empty() && list.empty()) {
        throw DomainError("unknown subgroup label '" + o.subgroup + "'");
    }
    return {{{"states", list}}};
}

Outcome cmd_observable(const Options &o) {
    auto states = candidates_for(o);
    std::string kind = o.kind.empty() ? (looks_dihedral(o.group) ? "generic" : "class") : o.kind;
    Json meta;
    auto povm = build_povm(o, kind, states, meta);
    auto report = linalg::validate_povm(povm, tolerances(o));
    meta["outcomes"] = povm.size();
    meta["validation"] = povm_report_json(report);
    if (o.with_matrices) {
        Json ops = Json::array();
        for (const auto &a : povm.outcomes()) {
            ops.push_back(matrix_json(a));
        }
        meta["operators"] = ops;
    }
    auto eff = efficiency_report(states, povm, 0.5, tolerances(o));
    meta["efficiency"] = efficiency_json(eff);
    return {meta, report.pass};
}

Outcome cmd_verify(const Options &o) {
    if (o.dihedral && !looks_dihedral(o.group)) {
        throw DomainError("--dihedral expects a D<n> group");
    }
    if (looks_dihedral(o.group)) {
        auto report = verify_dihedral(parse_dihedral_spec(o.group, o.cap), tolerances(o));
        return {verify_json(report), report.pass};
    }
    auto report = verify_abelian(parse_group_spec(o.group, o.cap), o.m, tolerances(o), o.cap);
    return {verify_json(report), report.pass};
}

Outcome cmd_dihedral(Options &o) {
    if (!o.group.empty() && std::isdigit(static_cast<unsigned char>(o.group.front()))) {
        o.group = "D" + o.group;
    }
    auto d = parse_dihedral_spec(o.group, o.cap);
    o.group = d.to_string();
    auto r = dihedral_impossibility(d, tolerances(o));
    return {dihedral_json(r), !r.assertions_checked || r.impossibility_holds};
}

Outcome cmd_game(const Options &o) {
    GameConfig config;
    config.candidates = candidates_for(o);
    std::string kind = o.povm.empty() ? (looks_dihedral(o.group) ? "generic" : "class") : o.povm;
    Json meta;
    config.povm = build_povm(o, kind, config.candidates, meta);
    config.seed = o.seed;
    config.max_rounds = o.max_rounds;
    config.delta = o.delta;
    config.tol = tolerances(o);
    config.epsilon_zero = config.tol.zero;
    if (o.rule == "sole-survivor") {
        config.rule = DeclarationRule::kSoleSurvivor;
    } else if (o.rule == "max-likelihood") {
        config.rule = DeclarationRule::kMaxLikelihoodAtBudget;
    } else {
        throw DomainError("unknown declaration rule '" + o.rule + "'");
    }
    meta.erase("generic_construction");
    Json result = {{"povm", meta},
                   {"delta", config.delta},
                   {"max_rounds", config.max_rounds},
                   {"rule", o.rule},
                   {"candidates", labels(config.candidates)}};
    std::optional<std::size_t> secret;
    if (!o.secret.empty()) {
        secret = find_candidate(config, o.secret);
    }
    result["statistics"] = tournament_json(tournament(config, o.trials, secret));
    if (secret && o.trials == 1) {
        std::uint64_t stream = derive_seed(config.seed, *secret, 0);
        std::mt19937_64 rng(stream);
        result["transcript"] = transcript_json(play(config, *secret, rng, stream), labels(config.candidates));
    }
    return {result};
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Hidden-subgroup elimination observables: states, observables, verification and the elimination game",
                 "hspelim"};
    app.require_subcommand(1);
    Options o;

    auto common = [&](CLI::App *sub) {
        sub->add_option("group", o.group, "Group spec, e.g. Z4xZ2 or D5")->required();
        sub->add_option("--m", o.m, "Multicoset order m")->check(CLI::PositiveNumber);
        sub->add_option("--seed", o.seed, "Random seed");
        sub->add_option("--trials", o.trials, "Trials per secret");
        sub->add_option("--tol", o.tol, "Override every numerical tolerance")->check(CLI::PositiveNumber);
        sub->add_option("--cap", o.cap, "Dimension cap")->check(CLI::PositiveNumber);
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
        sub->add_option("--out", o.out_path, "Write the report to this file");
    };

    auto *subgroups = app.add_subcommand("subgroups", "List the subgroups of a group");
    common(subgroups);
    auto *state = app.add_subcommand("state", "Hidden-subgroup states rho_H");
    common(state);
    state->add_option("--subgroup", o.subgroup, "Subgroup label (trivial, full, H<i>, k=<k>)");
    state->add_flag("!--no-matrices", o.with_matrices, "Omit density matrices");
    auto *observable = app.add_subcommand("observable", "Build an observable and its elimination report");
    common(observable);
    observable->add_option("--kind", o.kind, "class | fourier | identity | generic");
    observable->add_option("--max-subset", o.max_subset, "Largest kernel subset for --kind generic");
    observable->add_flag("!--no-matrices", o.with_matrices, "Omit outcome operators");
    auto *verify = app.add_subcommand("verify", "Run the verification suite for one group");
    common(verify);
    verify->add_flag("--dihedral", o.dihedral, "Expect a dihedral group");
    auto *game = app.add_subcommand("game", "Simulate the elimination game");
    common(game);
    game->add_option("--secret", o.secret, "Play only this secret label");
    game->add_option("--delta", o.delta, "Likelihood-ratio rejection threshold");
    game->add_option("--max-rounds", o.max_rounds, "Round budget per game")->check(CLI::PositiveNumber);
    game->add_option("--rule", o.rule, "sole-survivor | max-likelihood");
    game->add_option("--povm", o.povm, "class | fourier | identity | generic");
    game->add_option("--max-subset", o.max_subset, "Largest kernel subset for --povm generic");
    auto *dihedral = app.add_subcommand("dihedral", "Elimination-subspace collapse for D_N");
    common(dihedral);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "usage error: " << e.what() << "\n" << app.help();
        return kExitUsage;
    }

    Json doc;
    bool pass = true;
    try {
        Outcome outcome;
        std::string command;
        if (subgroups->parsed()) {
            command = "subgroups";
            outcome = cmd_subgroups(o);
        } else if (state->parsed()) {
            command = "state";
            outcome = cmd_state(o);
        } else if (observable->parsed()) {
            command = "observable";
            outcome = cmd_observable(o);
        } else if (verify->parsed()) {
            command = "verify";
            outcome = cmd_verify(o);
        } else if (game->parsed()) {
            command = "game";
            outcome = cmd_game(o);
        } else {
            command = "dihedral";
            outcome = cmd_dihedral(o);
        }
        Json head = header(command, o);
        if (command == "game") {
            head["seed"] = o.seed;
            head["trials"] = o.trials;
        }
        doc = {{"header", head}, {"result", outcome.result}};
        pass = outcome.pass;
    } catch (const SizeError &e) {
        err << "resource cap: " << e.what() << "\n";
        return kExitCap;
    } catch (const DomainError &e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }

    std::string text = o.format == "text" ? render_text(doc) : doc.dump(2) + "\n";
    if (o.out_path.empty()) {
        out << text;
    } else {
        std::ofstream file(o.out_path, std::ios::binary);
        if (!file) {
            err << "cannot write " << o.out_path << "\n";
            return kExitUsage;
        }
        file << text;
    }
    return pass ? kExitOk : kExitCheckFailed;
}

}  // namespace hsp::cli
