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

#include "hsp/report_json.h"

#include <cmath>
#include <sstream>

namespace hsp {

Json element_json(const GroupElement &x) { return x.coords; }

Json subgroup_json(const Subgroup &h) {
    Json elems = Json::array();
    for (const auto &x : h.elements()) {
        elems.push_back(element_json(x));
    }
    Json gens = Json::array();
    for (const auto &x : h.generators()) {
        gens.push_back(element_json(x));
    }
    return {{"order", h.order()}, {"elements", elems}, {"generators", gens}};
}

Json character_json(const Character &chi) { return chi.exponents; }

Json matrix_json(const CMatrix &m) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            row.push_back({m(i, j).real(), m(i, j).imag()});
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

CMatrix matrix_from_json(const Json &j) {
    if (!j.is_array()) {
        throw DomainError("matrix JSON must be an array of rows");
    }
    const auto rows = static_cast<Eigen::Index>(j.size());
    const Eigen::Index cols = rows == 0 ? 0 : static_cast<Eigen::Index>(j.front().size());
    CMatrix m(rows, cols);
    for (Eigen::Index r = 0; r < rows; ++r) {
        const auto &row = j[static_cast<std::size_t>(r)];
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) {
            throw DomainError("matrix JSON rows must have equal length");
        }
        for (Eigen::Index c = 0; c < cols; ++c) {
            const auto &z = row[static_cast<std::size_t>(c)];
            if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number()) {
                throw DomainError("matrix JSON entries must be [re, im] pairs");
            }
            m(r, c) = Complex(z[0].get<double>(), z[1].get<double>());
        }
    }
    return m;
}

Json subspace_json(const CSubspace &s) {
    return {{"ambient_dim", s.ambient_dim()}, {"rank", s.rank()}, {"basis", matrix_json(s.basis())}};
}

Json tolerances_json(const Tolerances &tol) {
    return {{"hermitian", tol.hermitian}, {"psd", tol.psd},   {"trace", tol.trace},   {"orthonormal", tol.orthonormal},
            {"povm", tol.povm},           {"zero", tol.zero}, {"kernel", tol.kernel}, {"subspace", tol.subspace}};
}

Json povm_report_json(const linalg::PovmReport &r) {
    return {{"outcomes", r.min_eigenvalues.size()},
            {"max_hermitian_deviation", r.max_hermitian_deviation},
            {"min_eigenvalues", r.min_eigenvalues},
            {"completeness_deviation", r.completeness_deviation},
            {"hermitian", r.hermitian},
            {"psd", r.psd},
            {"complete", r.complete},
            {"pass", r.pass}};
}

Json state_json(const HiddenSubgroupState &s, bool include_matrix) {
    Json j = {{"group", s.group}, {"label", s.label}, {"m", s.m}, {"subgroup_order", s.subgroup_order}};
    if (s.subgroup) {
        j["subgroup"] = subgroup_json(*s.subgroup);
    }
    if (s.reflection) {
        j["subgroup"] = {{"order", 2}, {"elements", {{0, 0}, {s.reflection->k, 1}}}, {"k", s.reflection->k}};
    }
    j["dim"] = s.density.dim();
    if (include_matrix) {
        j["matrix"] = matrix_json(s.density.matrix());
    }
    return j;
}

Json efficiency_json(const EliminationReport &r) {
    Json j = {{"candidates", r.labels},
              {"povm_metadata", povm_report_json(r.povm_report)},
              {"elimination_sets", r.elimination_sets},
              {"pairwise_matrix", r.pairwise},
              {"c_star", r.c_star},
              {"c_min", r.c_min},
              {"efficient", r.efficient}};
    if (r.worst_pair) {
        j["worst_pair"] = {r.labels[r.worst_pair->first], r.labels[r.worst_pair->second]};
    }
    return j;
}

Json optimality_json(const OptimalityReport &r, const std::vector<std::string> &labels) {
    Json v = Json::array();
    for (const auto &x : r.violations) {
        v.push_back({{"outcome", x.outcome},
                     {"candidate", labels.at(x.candidate)},
                     {"outcome_probability", x.outcome_probability},
                     {"witness_rank", x.witness_rank},
                     {"witness_probability", x.witness_probability}});
    }
    return {{"optimal", r.optimal},
            {"violations", v},
            {"samples_checked", r.samples_checked},
            {"sample_disagreements", r.sample_disagreements}};
}

Json generic_json(const GenericConstruction &r) {
    Json subs = Json::array();
    for (const auto &e : r.subspaces) {
        subs.push_back({{"dim", e.subspace.rank()}, {"subset", e.subset}, {"eliminated", e.eliminated}});
    }
    return {{"ambient_dim", r.ambient_dim},
            {"subspace_dims", subs},
            {"span_dim", r.span_dim},
            {"multi_span_dim", r.multi_span_dim},
            {"spans_full", r.spans_full},
            {"multi_spans_full", r.multi_spans_full},
            {"subsets_explored", r.subsets_explored},
            {"subsets_pruned", r.subsets_pruned}};
}

Json dihedral_json(const DihedralReport &r) {
    Json pairs = Json::array();
    for (const auto &p : r.pairs) {
        Json dist = std::isfinite(p.distance_to_v) ? Json(p.distance_to_v) : Json(nullptr);
        pairs.push_back({{"k1", p.k1}, {"k2", p.k2}, {"dim", p.dim}, {"distance_to_v", dist}, {"equals_v", p.equals_v}});
    }
    Json j = {{"group", "D" + std::to_string(r.n)},
              {"n", r.n},
              {"prime", r.prime},
              {"ambient_dim", r.ambient_dim},
              {"elimination_dims", r.elimination_dims},
              {"antiperiodic_distance", r.antiperiodic_distance},
              {"pairwise_intersections", pairs},
              {"max_subset", r.max_subset},
              {"multi_span_dim", r.multi_span_dim},
              {"assertions_checked", r.assertions_checked}};
    if (r.assertions_checked) {
        j["elimination_dims_ok"] = r.elimination_dims_ok;
        j["antiperiodic_ok"] = r.antiperiodic_ok;
        j["pairs_ok"] = r.pairs_ok;
        j["impossibility_holds"] = r.impossibility_holds;
    }
    return j;
}

namespace {

const char *status_name(CandidateStatus s) {
    switch (s) {
        case CandidateStatus::kAlive:
            return "alive";
        case CandidateStatus::kHardEliminated:
            return "hard_eliminated";
        case CandidateStatus::kSoftRejected:
            return "soft_rejected";
    }
    return "unknown";
}

Json finite_or_null(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

template <typename T>
Json optional_json(const std::optional<T> &x) {
    return x ? Json(*x) : Json(nullptr);
}

}  // namespace

Json transcript_json(const GameTranscript &t, const std::vector<std::string> &labels) {
    Json rounds = Json::array();
    for (const auto &r : t.rounds) {
        Json hard = Json::array(), soft = Json::array(), alive = Json::array();
        for (auto c : r.hard_eliminated) hard.push_back(labels.at(c));
        for (auto c : r.soft_rejected) soft.push_back(labels.at(c));
        for (auto c : r.survivors) alive.push_back(labels.at(c));
        rounds.push_back({{"outcome", r.outcome},
                          {"probability", r.probability},
                          {"hard_eliminated", hard},
                          {"soft_rejected", soft},
                          {"survivors", alive}});
    }
    Json candidates = Json::array();
    for (std::size_t c = 0; c < labels.size(); ++c) {
        candidates.push_back(
            {{"label", labels[c]}, {"log_likelihood", finite_or_null(t.log_likelihood[c])}, {"status", status_name(t.status[c])}});
    }
    return {{"seed", t.seed},
            {"secret", t.secret_label},
            {"rounds", rounds},
            {"candidates", candidates},
            {"declared", t.declared_label},
            {"declared_at_budget", t.declared_at_budget},
            {"rounds_used", t.rounds_used},
            {"correct", t.correct}};
}

Json tournament_json(const TournamentStats &s) {
    Json per = Json::array();
    for (const auto &x : s.per_secret) {
        per.push_back({{"secret", x.label},
                       {"trials", x.trials},
                       {"correct", x.correct},
                       {"accuracy", optional_json(x.accuracy)},
                       {"mean_rounds", optional_json(x.mean_rounds)},
                       {"median_rounds", optional_json(x.median_rounds)},
                       {"p90_rounds", optional_json(x.p90_rounds)},
                       {"max_rounds", optional_json(x.max_rounds)}});
    }
    return {{"seed", s.seed},
            {"trials_per_secret", s.trials_per_secret},
            {"per_secret", per},
            {"accuracy", optional_json(s.accuracy)},
            {"mean_rounds", optional_json(s.mean_rounds)}};
}

Json verify_json(const VerifyReport &r) {
    Json checks = Json::array();
    for (const auto &c : r.checks) {
        checks.push_back({{"name", c.name}, {"pass", c.pass}, {"residual", c.residual}, {"details", c.details}});
    }
    return {{"group", r.group}, {"pass", r.pass}, {"checks", checks}, {"summary", r.summary}};
}

namespace {

void render(std::ostringstream &out, const Json &j, int indent) {
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    if (j.is_object()) {
        for (const auto &[key, value] : j.items()) {
            if (value.is_structured() && !value.empty() && !(value.is_array() && !value.front().is_structured())) {
                out << pad << key << ":\n";
                render(out, value, indent + 1);
            } else {
                out << pad << key << ": " << value.dump() << "\n";
            }
        }
    } else if (j.is_array()) {
        for (const auto &value : j) {
            if (value.is_structured()) {
                out << pad << "-\n";
                render(out, value, indent + 1);
            } else {
                out << pad << "- " << value.dump() << "\n";
            }
        }
    } else {
        out << pad << j.dump() << "\n";
    }
}

}  // namespace

std::string render_text(const Json &j) {
    std::ostringstream out;
    render(out, j, 0);
    return out.str();
}

}  // namespace hsp
