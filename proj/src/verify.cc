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

#include "hsp/verify.h"

#include <algorithm>
#include <cmath>

#include "hsp/hsp_states.h"
#include "hsp/report_json.h"

namespace hsp {

namespace {

std::vector<Character> complement(const GroupSpec &g, const std::vector<Character> &chars) {
    std::vector<Character> out;
    for (auto &chi : characters(g)) {
        if (!std::binary_search(chars.begin(), chars.end(), chi)) {
            out.push_back(std::move(chi));
        }
    }
    return out;
}

std::vector<Character> meet(const std::vector<Character> &a, const std::vector<Character> &b) {
    std::vector<Character> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool is_subset(const std::vector<Character> &a, const std::vector<Character> &b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// Largest element of each coset: a second, independent transversal.
std::vector<GroupElement> top_transversal(const GroupSpec &g, const Subgroup &h) {
    std::vector<GroupElement> out;
    for (const auto &c : coset_transversal(g, h)) {
        out.push_back(coset(g, h, c).back());
    }
    return out;
}

CheckResult make(std::string name, bool pass, double residual, Json details = Json::object()) {
    return {std::move(name), pass, residual, std::move(details)};
}

}  // namespace

VerifyReport verify_abelian(const GroupSpec &g, int m, const Tolerances &tol, std::size_t cap) {
    VerifyReport report;
    report.group = g.to_string();
    const auto subgroups = enumerate_subgroups(g, cap);
    const auto states = candidate_set(g, 1, cap);
    std::vector<std::vector<Character>> perps;
    for (const auto &h : subgroups) {
        perps.push_back(orthogonal_group(g, h));
    }
    const auto fourier = fourier_observable(g);
    const auto classes = class_observable(g);
    const std::size_t n = subgroups.size();

    // Observables are valid POVMs.
    {
        auto f = linalg::validate_povm(fourier.povm, tol);
        auto a = linalg::validate_povm(classes.povm, tol);
        report.checks.push_back(make("povm_validity", f.pass && a.pass,
                                     std::max(f.completeness_deviation, a.completeness_deviation),
                                     {{"fourier", povm_report_json(f)}, {"class_observable", povm_report_json(a)}}));
    }

    // ker(rho_H) = span{|chi> : chi not in H-perp}.
    {
        double worst = 0.0;
        bool ok = true;
        Json dims = Json::array();
        for (std::size_t i = 0; i < n; ++i) {
            auto ker = linalg::kernel(states[i].density.matrix(), tol.kernel);
            auto expected = character_span(g, complement(g, perps[i]));
            double dist = linalg::projector_distance(ker, expected);
            worst = std::max(worst, dist);
            ok = ok && dist <= tol.subspace;
            dims.push_back(ker.rank());
        }
        report.checks.push_back(make("kernel_is_character_span", ok, worst, {{"kernel_dims", dims}}));
    }

    // |cH> = sqrt(|H|/|G|) sum_{chi in H-perp} conj(chi(c)) |chi>, cosets orthogonal.
    {
        double expansion = 0.0;
        double overlap = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const auto &h = subgroups[i];
            auto reps = coset_transversal(g, h);
            std::vector<CVector> vecs;
            for (const auto &c : g.elements()) {
                auto cs = coset_state(g, h, c).vector;
                CVector rebuilt = CVector::Zero(cs.size());
                for (const auto &chi : perps[i]) {
                    rebuilt += std::conj(evaluate(g, chi, c)) * character_vector(g, chi);
                }
                rebuilt *= std::sqrt(static_cast<double>(h.order()) / static_cast<double>(g.order()));
                expansion = std::max(expansion, linalg::max_abs(cs - rebuilt));
            }
            for (std::size_t a = 0; a < reps.size(); ++a) {
                for (std::size_t b = a + 1; b < reps.size(); ++b) {
                    auto va = coset_state(g, h, reps[a]).vector;
                    auto vb = coset_state(g, h, reps[b]).vector;
                    overlap = std::max(overlap, std::abs(va.dot(vb)));
                }
            }
        }
        report.checks.push_back(make("coset_fourier_expansion", expansion <= tol.subspace, expansion));
        report.checks.push_back(make("distinct_cosets_orthogonal", overlap <= tol.subspace, overlap));
    }

    // Spectrum of rho_H and transversal independence.
    {
        double spectrum = 0.0;
        double transversal = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const auto &h = subgroups[i];
            Eigen::SelfAdjointEigenSolver<CMatrix> es(states[i].density.matrix(), Eigen::EigenvaluesOnly);
            const double expected = static_cast<double>(h.order()) / static_cast<double>(g.order());
            std::size_t rank = 0;
            for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) {
                double ev = es.eigenvalues()(k);
                if (ev > tol.kernel) {
                    ++rank;
                    spectrum = std::max(spectrum, std::abs(ev - expected));
                } else {
                    spectrum = std::max(spectrum, std::abs(ev));
                }
            }
            if (rank * h.order() != g.order()) {
                spectrum = std::max(spectrum, 1.0);
            }
            auto alt = top_transversal(g, h);
            auto other = rho_with_transversal(g, h, alt, 1, cap);
            transversal =
                std::max(transversal, linalg::max_abs(other.density.matrix() - states[i].density.matrix()));
        }
        report.checks.push_back(make("rho_spectrum", spectrum <= tol.subspace, spectrum));
        report.checks.push_back(make("rho_transversal_independent", transversal <= tol.subspace, transversal));
    }

    // Exact identities in the character lattice.
    {
        bool sizes = true, monotone = true, strict_index = true, cross_index = true, duality = true;
        for (std::size_t i = 0; i < n; ++i) {
            sizes = sizes && perps[i].size() * subgroups[i].order() == g.order();
            auto back = orthogonal_group(g, as_subgroup(g, perps[i]));
            std::vector<GroupElement> back_elems;
            for (const auto &chi : back) {
                back_elems.push_back(GroupElement{chi.exponents});
            }
            duality = duality && back_elems == subgroups[i].elements();
        }
        for (std::size_t hi = 0; hi < n; ++hi) {
            for (std::size_t ji = 0; ji < n; ++ji) {
                const auto &h = subgroups[hi];
                const auto &j = subgroups[ji];
                monotone = monotone && (subgroup_contains(j, h) == is_subset(perps[hi], perps[ji]));
                if (hi == ji) {
                    continue;
                }
                if (is_strict(j, h)) {
                    // H-perp < J-perp, so the index is at least two.
                    strict_index = strict_index && 2 * perps[hi].size() <= perps[ji].size();
                } else if (!subgroup_contains(j, h)) {
                    cross_index = cross_index && 2 * meet(perps[hi], perps[ji]).size() <= perps[hi].size();
                }
            }
        }
        bool class_invariance = true;
        for (const auto &cls : classes.classes) {
            for (std::size_t i = 0; i < n; ++i) {
                bool first = std::binary_search(perps[i].begin(), perps[i].end(), cls.front());
                for (const auto &chi : cls) {
                    class_invariance =
                        class_invariance && std::binary_search(perps[i].begin(), perps[i].end(), chi) == first;
                }
            }
        }
        report.checks.push_back(make("perp_order_identity", sizes, 0.0));
        report.checks.push_back(make("perp_reverses_containment", monotone, 0.0));
        report.checks.push_back(make("perp_duality", duality, 0.0));
        report.checks.push_back(make("strict_containment_index", strict_index, 0.0));
        report.checks.push_back(make("non_containment_index", cross_index, 0.0));
        report.checks.push_back(make("classes_respect_perp", class_invariance, 0.0));
    }

    // Efficiency of A(G) with the one-directional bounds.
    EliminationReport eff = efficiency_report(states, classes.povm, 0.5, tol);
    {
        double worst = 1.0;
        bool ok = true;
        for (std::size_t hi = 0; hi < n; ++hi) {
            for (std::size_t ji = 0; ji < n; ++ji) {
                if (hi == ji) {
                    continue;
                }
                const auto &h = subgroups[hi];
                const auto &j = subgroups[ji];
                double value;
                if (is_strict(j, h)) {
                    value = eff.pairwise[ji][hi];
                } else if (!subgroup_contains(j, h)) {
                    value = eff.pairwise[hi][ji];
                } else {
                    continue;
                }
                worst = std::min(worst, value);
                ok = ok && value >= 0.5 - tol.zero;
            }
        }
        report.checks.push_back(make("class_observable_pair_bounds", ok, n > 1 ? 0.5 - worst : 0.0,
                                     {{"min_bound_value", worst}}));
        report.checks.push_back(make("class_observable_efficient", eff.efficient, 0.0, {{"c_star", eff.c_star}}));
    }

    // F(G) refines A(G); they coincide exactly when every class is a singleton.
    {
        auto ref = refinement_report(fourier.povm, classes.povm, tol);
        bool singleton = std::all_of(classes.classes.begin(), classes.classes.end(),
                                     [](const auto &c) { return c.size() == 1; });
        bool exponent_two = g.exponent() <= 2;
        bool same = same_up_to_relabeling(fourier.povm, classes.povm, tol.subspace);
        report.checks.push_back(make("fourier_refines_class_observable", ref.refines && ref.coarse_graining_residual <= tol.povm,
                                     ref.coarse_graining_residual));
        report.checks.push_back(make("fourier_equals_class_observable_iff_exponent_two",
                                     same == exponent_two && singleton == exponent_two, 0.0,
                                     {{"identical_up_to_relabeling", same}, {"class_count", classes.classes.size()}}));
    }

    // Optimality of A(G) and F(G); the trivial POVM {I} is not optimal.
    OptimalityReport opt_a = optimality_check(states, classes.povm, 4, 17, tol);
    {
        auto opt_f = optimality_check(states, fourier.povm, 0, 17, tol);
        CPovm trivial(std::vector<CMatrix>{CMatrix::Identity(static_cast<Eigen::Index>(g.order()),
                                                             static_cast<Eigen::Index>(g.order()))});
        auto opt_i = optimality_check(states, trivial, 0, 17, tol);
        bool expect_violation = n >= 2;
        report.checks.push_back(make("class_observable_optimal", opt_a.optimal && opt_a.sample_disagreements == 0, 0.0,
                                     optimality_json(opt_a, labels(states))));
        report.checks.push_back(make("fourier_optimal", opt_f.optimal, 0.0));
        report.checks.push_back(make("identity_povm_not_optimal", opt_i.optimal != expect_violation, 0.0,
                                     {{"violations", opt_i.violations.size()}}));
    }

    if (m > 1) {
        double worst = 0.0;
        bool ranks = true;
        for (std::size_t i = 0; i < n; ++i) {
            auto state = rho(g, subgroups[i], m, cap);
            CMatrix power = linalg::kron_power(states[i].density.matrix(), m);
            worst = std::max(worst, linalg::max_abs(state.density.matrix() - power));
            auto sup = linalg::support(state.density.matrix(), tol.kernel);
            auto index = static_cast<Eigen::Index>(g.order() / subgroups[i].order());
            ranks = ranks && sup.rank() == static_cast<Eigen::Index>(std::pow(static_cast<double>(index), m));
        }
        report.checks.push_back(make("multicoset_tensor_power", worst <= tol.subspace && ranks, worst, {{"m", m}}));
    }

    report.pass = std::all_of(report.checks.begin(), report.checks.end(), [](const CheckResult &c) { return c.pass; });
    report.summary = {{"group", report.group},
                      {"order", g.order()},
                      {"subgroups", n},
                      {"character_classes", classes.classes.size()},
                      {"c_star", eff.c_star},
                      {"efficient", eff.efficient},
                      {"optimal", opt_a.optimal},
                      {"m", m}};
    return report;
}

VerifyReport verify_dihedral(const DihedralSpec &d, const Tolerances &tol) {
    VerifyReport report;
    report.group = d.to_string();
    auto r = dihedral_impossibility(d, tol);
    if (r.assertions_checked) {
        double worst_anti = *std::max_element(r.antiperiodic_distance.begin(), r.antiperiodic_distance.end());
        double worst_pair = 0.0;
        for (const auto &p : r.pairs) {
            worst_pair = std::max(worst_pair, p.distance_to_v);
        }
        report.checks.push_back(make("elimination_subspace_dims", r.elimination_dims_ok, 0.0));
        report.checks.push_back(make("elimination_subspaces_antiperiodic", r.antiperiodic_ok, worst_anti));
        report.checks.push_back(make("pairwise_intersections_span_v", r.pairs_ok, worst_pair));
        report.checks.push_back(make("multi_candidate_union_is_one_dimensional", r.impossibility_holds, 0.0,
                                     {{"multi_span_dim", r.multi_span_dim}, {"ambient_dim", r.ambient_dim}}));
    }
    report.pass = std::all_of(report.checks.begin(), report.checks.end(), [](const CheckResult &c) { return c.pass; });
    report.summary = dihedral_json(r);
    return report;
}

}  // namespace hsp
