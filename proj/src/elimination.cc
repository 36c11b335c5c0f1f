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

#include "hsp/elimination.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

namespace hsp {

std::vector<CMatrix> densities(std::span<const HiddenSubgroupState> states) {
    std::vector<CMatrix> out;
    out.reserve(states.size());
    for (const auto &s : states) {
        out.push_back(s.density.matrix());
    }
    return out;
}

std::vector<std::string> labels(std::span<const HiddenSubgroupState> states) {
    std::vector<std::string> out;
    out.reserve(states.size());
    for (const auto &s : states) {
        out.push_back(s.label);
    }
    return out;
}

EliminationStructure elimination_structure(std::span<const CMatrix> candidates, const CPovm &povm,
                                           const Tolerances &tol) {
    auto check = linalg::validate_povm(povm, tol);
    if (!check.pass) {
        throw DomainError("elimination_structure: operators do not form a valid POVM");
    }
    const Eigen::Index d = povm.dim();
    EliminationStructure s;
    s.povm = povm;
    for (const auto &rho : candidates) {
        if (rho.rows() != d || rho.cols() != d) {
            throw DomainError("elimination_structure: candidate dimension does not match the POVM");
        }
        std::vector<double> probs;
        std::vector<std::size_t> set;
        CMatrix op = CMatrix::Zero(d, d);
        for (std::size_t i = 0; i < povm.size(); ++i) {
            double p = linalg::outcome_probability(rho, povm[i], tol);
            probs.push_back(p);
            if (std::abs(p) <= tol.zero) {
                set.push_back(i);
                op += povm[i];
            }
        }
        s.probabilities.push_back(std::move(probs));
        s.sets.push_back(std::move(set));
        s.operators.push_back(std::move(op));
    }
    return s;
}

EliminationReport efficiency_report(std::span<const HiddenSubgroupState> candidates, const CPovm &povm, double c_min,
                                    const Tolerances &tol) {
    EliminationReport r;
    r.labels = labels(candidates);
    r.c_min = c_min;
    r.povm_report = linalg::validate_povm(povm, tol);
    auto rhos = densities(candidates);
    auto s = elimination_structure(rhos, povm, tol);
    r.elimination_sets = s.sets;
    const std::size_t n = rhos.size();
    r.pairwise.assign(n, std::vector<double>(n, 0.0));
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            r.pairwise[a][b] = linalg::outcome_probability(rhos[a], s.operators[b], tol);
        }
    }
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            double sep = std::max(r.pairwise[a][b], r.pairwise[b][a]);
            if (!r.worst_pair || sep < r.c_star) {
                r.c_star = sep;
                r.worst_pair = std::make_pair(a, b);
            }
        }
    }
    r.efficient = r.c_star >= c_min - tol.zero;
    return r;
}

ClassObservable class_observable(const GroupSpec &g) {
    ClassObservable out;
    out.classes = character_classes(g);
    std::vector<CMatrix> projectors;
    for (const auto &cls : out.classes) {
        auto span = character_span(g, cls);
        projectors.push_back(span.projector());
        out.subspaces.push_back(std::move(span));
    }
    out.povm = CPovm(std::move(projectors));
    return out;
}

RefinementReport refinement_report(const CPovm &fine, const CPovm &coarse, const Tolerances &tol) {
    RefinementReport r;
    if (fine.dim() != coarse.dim()) {
        throw DomainError("refines: POVMs act on different dimensions");
    }
    std::vector<CSubspace> coarse_supports;
    for (const auto &b : coarse.outcomes()) {
        coarse_supports.push_back(linalg::support(b, tol.kernel));
    }
    const Eigen::Index d = fine.dim();
    std::vector<CMatrix> grouped(coarse.size(), CMatrix::Zero(d, d));
    bool all_assigned = true;
    for (const auto &a : fine.outcomes()) {
        if (linalg::max_abs(a) <= tol.zero) {
            r.assignment.emplace_back(std::nullopt);
            continue;
        }
        auto sup = linalg::support(a, tol.kernel);
        std::optional<std::size_t> home;
        int hits = 0;
        for (std::size_t j = 0; j < coarse_supports.size(); ++j) {
            if (linalg::contains(coarse_supports[j], sup, tol.subspace)) {
                home = j;
                ++hits;
            }
        }
        if (hits != 1) {
            home.reset();
            all_assigned = false;
        } else {
            grouped[*home] += a;
        }
        r.assignment.push_back(home);
    }
    r.refines = all_assigned;
    if (all_assigned) {
        for (std::size_t j = 0; j < coarse.size(); ++j) {
            r.coarse_graining_residual = std::max(r.coarse_graining_residual, linalg::max_abs(grouped[j] - coarse[j]));
        }
    } else {
        r.coarse_graining_residual = std::numeric_limits<double>::infinity();
    }
    return r;
}

bool refines(const CPovm &fine, const CPovm &coarse, const Tolerances &tol) {
    return refinement_report(fine, coarse, tol).refines;
}

bool same_up_to_relabeling(const CPovm &a, const CPovm &b, double tol) {
    if (a.size() != b.size() || a.dim() != b.dim()) {
        return false;
    }
    std::vector<char> used(b.size(), 0);
    for (const auto &x : a.outcomes()) {
        bool matched = false;
        for (std::size_t j = 0; j < b.size() && !matched; ++j) {
            if (!used[j] && linalg::max_abs(x - b[j]) <= tol) {
                used[j] = 1;
                matched = true;
            }
        }
        if (!matched) {
            return false;
        }
    }
    return true;
}

OptimalityReport optimality_check(std::span<const HiddenSubgroupState> candidates, const CPovm &povm,
                                  std::size_t samples, std::uint64_t seed, const Tolerances &tol) {
    OptimalityReport r;
    auto rhos = densities(candidates);
    auto s = elimination_structure(rhos, povm, tol);
    std::vector<CSubspace> kernels;
    for (const auto &rho : rhos) {
        kernels.push_back(linalg::kernel(rho, tol.kernel));
    }
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (std::size_t i = 0; i < povm.size(); ++i) {
        auto sup = linalg::support(povm[i], tol.kernel);
        for (std::size_t c = 0; c < rhos.size(); ++c) {
            double p = s.probabilities[c][i];
            if (std::abs(p) <= tol.zero) {
                continue;
            }
            auto overlap = linalg::intersect(sup, kernels[c], tol.subspace);
            if (!overlap.is_zero()) {
                double witness = linalg::outcome_probability(rhos[c], CMatrix(overlap.projector()), tol);
                r.violations.push_back({i, c, p, overlap.rank(), witness});
                continue;
            }
            for (std::size_t t = 0; t < samples; ++t) {
                CVector coeffs(sup.rank());
                for (Eigen::Index j = 0; j < coeffs.size(); ++j) {
                    coeffs(j) = Complex(gauss(rng), gauss(rng));
                }
                CVector w = sup.basis() * coeffs;
                w.normalize();
                CMatrix b = w * w.adjoint();
                ++r.samples_checked;
                if (linalg::outcome_probability(rhos[c], b, tol) <= tol.zero) {
                    ++r.sample_disagreements;
                }
            }
        }
    }
    r.optimal = r.violations.empty();
    return r;
}

std::vector<MergedOutcome> merge_by_elimination_behavior(const EliminationStructure &s) {
    std::map<std::vector<std::size_t>, CMatrix> merged;
    const Eigen::Index d = s.povm.dim();
    for (std::size_t i = 0; i < s.povm.size(); ++i) {
        std::vector<std::size_t> eliminated;
        for (std::size_t c = 0; c < s.sets.size(); ++c) {
            if (std::binary_search(s.sets[c].begin(), s.sets[c].end(), i)) {
                eliminated.push_back(c);
            }
        }
        auto [it, inserted] = merged.try_emplace(std::move(eliminated), CMatrix::Zero(d, d));
        it->second += s.povm[i];
    }
    std::vector<MergedOutcome> out;
    out.reserve(merged.size());
    for (auto &[key, op] : merged) {
        out.push_back({key, std::move(op)});
    }
    return out;
}

bool same_elimination_behavior(std::span<const MergedOutcome> a, std::span<const MergedOutcome> b, double tol) {
    if (a.size() != b.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].eliminated != b[i].eliminated || a[i].op.rows() != b[i].op.rows() ||
            linalg::max_abs(a[i].op - b[i].op) > tol) {
            return false;
        }
    }
    return true;
}

GenericConstruction generic_construction(std::span<const CMatrix> candidates, std::size_t max_subset,
                                         const Tolerances &tol, std::size_t subset_limit) {
    GenericConstruction out;
    if (candidates.empty()) {
        return out;
    }
    const Eigen::Index d = candidates.front().rows();
    out.ambient_dim = d;
    std::vector<CSubspace> kernels;
    for (const auto &rho : candidates) {
        if (rho.rows() != d) {
            throw DomainError("generic_construction: candidates differ in dimension");
        }
        kernels.push_back(linalg::kernel(rho, tol.kernel));
    }

    struct Node {
        std::vector<std::size_t> subset;
        CSubspace space;
    };
    auto record = [&](const Node &node) {
        for (const auto &seen : out.subspaces) {
            if (linalg::same_span(seen.subspace, node.space, tol.subspace)) {
                return;
            }
        }
        EliminationSubspace e{node.space, node.subset, {}};
        if (!node.space.is_zero()) {
            for (std::size_t c = 0; c < kernels.size(); ++c) {
                if (linalg::contains(kernels[c], node.space, tol.subspace)) {
                    e.eliminated.push_back(c);
                }
            }
        }
        out.subspaces.push_back(std::move(e));
    };
    auto explore = [&]() {
        if (++out.subsets_explored > subset_limit) {
            throw SizeError("generic_construction: more than " + std::to_string(subset_limit) +
                            " candidate subsets; lower max_subset or the number of candidates");
        }
    };

    std::vector<Node> level;
    if (max_subset >= 1) {
        for (std::size_t i = 0; i < kernels.size(); ++i) {
            explore();
            level.push_back({{i}, kernels[i]});
        }
    }
    for (std::size_t size = 1; size <= max_subset && !level.empty(); ++size) {
        std::vector<Node> next;
        for (const auto &node : level) {
            record(node);
            if (node.space.is_zero()) {
                out.subsets_pruned += kernels.size() - 1 - node.subset.back();
                continue;
            }
            if (size == max_subset) {
                continue;
            }
            for (std::size_t j = node.subset.back() + 1; j < kernels.size(); ++j) {
                explore();
                auto subset = node.subset;
                subset.push_back(j);
                next.push_back({std::move(subset), linalg::intersect(node.space, kernels[j], tol.subspace)});
            }
        }
        level = std::move(next);
    }

    CSubspace all(d), multi(d);
    for (const auto &e : out.subspaces) {
        if (e.subspace.is_zero()) {
            continue;
        }
        all = linalg::sum(all, e.subspace, tol.subspace);
        if (e.eliminated.size() >= 2) {
            multi = linalg::sum(multi, e.subspace, tol.subspace);
        }
    }
    out.span_dim = all.rank();
    out.multi_span_dim = multi.rank();
    out.spans_full = out.span_dim == d;
    out.multi_spans_full = out.multi_span_dim == d;
    return out;
}

CPovm elimination_povm(const GenericConstruction &construction, std::size_t min_eliminated, const Tolerances &tol) {
    const Eigen::Index d = construction.ambient_dim;
    std::vector<CMatrix> outcomes;
    CSubspace used(d);
    for (const auto &e : construction.subspaces) {
        if (e.subspace.is_zero() || e.eliminated.size() < min_eliminated) {
            continue;
        }
        CMatrix residual = e.subspace.basis() - used.projector() * e.subspace.basis();
        auto fresh = CSubspace::span(residual, 1e-6);
        if (fresh.is_zero()) {
            continue;
        }
        outcomes.push_back(fresh.projector());
        used = linalg::sum(used, fresh, tol.subspace);
    }
    auto rest = linalg::orthogonal_complement(used);
    if (!rest.is_zero()) {
        outcomes.push_back(rest.projector());
    }
    return CPovm(std::move(outcomes));
}

CSubspace antiperiodic_subspace(const DihedralSpec &d, int k) {
    const auto dim = static_cast<Eigen::Index>(d.order());
    CMatrix basis = CMatrix::Zero(dim, d.n());
    const double amp = 1.0 / std::sqrt(2.0);
    for (int i = 0; i < d.n(); ++i) {
        basis(static_cast<Eigen::Index>(d.index_of({i, 0})), i) = amp;
        basis(static_cast<Eigen::Index>(d.index_of({(i + k) % d.n(), 1})), i) = -amp;
    }
    return CSubspace::from_orthonormal(std::move(basis));
}

CVector dihedral_v(const DihedralSpec &d) {
    const auto dim = static_cast<Eigen::Index>(d.order());
    CVector v(dim);
    const double amp = 1.0 / std::sqrt(static_cast<double>(dim));
    for (Eigen::Index i = 0; i < dim; ++i) {
        v(i) = d.element_at(static_cast<std::size_t>(i)).flip == 0 ? amp : -amp;
    }
    return v;
}

namespace {

double binomial(std::size_t n, std::size_t k) {
    double out = 1.0;
    for (std::size_t i = 1; i <= k; ++i) {
        out = out * static_cast<double>(n - k + i) / static_cast<double>(i);
    }
    return out;
}

}  // namespace

DihedralReport dihedral_impossibility(const DihedralSpec &d, const Tolerances &tol) {
    DihedralReport r;
    r.n = d.n();
    r.prime = is_prime(d.n());
    r.ambient_dim = static_cast<Eigen::Index>(d.order());

    auto states = dihedral_candidate_set(d);
    auto rhos = densities(states);
    std::vector<CSubspace> kernels;
    for (int k = 0; k < d.n(); ++k) {
        kernels.push_back(linalg::kernel(rhos[static_cast<std::size_t>(k)], tol.kernel));
        r.elimination_dims.push_back(kernels.back().rank());
        r.antiperiodic_distance.push_back(linalg::projector_distance(kernels.back(), antiperiodic_subspace(d, k)));
    }

    auto v = CSubspace::span(dihedral_v(d));
    for (int k1 = 0; k1 < d.n(); ++k1) {
        for (int k2 = k1 + 1; k2 < d.n(); ++k2) {
            auto meet = linalg::intersect(kernels[static_cast<std::size_t>(k1)], kernels[static_cast<std::size_t>(k2)],
                                          tol.subspace);
            double dist = meet.rank() == 1 ? linalg::projector_distance(meet, v) : std::numeric_limits<double>::infinity();
            r.pairs.push_back({k1, k2, meet.rank(), dist, dist <= tol.subspace});
        }
    }

    // All subsets when affordable, otherwise as many sizes as fit the budget.
    const std::size_t n = static_cast<std::size_t>(d.n());
    const double budget = 65536.0;
    double total = 0.0;
    r.max_subset = 0;
    for (std::size_t s = 1; s <= n; ++s) {
        total += binomial(n, s);
        if (total > budget && s > 2) {
            break;
        }
        r.max_subset = s;
    }
    auto gc = generic_construction(rhos, r.max_subset, tol, static_cast<std::size_t>(budget) * 4);
    r.multi_span_dim = gc.multi_span_dim;

    if (r.prime) {
        r.assertions_checked = true;
        r.elimination_dims_ok = std::all_of(r.elimination_dims.begin(), r.elimination_dims.end(),
                                            [&](Eigen::Index dim) { return dim == d.n(); });
        r.antiperiodic_ok = std::all_of(r.antiperiodic_distance.begin(), r.antiperiodic_distance.end(),
                                        [&](double x) { return x <= tol.subspace; });
        r.pairs_ok = std::all_of(r.pairs.begin(), r.pairs.end(), [](const DihedralPair &p) { return p.equals_v; });
        r.impossibility_holds = r.elimination_dims_ok && r.antiperiodic_ok && r.pairs_ok && r.multi_span_dim == 1 &&
                                r.multi_span_dim < r.ambient_dim;
    }
    return r;
}

}  // namespace hsp
