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

#ifndef HSP_ELIMINATION_H
#define HSP_ELIMINATION_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hsp/abelian_group.h"
#include "hsp/dihedral_group.h"
#include "hsp/hsp_states.h"
#include "hsp/linalg.h"

namespace hsp {

using linalg::Tolerances;

std::vector<CMatrix> densities(std::span<const HiddenSubgroupState> states);
std::vector<std::string> labels(std::span<const HiddenSubgroupState> states);

/// Elimination sets E_A(rho) = {i : tr(rho A_i) = 0} and elimination
/// operators A_rho^perp = sum over E_A(rho) of A_i, one per candidate.
struct EliminationStructure {
    CPovm povm;
    /// probabilities[c][i] = tr(rho_c A_i).
    std::vector<std::vector<double>> probabilities;
    std::vector<std::vector<std::size_t>> sets;
    std::vector<CMatrix> operators;
};

/// Throws DomainError if `povm` fails validate_povm or dimensions differ.
EliminationStructure elimination_structure(std::span<const CMatrix> candidates, const CPovm &povm,
                                           const Tolerances &tol = {});

struct EliminationReport {
    std::vector<std::string> labels;
    std::vector<std::vector<std::size_t>> elimination_sets;
    /// pairwise[a][b] = tr(rho_a A^perp_{rho_b}).
    std::vector<std::vector<double>> pairwise;
    /// min over unordered pairs of max(pairwise[a][b], pairwise[b][a]);
    /// 1 when there are fewer than two candidates.
    double c_star = 1.0;
    std::optional<std::pair<std::size_t, std::size_t>> worst_pair;
    double c_min = 0.5;
    bool efficient = true;
    linalg::PovmReport povm_report;
};

EliminationReport efficiency_report(std::span<const HiddenSubgroupState> candidates, const CPovm &povm,
                                    double c_min = 0.5, const Tolerances &tol = {});

/// A(G): orthogonal projectors onto the spans of the character classes.
struct ClassObservable {
    std::vector<std::vector<Character>> classes;
    std::vector<CSubspace> subspaces;
    CPovm povm;
};

ClassObservable class_observable(const GroupSpec &g);

struct RefinementReport {
    /// For each fine outcome, the unique coarse outcome whose support holds
    /// its support; nullopt if there is none or more than one.
    std::vector<std::optional<std::size_t>> assignment;
    /// max |sum of assigned fine outcomes - coarse outcome| over coarse outcomes.
    double coarse_graining_residual = 0.0;
    bool refines = false;
};

/// Zero fine outcomes are ignored (they can never be observed).
RefinementReport refinement_report(const CPovm &fine, const CPovm &coarse, const Tolerances &tol = {});

/// Each fine outcome's support lies in the support of exactly one coarse outcome.
bool refines(const CPovm &fine, const CPovm &coarse, const Tolerances &tol = {});

/// Same multiset of outcome operators within `tol` (max-entry distance).
bool same_up_to_relabeling(const CPovm &a, const CPovm &b, double tol = 1e-9);

struct OptimalityViolation {
    std::size_t outcome = 0;
    std::size_t candidate = 0;
    double outcome_probability = 0.0;
    /// Dimension of support(A_i) cap ker(rho): the projector onto it is a
    /// sub-operator of A_i that eliminates rho while A_i does not.
    Eigen::Index witness_rank = 0;
    double witness_probability = 0.0;
};

struct OptimalityReport {
    std::vector<OptimalityViolation> violations;
    bool optimal = true;
    /// Random positive B supported in support(A_i) drawn for every
    /// non-violating (outcome, candidate) pair with tr(rho A_i) > 0; a
    /// disagreement is a sample with tr(rho B) = 0.
    std::size_t samples_checked = 0;
    std::size_t sample_disagreements = 0;
};

/// An outcome A_i admits a refinement that eliminates rho iff
/// tr(rho A_i) > 0 while support(A_i) meets ker(rho) nontrivially.
OptimalityReport optimality_check(std::span<const HiddenSubgroupState> candidates, const CPovm &povm,
                                  std::size_t samples = 0, std::uint64_t seed = 1, const Tolerances &tol = {});

/// Outcomes grouped by the exact set of candidates they eliminate, with
/// their operators summed. Sorted by the eliminated set.
struct MergedOutcome {
    std::vector<std::size_t> eliminated;
    CMatrix op;
};

std::vector<MergedOutcome> merge_by_elimination_behavior(const EliminationStructure &s);

bool same_elimination_behavior(std::span<const MergedOutcome> a, std::span<const MergedOutcome> b, double tol = 1e-9);

struct EliminationSubspace {
    CSubspace subspace;
    /// The candidate subset whose kernels were intersected.
    std::vector<std::size_t> subset;
    /// Every candidate whose kernel contains the subspace (empty for {0}).
    std::vector<std::size_t> eliminated;
};

struct GenericConstruction {
    std::vector<EliminationSubspace> subspaces;
    Eigen::Index ambient_dim = 0;
    /// Dimension of the sum of all nonzero subspaces found.
    Eigen::Index span_dim = 0;
    /// Same, restricted to subspaces eliminating at least two candidates.
    Eigen::Index multi_span_dim = 0;
    bool spans_full = false;
    bool multi_spans_full = false;
    std::size_t subsets_explored = 0;
    std::size_t subsets_pruned = 0;
};

/// Intersections of candidate kernels over subsets of size <= max_subset,
/// explored by increasing size; supersets of a subset with zero intersection
/// are skipped. Throws SizeError once more than `subset_limit` subsets would
/// be explored.
GenericConstruction generic_construction(std::span<const CMatrix> candidates, std::size_t max_subset,
                                         const Tolerances &tol = {}, std::size_t subset_limit = std::size_t{1} << 20);

/// Projective POVM from the subspaces eliminating at least `min_eliminated`
/// candidates: each is taken in order with earlier directions projected
/// out, and the orthogonal complement of their sum is the last outcome.
CPovm elimination_povm(const GenericConstruction &construction, std::size_t min_eliminated = 2,
                       const Tolerances &tol = {});

/// The (k,1)-antiperiodic vectors sum_i l_i |(i,0)> - sum_i l_i |(i+k,1)>.
CSubspace antiperiodic_subspace(const DihedralSpec &d, int k);

/// v = sum_i |(i,0)> - sum_i |(i,1)>, normalized.
CVector dihedral_v(const DihedralSpec &d);

struct DihedralPair {
    int k1 = 0;
    int k2 = 0;
    Eigen::Index dim = 0;
    double distance_to_v = 0.0;
    bool equals_v = false;
};

struct DihedralReport {
    int n = 0;
    bool prime = false;
    Eigen::Index ambient_dim = 0;
    std::vector<Eigen::Index> elimination_dims;
    std::vector<double> antiperiodic_distance;
    std::vector<DihedralPair> pairs;
    /// Largest subset size explored for the multi-candidate union.
    std::size_t max_subset = 0;
    /// Dimension spanned by all intersections of >= 2 elimination subspaces.
    Eigen::Index multi_span_dim = 0;
    /// Assertions are only evaluated for prime N.
    bool assertions_checked = false;
    bool elimination_dims_ok = false;
    bool antiperiodic_ok = false;
    bool pairs_ok = false;
    bool impossibility_holds = false;
};

DihedralReport dihedral_impossibility(const DihedralSpec &d, const Tolerances &tol = {});

}  // namespace hsp

#endif  // HSP_ELIMINATION_H
