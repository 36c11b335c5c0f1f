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

#ifndef HSP_HSP_STATES_H
#define HSP_HSP_STATES_H

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hsp/abelian_group.h"
#include "hsp/dihedral_group.h"
#include "hsp/linalg.h"

namespace hsp {

using Complex = std::complex<double>;
using CMatrix = linalg::Matrix<Complex>;
using CVector = linalg::Vector<Complex>;
using CSubspace = linalg::Subspace<Complex>;
using CPovm = linalg::Povm<Complex>;
using CDensity = linalg::DensityMatrix<Complex>;

/// |cH> = |H|^{-1/2} sum_{h in H} |c + h>.
struct CosetState {
    GroupElement representative;
    Subgroup subgroup;
    CVector vector;
};

CosetState coset_state(const GroupSpec &g, const Subgroup &h, const GroupElement &c);

/// |c_1 H> (x) ... (x) |c_m H>.
struct MulticosetState {
    std::vector<GroupElement> representatives;
    CVector vector;
};

MulticosetState multicoset_state(const GroupSpec &g, const Subgroup &h, std::span<const GroupElement> reps,
                                 std::size_t cap = kDefaultDimensionCap);

/// A labelled candidate state rho_H. Abelian states carry `subgroup`;
/// dihedral states carry `reflection`.
struct HiddenSubgroupState {
    std::string group;
    std::string label;
    std::size_t subgroup_order = 1;
    int m = 1;
    std::optional<Subgroup> subgroup;
    std::optional<HiddenReflection> reflection;
    CDensity density;
};

/// "trivial" for |H| = 1, "full" for H = G, otherwise "H<index>".
std::string subgroup_label(std::size_t index, std::size_t subgroup_order, std::size_t group_order);

/// rho_H = (|H|/|G|)^m sum over c in K^m of |psi(H,c)><psi(H,c)|, with K the
/// canonical transversal. Throws SizeError if |G|^m exceeds `cap`.
HiddenSubgroupState rho(const GroupSpec &g, const Subgroup &h, int m = 1, std::size_t cap = kDefaultDimensionCap);

/// Same construction over a caller-supplied transversal (one element of
/// each coset, any order). Throws DomainError if it is not a transversal.
HiddenSubgroupState rho_with_transversal(const GroupSpec &g, const Subgroup &h, std::span<const GroupElement> transversal,
                                         int m = 1, std::size_t cap = kDefaultDimensionCap);

/// S_G: one state per subgroup, in enumerate_subgroups order.
std::vector<HiddenSubgroupState> candidate_set(const GroupSpec &g, int m = 1, std::size_t cap = kDefaultDimensionCap);

/// |chi> = |G|^{-1/2} sum_g chi(g) |g>.
CVector character_vector(const GroupSpec &g, const Character &chi);

/// span{|chi> : chi in chars}.
CSubspace character_span(const GroupSpec &g, std::span<const Character> chars);

/// F(G): rank-one projectors onto the character vectors.
struct FourierObservable {
    std::vector<Character> characters;
    CPovm povm;
};

FourierObservable fourier_observable(const GroupSpec &g);

/// Uniform mixture of the N normalized reflection-coset states.
HiddenSubgroupState dihedral_rho(const DihedralSpec &d, const HiddenReflection &h);

/// One dihedral_rho per hidden reflection k = 0..N-1.
std::vector<HiddenSubgroupState> dihedral_candidate_set(const DihedralSpec &d);

}  // namespace hsp

#endif  // HSP_HSP_STATES_H
