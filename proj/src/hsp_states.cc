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

#include "hsp/hsp_states.h"

#include <cmath>

namespace hsp {

namespace {

std::size_t checked_power(std::size_t base, int m, std::size_t cap) {
    if (m < 1) {
        throw DomainError("multicoset order m must be >= 1");
    }
    std::size_t out = 1;
    for (int i = 0; i < m; ++i) {
        if (out > cap / base) {
            throw SizeError("dimension |G|^m exceeds cap " + std::to_string(cap));
        }
        out *= base;
    }
    return out;
}

std::string dims_of(const GroupSpec &g, int m) { return g.to_string() + (m > 1 ? "^" + std::to_string(m) : ""); }

}  // namespace

CosetState coset_state(const GroupSpec &g, const Subgroup &h, const GroupElement &c) {
    if (!is_subgroup(g, h)) {
        throw DomainError("coset_state: not a subgroup of " + g.to_string());
    }
    CVector v = CVector::Zero(static_cast<Eigen::Index>(g.order()));
    const double amp = 1.0 / std::sqrt(static_cast<double>(h.order()));
    for (const auto &y : coset(g, h, c)) {
        v(static_cast<Eigen::Index>(g.index_of(y))) = amp;
    }
    return {c, h, std::move(v)};
}

MulticosetState multicoset_state(const GroupSpec &g, const Subgroup &h, std::span<const GroupElement> reps,
                                 std::size_t cap) {
    checked_power(g.order(), static_cast<int>(reps.size()), cap);
    CVector v = CVector::Ones(1);
    for (const auto &c : reps) {
        CVector next = linalg::kron(v, coset_state(g, h, c).vector);
        v = std::move(next);
    }
    return {{reps.begin(), reps.end()}, std::move(v)};
}

std::string subgroup_label(std::size_t index, std::size_t subgroup_order, std::size_t group_order) {
    if (subgroup_order == 1) {
        return "trivial";
    }
    if (subgroup_order == group_order) {
        return "full";
    }
    return "H" + std::to_string(index);
}

HiddenSubgroupState rho_with_transversal(const GroupSpec &g, const Subgroup &h, std::span<const GroupElement> transversal,
                                         int m, std::size_t cap) {
    if (!is_subgroup(g, h)) {
        throw DomainError("rho: not a subgroup of " + g.to_string());
    }
    const std::size_t dim = checked_power(g.order(), m, cap);
    // Every coset must be hit exactly once.
    std::vector<char> covered(g.order(), 0);
    for (const auto &c : transversal) {
        for (const auto &y : coset(g, h, c)) {
            auto i = g.index_of(y);
            if (covered[i]) {
                throw DomainError("rho: representatives do not form a transversal");
            }
            covered[i] = 1;
        }
    }
    if (transversal.size() * h.order() != g.order()) {
        throw DomainError("rho: representatives do not form a transversal");
    }

    std::vector<CVector> cosets;
    cosets.reserve(transversal.size());
    for (const auto &c : transversal) {
        cosets.push_back(coset_state(g, h, c).vector);
    }

    const auto d = static_cast<Eigen::Index>(dim);
    CMatrix acc = CMatrix::Zero(d, d);
    const std::size_t k = cosets.size();
    std::vector<std::size_t> tuple(static_cast<std::size_t>(m), 0);
    while (true) {
        CVector psi = CVector::Ones(1);
        for (std::size_t idx : tuple) {
            CVector next = linalg::kron(psi, cosets[idx]);
            psi = std::move(next);
        }
        acc.noalias() += psi * psi.adjoint();
        std::size_t pos = tuple.size();
        while (pos > 0 && ++tuple[pos - 1] == k) {
            tuple[pos - 1] = 0;
            --pos;
        }
        if (pos == 0) {
            break;
        }
    }
    acc *= std::pow(static_cast<double>(h.order()) / static_cast<double>(g.order()), m);

    HiddenSubgroupState out{dims_of(g, m), "", h.order(), m, h, std::nullopt, CDensity::validated(std::move(acc))};
    return out;
}

HiddenSubgroupState rho(const GroupSpec &g, const Subgroup &h, int m, std::size_t cap) {
    checked_power(g.order(), m, cap);
    auto transversal = coset_transversal(g, h);
    auto state = rho_with_transversal(g, h, transversal, m, cap);
    state.label = subgroup_label(0, h.order(), g.order());
    return state;
}

std::vector<HiddenSubgroupState> candidate_set(const GroupSpec &g, int m, std::size_t cap) {
    checked_power(g.order(), m, cap);
    auto subgroups = enumerate_subgroups(g, cap);
    std::vector<HiddenSubgroupState> out;
    out.reserve(subgroups.size());
    for (std::size_t i = 0; i < subgroups.size(); ++i) {
        auto state = rho(g, subgroups[i], m, cap);
        state.label = subgroup_label(i, subgroups[i].order(), g.order());
        out.push_back(std::move(state));
    }
    return out;
}

CVector character_vector(const GroupSpec &g, const Character &chi) {
    const auto n = static_cast<Eigen::Index>(g.order());
    CVector v(n);
    const double norm = 1.0 / std::sqrt(static_cast<double>(g.order()));
    for (Eigen::Index i = 0; i < n; ++i) {
        v(i) = norm * evaluate(g, chi, g.element_at(static_cast<std::size_t>(i)));
    }
    return v;
}

CSubspace character_span(const GroupSpec &g, std::span<const Character> chars) {
    CMatrix basis(static_cast<Eigen::Index>(g.order()), static_cast<Eigen::Index>(chars.size()));
    for (std::size_t j = 0; j < chars.size(); ++j) {
        basis.col(static_cast<Eigen::Index>(j)) = character_vector(g, chars[j]);
    }
    return CSubspace::from_orthonormal(std::move(basis), 1e-9);
}

FourierObservable fourier_observable(const GroupSpec &g) {
    FourierObservable out;
    out.characters = characters(g);
    std::vector<CMatrix> outcomes;
    outcomes.reserve(out.characters.size());
    for (const auto &chi : out.characters) {
        CVector v = character_vector(g, chi);
        outcomes.push_back(v * v.adjoint());
    }
    out.povm = CPovm(std::move(outcomes));
    return out;
}

HiddenSubgroupState dihedral_rho(const DihedralSpec &d, const HiddenReflection &h) {
    if (!is_subgroup(d, h)) {
        throw DomainError("dihedral_rho: invalid hidden reflection");
    }
    const auto dim = static_cast<Eigen::Index>(d.order());
    CMatrix acc = CMatrix::Zero(dim, dim);
    const double amp = 1.0 / std::sqrt(2.0);
    for (const auto &[x, y] : reflection_cosets(d, h)) {
        CVector v = CVector::Zero(dim);
        v(static_cast<Eigen::Index>(d.index_of(x))) = amp;
        v(static_cast<Eigen::Index>(d.index_of(y))) = amp;
        acc.noalias() += v * v.adjoint();
    }
    acc /= static_cast<double>(d.n());
    return {d.to_string(), "k=" + std::to_string(h.k), 2, 1, std::nullopt, h, CDensity::validated(std::move(acc))};
}

std::vector<HiddenSubgroupState> dihedral_candidate_set(const DihedralSpec &d) {
    std::vector<HiddenSubgroupState> out;
    out.reserve(static_cast<std::size_t>(d.n()));
    for (int k = 0; k < d.n(); ++k) {
        out.push_back(dihedral_rho(d, hidden_reflection(d, k)));
    }
    return out;
}

}  // namespace hsp
