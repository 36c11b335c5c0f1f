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

#include <random>

#include "gtest/gtest.h"
#include "test_support.h"

using namespace hsp;
using linalg::max_abs;

namespace {

CMatrix oracle_rho(const GroupSpec &g, const Subgroup &h) {
    // (1/|G|) sum_x |xH><xH| summed over all x, each coset counted |H| times.
    const auto n = static_cast<Eigen::Index>(g.order());
    CMatrix acc = CMatrix::Zero(n, n);
    for (const auto &x : g.elements()) {
        CVector v = CVector::Zero(n);
        for (const auto &y : h.elements()) {
            v(static_cast<Eigen::Index>(g.index_of(g.add(x, y)))) = 1.0 / std::sqrt(double(h.order()));
        }
        acc += v * v.adjoint();
    }
    return acc / double(g.order());
}

CVector oracle_character(const GroupSpec &g, const Character &chi) {
    CVector v(static_cast<Eigen::Index>(g.order()));
    for (std::size_t i = 0; i < g.order(); ++i) {
        v(static_cast<Eigen::Index>(i)) =
            hsp::testing::character_value(g.factors(), chi.exponents, g.element_at(i).coords) /
            std::sqrt(double(g.order()));
    }
    return v;
}

}  // namespace

TEST(hsp_states, z2_examples) {
    GroupSpec g({2});
    auto s = candidate_set(g);
    ASSERT_EQ(s.size(), 2u);
    EXPECT_EQ(s[0].label, "trivial");
    EXPECT_EQ(s[1].label, "full");
    CMatrix half = CMatrix::Identity(2, 2) / 2.0;
    EXPECT_LT(max_abs(s[0].density.matrix() - half), 1e-15);
    CMatrix plus = CMatrix::Constant(2, 2, 0.5);
    EXPECT_LT(max_abs(s[1].density.matrix() - plus), 1e-15);
}

TEST(hsp_states, labels) {
    EXPECT_EQ(subgroup_label(0, 1, 4), "trivial");
    EXPECT_EQ(subgroup_label(2, 4, 4), "full");
    EXPECT_EQ(subgroup_label(1, 2, 4), "H1");
    auto s = candidate_set(GroupSpec({2, 2}));
    std::vector<std::string> labels;
    for (const auto &x : s) {
        labels.push_back(x.label);
    }
    EXPECT_EQ(labels, (std::vector<std::string>{"trivial", "H1", "H2", "H3", "full"}));
    auto z1 = candidate_set(GroupSpec({1}));
    ASSERT_EQ(z1.size(), 1u);
    EXPECT_EQ(z1[0].label, "trivial");
}

TEST(hsp_states, coset_states_are_unit_and_orthogonal) {
    GroupSpec g({4, 2});
    for (const auto &h : enumerate_subgroups(g)) {
        auto reps = coset_transversal(g, h);
        for (std::size_t i = 0; i < reps.size(); ++i) {
            auto a = coset_state(g, h, reps[i]).vector;
            EXPECT_NEAR(a.norm(), 1.0, 1e-12);
            for (std::size_t j = i + 1; j < reps.size(); ++j) {
                EXPECT_NEAR(std::abs(a.dot(coset_state(g, h, reps[j]).vector)), 0.0, 1e-12);
            }
        }
    }
}

TEST(hsp_states, rho_matches_oracle_and_fourier_form) {
    for (const auto &factors : hsp::testing::abelian_factorizations(24)) {
        GroupSpec g(factors);
        for (const auto &h : enumerate_subgroups(g)) {
            auto r = rho(g, h).density.matrix();
            EXPECT_LT(max_abs(r - oracle_rho(g, h)), 1e-12) << g.to_string();
            const auto n = static_cast<Eigen::Index>(g.order());
            CMatrix fourier = CMatrix::Zero(n, n);
            for (const auto &chi : orthogonal_group(g, h)) {
                CVector v = oracle_character(g, chi);
                fourier += v * v.adjoint();
            }
            fourier *= double(h.order()) / double(g.order());
            EXPECT_LT(max_abs(r - fourier), 1e-12) << g.to_string();
        }
    }
}

TEST(hsp_states, kernel_is_span_of_characters_outside_perp) {
    GroupSpec g({2, 4});
    for (const auto &h : enumerate_subgroups(g)) {
        auto r = rho(g, h).density.matrix();
        auto perp = orthogonal_group(g, h);
        std::vector<Character> outside;
        for (const auto &chi : characters(g)) {
            if (std::find(perp.begin(), perp.end(), chi) == perp.end()) {
                outside.push_back(chi);
            }
        }
        EXPECT_TRUE(linalg::same_span(linalg::kernel(r), character_span(g, outside)));
        Eigen::SelfAdjointEigenSolver<CMatrix> es(r);
        int nonzero = 0;
        for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
            double ev = es.eigenvalues()(i);
            if (ev > 1e-9) {
                ++nonzero;
                EXPECT_NEAR(ev, double(h.order()) / double(g.order()), 1e-12);
            }
        }
        EXPECT_EQ(std::size_t(nonzero), perp.size());
    }
}

TEST(hsp_states, transversal_independence) {
    GroupSpec g({6});
    for (const auto &h : enumerate_subgroups(g)) {
        auto canonical = coset_transversal(g, h);
        std::vector<GroupElement> shifted;
        for (const auto &c : canonical) {
            shifted.push_back(g.add(c, h.elements().back()));
        }
        EXPECT_LT(max_abs(rho(g, h, 2).density.matrix() - rho_with_transversal(g, h, shifted, 2).density.matrix()),
                  1e-12);
    }
    auto h = enumerate_subgroups(g)[1];
    std::vector<GroupElement> dup(coset_transversal(g, h).size(), g.identity());
    EXPECT_THROW(rho_with_transversal(g, h, dup), DomainError);
    std::vector<GroupElement> too_few{g.identity()};
    EXPECT_THROW(rho_with_transversal(g, h, too_few), DomainError);
}

TEST(hsp_states, multicoset_is_tensor_power) {
    GroupSpec g({2, 2});
    for (const auto &h : enumerate_subgroups(g)) {
        auto r1 = rho(g, h).density.matrix();
        auto r2 = rho(g, h, 2).density.matrix();
        auto r3 = rho(g, h, 3).density.matrix();
        EXPECT_LT(max_abs(r2 - linalg::kron(r1, r1)), 1e-12);
        EXPECT_LT(max_abs(r3 - linalg::kron_power(r1, 3)), 1e-12);
    }
    auto h = enumerate_subgroups(g)[1];
    std::vector<GroupElement> reps{GroupElement{{0, 1}}, GroupElement{{1, 0}}};
    auto mc = multicoset_state(g, h, reps);
    EXPECT_EQ(mc.vector.size(), 16);
    EXPECT_NEAR(mc.vector.norm(), 1.0, 1e-12);
}

TEST(hsp_states, size_and_domain_errors) {
    GroupSpec g({64});
    auto h = enumerate_subgroups(g).front();
    EXPECT_THROW(rho(g, h, 3), SizeError);
    EXPECT_THROW(candidate_set(GroupSpec({65}), 2), SizeError);
    EXPECT_THROW(rho(g, h, 0), DomainError);
    EXPECT_THROW(candidate_set(GroupSpec({4}), 2, 8), SizeError);
    Subgroup not_closed({{{0}}, {{1}}}, {});
    EXPECT_THROW(rho(GroupSpec({4}), not_closed), DomainError);
}

TEST(hsp_states, fourier_observable_is_a_projective_measurement) {
    for (const auto &factors : hsp::testing::abelian_factorizations(24)) {
        GroupSpec g(factors);
        auto f = fourier_observable(g);
        ASSERT_EQ(f.povm.size(), g.order());
        EXPECT_TRUE(linalg::validate_povm(f.povm).pass);
        for (std::size_t i = 0; i < f.povm.size(); ++i) {
            const auto &a = f.povm[i];
            EXPECT_LT(max_abs(a * a - a), 1e-12);
            CVector v = oracle_character(g, f.characters[i]);
            EXPECT_LT(max_abs(a - v * v.adjoint()), 1e-12);
        }
    }
}

TEST(hsp_states, character_span_rejects_duplicates) {
    GroupSpec g({3});
    std::vector<Character> dup{{{1}}, {{1}}};
    EXPECT_THROW(character_span(g, dup), DomainError);
}

TEST(hsp_states, dihedral_states) {
    DihedralSpec d(5);
    auto s = dihedral_candidate_set(d);
    ASSERT_EQ(s.size(), 5u);
    for (int k = 0; k < 5; ++k) {
        const auto &r = s[k].density.matrix();
        EXPECT_EQ(s[k].label, "k=" + std::to_string(k));
        EXPECT_EQ(s[k].subgroup_order, 2u);
        EXPECT_EQ(r.rows(), 10);
        EXPECT_LT(max_abs(r * r * 5.0 - r), 1e-12) << "rank-N state with eigenvalue 1/N";
        EXPECT_EQ(linalg::support(r).rank(), 5);
        // <(a,0)|rho|(a+k,1)> = 1/(2N).
        for (int a = 0; a < 5; ++a) {
            EXPECT_NEAR(std::abs(r(a, 5 + (a + k) % 5) - 0.1), 0.0, 1e-12);
        }
        for (int j = k + 1; j < 5; ++j) {
            EXPECT_GT(max_abs(r - s[j].density.matrix()), 0.05);
        }
    }
}
