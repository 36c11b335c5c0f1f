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

#include "hsp/game.h"

#include <cmath>

#include "gtest/gtest.h"
#include "hsp/elimination.h"

using namespace hsp;

namespace {

GameConfig abelian_config(const GroupSpec &g, std::uint64_t seed = 1) {
    GameConfig c;
    c.candidates = candidate_set(g);
    c.povm = class_observable(g).povm;
    c.seed = seed;
    return c;
}

CMatrix projector(const CVector &v) { return v * v.adjoint(); }

CPovm pm_basis() {
    CVector plus(2), minus(2);
    plus << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
    minus << 1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0);
    return CPovm({projector(plus), projector(minus)});
}

}  // namespace

TEST(game, sample_outcome_examples) {
    std::mt19937_64 rng(1);
    CMatrix plus = pm_basis()[0];
    for (int i = 0; i < 100; ++i) {
        EXPECT_EQ(sample_outcome(plus, pm_basis(), rng), 0u);
    }

    const int n = 100000;
    int ones = 0;
    CMatrix mixed = CMatrix::Identity(2, 2) / 2.0;
    for (int i = 0; i < n; ++i) {
        ones += static_cast<int>(sample_outcome(mixed, pm_basis(), rng));
    }
    EXPECT_NEAR(double(ones) / n, 0.5, 3.0 * 0.5 / std::sqrt(double(n)));

    GroupSpec z4({4});
    auto a = class_observable(z4);
    auto rho = candidate_set(z4)[0].density.matrix();
    auto dist = outcome_distribution(rho, a.povm);
    ASSERT_EQ(dist.size(), 3u);
    for (std::size_t i = 0; i < dist.size(); ++i) {
        EXPECT_NEAR(dist[i], double(a.subspaces[i].rank()) / 4.0, 1e-12);
    }
    std::vector<int> counts(3, 0);
    for (int i = 0; i < n; ++i) {
        ++counts[sample_outcome(rho, a.povm, rng)];
    }
    for (std::size_t i = 0; i < 3; ++i) {
        double p = dist[i];
        EXPECT_NEAR(double(counts[i]) / n, p, 3.0 * std::sqrt(p * (1 - p) / n));
    }
}

TEST(game, outcome_distribution_checks_completeness) {
    CMatrix mixed = CMatrix::Identity(2, 2) / 2.0;
    EXPECT_THROW(outcome_distribution(mixed, CPovm({pm_basis()[0]})), DomainError);
}

TEST(game, seeds_and_uniforms) {
    EXPECT_NE(derive_seed(1, 0, 0), derive_seed(1, 0, 1));
    EXPECT_NE(derive_seed(1, 0, 1), derive_seed(1, 1, 0));
    EXPECT_EQ(derive_seed(7, 2, 3), derive_seed(7, 2, 3));
    std::mt19937_64 rng(5);
    for (int i = 0; i < 1000; ++i) {
        double u = uniform01(rng);
        EXPECT_GE(u, 0.0);
        EXPECT_LT(u, 1.0);
    }
    std::vector<double> dist{0.0, 1.0, 0.0};
    EXPECT_EQ(sample_from(dist, rng), 1u);
}

TEST(game, z2_trivial_secret_hard_eliminates_full) {
    auto c = abelian_config(GroupSpec({2}));
    auto t = play(c, "trivial");
    EXPECT_TRUE(t.correct);
    EXPECT_EQ(t.status[1], CandidateStatus::kHardEliminated);
    EXPECT_TRUE(std::isinf(t.log_likelihood[1]));
    const auto &last = t.rounds.back();
    EXPECT_EQ(last.outcome, 1u);
    EXPECT_EQ(last.hard_eliminated, (std::vector<std::size_t>{1}));
    for (std::size_t r = 0; r + 1 < t.rounds.size(); ++r) {
        EXPECT_EQ(t.rounds[r].outcome, 0u);
    }

    // Rounds to elimination are geometric with p = 1/2.
    auto stats = tournament(c, 4000, 0);
    ASSERT_TRUE(stats.per_secret[0].mean_rounds.has_value());
    EXPECT_NEAR(*stats.per_secret[0].mean_rounds, 2.0, 0.1);
    EXPECT_EQ(*stats.per_secret[0].accuracy, 1.0);
}

TEST(game, z2_full_secret_soft_rejects_trivial) {
    auto c = abelian_config(GroupSpec({2}));
    auto t = play(c, "full");
    EXPECT_TRUE(t.correct);
    EXPECT_EQ(t.rounds_used, 20u);
    EXPECT_EQ(t.status[0], CandidateStatus::kSoftRejected);
    EXPECT_EQ(t.rounds.back().soft_rejected, (std::vector<std::size_t>{0}));
    for (const auto &r : t.rounds) {
        EXPECT_EQ(r.outcome, 0u);
        EXPECT_TRUE(r.hard_eliminated.empty());
    }
    EXPECT_NEAR(t.log_likelihood[0] - t.log_likelihood[1], 20 * std::log(0.5), 1e-9);
}

TEST(game, single_candidate_is_declared_immediately) {
    auto c = abelian_config(GroupSpec({1}));
    auto t = play(c, "trivial");
    EXPECT_EQ(t.rounds_used, 0u);
    EXPECT_TRUE(t.correct);
}

TEST(game, transcript_invariants) {
    auto c = abelian_config(GroupSpec({2, 4}), 11);
    for (std::size_t secret = 0; secret < c.candidates.size(); ++secret) {
        for (std::uint64_t trial = 0; trial < 20; ++trial) {
            auto seed = derive_seed(c.seed, secret, trial);
            std::mt19937_64 rng(seed);
            auto t = play(c, secret, rng, seed);
            EXPECT_NE(t.status[secret], CandidateStatus::kHardEliminated);
            EXPECT_TRUE(std::isfinite(t.log_likelihood[secret]));
            std::size_t prev = c.candidates.size();
            for (const auto &r : t.rounds) {
                EXPECT_GT(r.probability, c.epsilon_zero);
                EXPECT_LE(r.survivors.size(), prev);
                prev = r.survivors.size();
                EXPECT_TRUE(std::find(r.survivors.begin(), r.survivors.end(), secret) != r.survivors.end() ||
                            t.status[secret] == CandidateStatus::kSoftRejected);
            }
            EXPECT_EQ(t.rounds.size(), t.rounds_used);
        }
    }
}

TEST(game, reproducible_given_seed) {
    auto c = abelian_config(GroupSpec({2, 2}), 42);
    auto a = tournament(c, 50);
    auto b = tournament(c, 50);
    ASSERT_EQ(a.per_secret.size(), b.per_secret.size());
    for (std::size_t i = 0; i < a.per_secret.size(); ++i) {
        EXPECT_EQ(a.per_secret[i].mean_rounds, b.per_secret[i].mean_rounds);
        EXPECT_EQ(a.per_secret[i].correct, b.per_secret[i].correct);
    }
    auto t1 = play(c, "H2");
    auto t2 = play(c, "H2");
    ASSERT_EQ(t1.rounds.size(), t2.rounds.size());
    for (std::size_t r = 0; r < t1.rounds.size(); ++r) {
        EXPECT_EQ(t1.rounds[r].outcome, t2.rounds[r].outcome);
    }
}

TEST(game, uninformative_povm_guesses_by_tie_rule) {
    GroupSpec g({2, 2});
    auto c = abelian_config(g);
    c.povm = CPovm({CMatrix::Identity(4, 4)});
    c.max_rounds = 10;
    auto stats = tournament(c, 20);
    ASSERT_TRUE(stats.accuracy.has_value());
    EXPECT_NEAR(*stats.accuracy, 1.0 / double(c.candidates.size()), 1e-12);
    EXPECT_EQ(*stats.per_secret.back().accuracy, 1.0);
}

TEST(game, max_likelihood_rule) {
    auto c = abelian_config(GroupSpec({4}), 3);
    c.rule = DeclarationRule::kMaxLikelihoodAtBudget;
    c.max_rounds = 60;
    auto stats = tournament(c, 200);
    EXPECT_GE(*stats.accuracy, 0.99);
    auto t = play(c, "full");
    EXPECT_TRUE(t.declared_at_budget);
    EXPECT_EQ(t.rounds_used, 60u);
    for (auto s : t.status) {
        EXPECT_NE(s, CandidateStatus::kSoftRejected);
    }
}

TEST(game, zero_trials) {
    auto c = abelian_config(GroupSpec({2}));
    auto stats = tournament(c, 0);
    EXPECT_FALSE(stats.accuracy.has_value());
    EXPECT_FALSE(stats.mean_rounds.has_value());
    EXPECT_FALSE(stats.per_secret[0].accuracy.has_value());
}

TEST(game, config_errors) {
    auto c = abelian_config(GroupSpec({2}));
    EXPECT_THROW(play(c, "H7"), DomainError);
    auto bad = c;
    bad.delta = 1.0;
    EXPECT_THROW(validate(bad), DomainError);
    bad = c;
    bad.delta = 0.0;
    EXPECT_THROW(validate(bad), DomainError);
    bad = c;
    bad.max_rounds = 0;
    EXPECT_THROW(validate(bad), DomainError);
    bad = c;
    bad.povm = CPovm({pm_basis()[0]});
    EXPECT_THROW(validate(bad), DomainError);
    EXPECT_NO_THROW(validate(c));
}

TEST(game, likelihood_decay) {
    auto c = abelian_config(GroupSpec({2}));
    auto m = likelihood_decay(c, 1, 0, 10000, 9);
    EXPECT_NEAR(m.separation, 0.5, 1e-12);
    EXPECT_TRUE(m.unseparated);
    EXPECT_NEAR(m.mean_increment, std::log(0.5), 1e-9);

    auto hard = likelihood_decay(c, 0, 1, 1000, 9);
    EXPECT_FALSE(hard.unseparated);
    EXPECT_TRUE(std::isinf(hard.mean_increment));
}

TEST(game, dihedral_candidates_survive_generic_povm) {
    DihedralSpec d(3);
    GameConfig c;
    c.candidates = dihedral_candidate_set(d);
    auto gc = generic_construction(densities(c.candidates), c.candidates.size());
    c.povm = elimination_povm(gc);
    c.rule = DeclarationRule::kMaxLikelihoodAtBudget;
    c.max_rounds = 200;
    auto t = play(c, "k=0");
    std::size_t alive = 0;
    for (auto s : t.status) {
        alive += s != CandidateStatus::kHardEliminated;
    }
    EXPECT_GE(alive, 2u);
    EXPECT_TRUE(t.declared_at_budget);
}
