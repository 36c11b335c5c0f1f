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

#ifndef HSP_GAME_H
#define HSP_GAME_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "hsp/hsp_states.h"
#include "hsp/linalg.h"

namespace hsp {

enum class DeclarationRule {
    /// Hard and soft elimination; stop at a single survivor or the budget.
    kSoleSurvivor,
    /// Hard elimination only; run to the budget (or a single hard survivor)
    /// and declare the likelihood leader.
    kMaxLikelihoodAtBudget,
};

struct GameConfig {
    std::vector<HiddenSubgroupState> candidates;
    CPovm povm;
    std::uint64_t seed = 1;
    std::size_t max_rounds = 1000;
    double epsilon_zero = 1e-9;
    /// Soft-reject a candidate once its likelihood ratio to the leader drops below this.
    double delta = 1e-6;
    DeclarationRule rule = DeclarationRule::kSoleSurvivor;
    linalg::Tolerances tol;
};

/// Throws DomainError on an unusable configuration.
void validate(const GameConfig &config);

/// splitmix64 finalizer over (seed, secret, trial); gives every trial its
/// own stream so serial and parallel runs agree.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t secret, std::uint64_t trial);

/// Uniform double in [0, 1) from the top 53 bits.
double uniform01(std::mt19937_64 &rng);

/// Born-rule distribution tr(rho A_i), clipped to [0, 1] with values at or
/// below epsilon_zero set to 0, then renormalized. Throws DomainError if
/// the raw total deviates from 1 by more than tol.povm.
std::vector<double> outcome_distribution(const CMatrix &rho, const CPovm &a, double epsilon_zero = 1e-9,
                                         const linalg::Tolerances &tol = {});

std::size_t sample_from(std::span<const double> distribution, std::mt19937_64 &rng);

std::size_t sample_outcome(const CMatrix &rho, const CPovm &a, std::mt19937_64 &rng, double epsilon_zero = 1e-9,
                           const linalg::Tolerances &tol = {});

enum class CandidateStatus { kAlive, kHardEliminated, kSoftRejected };

struct RoundRecord {
    std::size_t outcome = 0;
    double probability = 0.0;
    std::vector<std::size_t> hard_eliminated;
    std::vector<std::size_t> soft_rejected;
    std::vector<std::size_t> survivors;
};

struct GameTranscript {
    std::uint64_t seed = 0;
    std::size_t secret = 0;
    std::string secret_label;
    std::vector<RoundRecord> rounds;
    /// -infinity for hard-eliminated candidates.
    std::vector<double> log_likelihood;
    std::vector<CandidateStatus> status;
    std::size_t declared = 0;
    std::string declared_label;
    std::size_t rounds_used = 0;
    bool declared_at_budget = false;
    bool correct = false;
};

/// Index of the candidate with this label; DomainError if absent.
std::size_t find_candidate(const GameConfig &config, const std::string &label);

/// One game with an explicit random stream.
GameTranscript play(const GameConfig &config, std::size_t secret, std::mt19937_64 &rng, std::uint64_t stream_seed);

/// One game seeded with derive_seed(config.seed, secret, 0).
GameTranscript play(const GameConfig &config, const std::string &secret_label);

struct SecretStats {
    std::string label;
    std::size_t trials = 0;
    std::size_t correct = 0;
    std::optional<double> accuracy;
    std::optional<double> mean_rounds;
    std::optional<std::size_t> median_rounds;
    std::optional<std::size_t> p90_rounds;
    std::optional<std::size_t> max_rounds;
};

struct TournamentStats {
    std::uint64_t seed = 0;
    std::size_t trials_per_secret = 0;
    std::vector<SecretStats> per_secret;
    std::optional<double> accuracy;
    std::optional<double> mean_rounds;
};

/// `trials` games per candidate secret (or only for `only_secret`); trial t
/// of secret s uses the stream derive_seed(config.seed, s, t).
TournamentStats tournament(const GameConfig &config, std::size_t trials,
                           std::optional<std::size_t> only_secret = std::nullopt);

struct DecayMeasurement {
    std::size_t secret = 0;
    std::size_t other = 0;
    /// tr(rho_other A^perp_secret).
    double separation = 0.0;
    /// No outcome possible under the secret can hard-eliminate `other`.
    bool unseparated = false;
    std::size_t rounds = 0;
    /// Mean of log p_other(i) - log p_secret(i) over sampled outcomes;
    /// -infinity if `other` is hard-eliminated along the way.
    double mean_increment = 0.0;
};

DecayMeasurement likelihood_decay(const GameConfig &config, std::size_t secret, std::size_t other, std::size_t rounds,
                                  std::uint64_t seed);

}  // namespace hsp

#endif  // HSP_GAME_H
