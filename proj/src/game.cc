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

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "hsp/errors.h"

namespace hsp {

namespace {

constexpr double kTieTolerance = 1e-9;

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::vector<std::vector<double>> distribution_table(const GameConfig &config) {
    std::vector<std::vector<double>> table;
    table.reserve(config.candidates.size());
    for (const auto &c : config.candidates) {
        table.push_back(outcome_distribution(c.density.matrix(), config.povm, config.epsilon_zero, config.tol));
    }
    return table;
}

// Highest likelihood among alive candidates; ties go to the larger
// subgroup, then the earlier candidate.
std::size_t leader(const GameConfig &config, const std::vector<double> &ll, const std::vector<CandidateStatus> &status) {
    std::optional<std::size_t> best;
    for (std::size_t c = 0; c < ll.size(); ++c) {
        if (status[c] != CandidateStatus::kAlive) {
            continue;
        }
        if (!best) {
            best = c;
            continue;
        }
        double diff = ll[c] - ll[*best];
        if (diff > kTieTolerance ||
            (std::abs(diff) <= kTieTolerance &&
             config.candidates[c].subgroup_order > config.candidates[*best].subgroup_order)) {
            best = c;
        }
    }
    return *best;
}

std::vector<std::size_t> alive(const std::vector<CandidateStatus> &status) {
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < status.size(); ++c) {
        if (status[c] == CandidateStatus::kAlive) {
            out.push_back(c);
        }
    }
    return out;
}

GameTranscript play_with_table(const GameConfig &config, const std::vector<std::vector<double>> &table,
                               std::size_t secret, std::mt19937_64 &rng, std::uint64_t stream_seed) {
    const std::size_t n = config.candidates.size();
    if (secret >= n) {
        throw DomainError("secret index out of range");
    }
    GameTranscript t;
    t.seed = stream_seed;
    t.secret = secret;
    t.secret_label = config.candidates[secret].label;
    t.log_likelihood.assign(n, 0.0);
    t.status.assign(n, CandidateStatus::kAlive);
    const double log_delta = std::log(config.delta);

    std::size_t survivors = n;
    while (survivors > 1 && t.rounds.size() < config.max_rounds) {
        RoundRecord round;
        round.outcome = sample_from(table[secret], rng);
        round.probability = table[secret][round.outcome];
        for (std::size_t c = 0; c < n; ++c) {
            if (t.status[c] != CandidateStatus::kAlive) {
                continue;
            }
            double q = table[c][round.outcome];
            if (q <= config.epsilon_zero) {
                t.status[c] = CandidateStatus::kHardEliminated;
                t.log_likelihood[c] = -std::numeric_limits<double>::infinity();
                round.hard_eliminated.push_back(c);
            } else {
                t.log_likelihood[c] += std::log(q);
            }
        }
        if (config.rule == DeclarationRule::kSoleSurvivor) {
            const double top = t.log_likelihood[leader(config, t.log_likelihood, t.status)];
            for (std::size_t c = 0; c < n; ++c) {
                if (t.status[c] == CandidateStatus::kAlive && t.log_likelihood[c] - top < log_delta) {
                    t.status[c] = CandidateStatus::kSoftRejected;
                    round.soft_rejected.push_back(c);
                }
            }
        }
        round.survivors = alive(t.status);
        survivors = round.survivors.size();
        t.rounds.push_back(std::move(round));
    }
    t.rounds_used = t.rounds.size();
    t.declared_at_budget = survivors > 1;
    t.declared = leader(config, t.log_likelihood, t.status);
    t.declared_label = config.candidates[t.declared].label;
    t.correct = t.declared == secret;
    return t;
}

}  // namespace

void validate(const GameConfig &config) {
    if (config.candidates.empty()) {
        throw DomainError("game: empty candidate set");
    }
    if (!(config.delta > 0.0 && config.delta < 1.0)) {
        throw DomainError("game: delta must lie in (0, 1)");
    }
    if (config.max_rounds < 1) {
        throw DomainError("game: max_rounds must be >= 1");
    }
    if (!linalg::validate_povm(config.povm, config.tol).pass) {
        throw DomainError("game: operators do not form a valid POVM");
    }
    for (const auto &c : config.candidates) {
        if (c.density.dim() != config.povm.dim()) {
            throw DomainError("game: candidate dimension does not match the POVM");
        }
    }
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t secret, std::uint64_t trial) {
    return splitmix64(splitmix64(splitmix64(seed) ^ secret) ^ trial);
}

double uniform01(std::mt19937_64 &rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::vector<double> outcome_distribution(const CMatrix &rho, const CPovm &a, double epsilon_zero,
                                         const linalg::Tolerances &tol) {
    std::vector<double> p;
    p.reserve(a.size());
    double raw = 0.0;
    for (const auto &op : a.outcomes()) {
        double v = linalg::outcome_probability(rho, op, tol);
        raw += v;
        p.push_back(v <= epsilon_zero ? 0.0 : std::min(v, 1.0));
    }
    if (std::abs(raw - 1.0) > tol.povm) {
        throw DomainError("outcome probabilities sum to " + std::to_string(raw));
    }
    double total = std::accumulate(p.begin(), p.end(), 0.0);
    for (auto &v : p) {
        v /= total;
    }
    return p;
}

std::size_t sample_from(std::span<const double> distribution, std::mt19937_64 &rng) {
    double u = uniform01(rng);
    double acc = 0.0;
    std::size_t last = 0;
    for (std::size_t i = 0; i < distribution.size(); ++i) {
        if (distribution[i] <= 0.0) {
            continue;
        }
        acc += distribution[i];
        last = i;
        if (u < acc) {
            return i;
        }
    }
    return last;
}

std::size_t sample_outcome(const CMatrix &rho, const CPovm &a, std::mt19937_64 &rng, double epsilon_zero,
                           const linalg::Tolerances &tol) {
    auto p = outcome_distribution(rho, a, epsilon_zero, tol);
    return sample_from(p, rng);
}

std::size_t find_candidate(const GameConfig &config, const std::string &label) {
    for (std::size_t c = 0; c < config.candidates.size(); ++c) {
        if (config.candidates[c].label == label) {
            return c;
        }
    }
    throw DomainError("unknown secret label '" + label + "'");
}

GameTranscript play(const GameConfig &config, std::size_t secret, std::mt19937_64 &rng, std::uint64_t stream_seed) {
    validate(config);
    return play_with_table(config, distribution_table(config), secret, rng, stream_seed);
}

GameTranscript play(const GameConfig &config, const std::string &secret_label) {
    std::size_t secret = find_candidate(config, secret_label);
    std::uint64_t s = derive_seed(config.seed, secret, 0);
    std::mt19937_64 rng(s);
    return play(config, secret, rng, s);
}

TournamentStats tournament(const GameConfig &config, std::size_t trials, std::optional<std::size_t> only_secret) {
    validate(config);
    if (only_secret && *only_secret >= config.candidates.size()) {
        throw DomainError("tournament: secret index out of range");
    }
    auto table = distribution_table(config);
    TournamentStats out;
    out.seed = config.seed;
    out.trials_per_secret = trials;
    std::size_t total_correct = 0;
    double total_rounds = 0.0;
    std::size_t secrets = 0;
    for (std::size_t s = 0; s < config.candidates.size(); ++s) {
        if (only_secret && s != *only_secret) {
            continue;
        }
        ++secrets;
        SecretStats st;
        st.label = config.candidates[s].label;
        st.trials = trials;
        std::vector<std::size_t> rounds;
        rounds.reserve(trials);
        for (std::size_t t = 0; t < trials; ++t) {
            std::uint64_t stream = derive_seed(config.seed, s, t);
            std::mt19937_64 rng(stream);
            auto game = play_with_table(config, table, s, rng, stream);
            st.correct += game.correct ? 1 : 0;
            rounds.push_back(game.rounds_used);
        }
        if (trials > 0) {
            std::sort(rounds.begin(), rounds.end());
            double sum = std::accumulate(rounds.begin(), rounds.end(), 0.0);
            st.accuracy = static_cast<double>(st.correct) / static_cast<double>(trials);
            st.mean_rounds = sum / static_cast<double>(trials);
            // nearest-rank percentiles
            auto rank = [&](double q) {
                auto idx = static_cast<std::size_t>(std::ceil(q * static_cast<double>(trials)));
                return rounds[std::max<std::size_t>(idx, 1) - 1];
            };
            st.median_rounds = rank(0.5);
            st.p90_rounds = rank(0.9);
            st.max_rounds = rounds.back();
            total_correct += st.correct;
            total_rounds += sum;
        }
        out.per_secret.push_back(std::move(st));
    }
    const std::size_t games = trials * secrets;
    if (games > 0) {
        out.accuracy = static_cast<double>(total_correct) / static_cast<double>(games);
        out.mean_rounds = total_rounds / static_cast<double>(games);
    }
    return out;
}

DecayMeasurement likelihood_decay(const GameConfig &config, std::size_t secret, std::size_t other, std::size_t rounds,
                                  std::uint64_t seed) {
    validate(config);
    const std::size_t n = config.candidates.size();
    if (secret >= n || other >= n) {
        throw DomainError("likelihood_decay: candidate index out of range");
    }
    const auto &rho_secret = config.candidates[secret].density.matrix();
    const auto &rho_other = config.candidates[other].density.matrix();
    auto p = outcome_distribution(rho_secret, config.povm, config.epsilon_zero, config.tol);
    auto q = outcome_distribution(rho_other, config.povm, config.epsilon_zero, config.tol);

    DecayMeasurement m;
    m.secret = secret;
    m.other = other;
    m.rounds = rounds;
    m.unseparated = true;
    for (std::size_t i = 0; i < config.povm.size(); ++i) {
        double raw = linalg::outcome_probability(rho_secret, config.povm[i], config.tol);
        if (std::abs(raw) <= config.epsilon_zero) {
            m.separation += linalg::outcome_probability(rho_other, config.povm[i], config.tol);
        }
        if (p[i] > 0.0 && q[i] <= 0.0) {
            m.unseparated = false;
        }
    }

    std::mt19937_64 rng(seed);
    double total = 0.0;
    for (std::size_t r = 0; r < rounds; ++r) {
        std::size_t i = sample_from(p, rng);
        if (q[i] <= 0.0) {
            m.mean_increment = -std::numeric_limits<double>::infinity();
            return m;
        }
        total += std::log(q[i]) - std::log(p[i]);
    }
    m.mean_increment = rounds > 0 ? total / static_cast<double>(rounds) : 0.0;
    return m;
}

}  // namespace hsp
