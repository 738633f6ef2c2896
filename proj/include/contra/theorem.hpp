#pragma once

#include <cstdint>
#include <optional>

#include "contra/observer.hpp"
#include "contra/rng.hpp"

namespace contra {

struct SweepSummary {
  std::uint64_t traces = 0;
  std::uint64_t episodes = 0;
  std::uint64_t terminated = 0;
  std::uint64_t premise_hits = 0;
  std::uint64_t violations = 0;
  std::optional<ObservedEpisode> first_violation;
};

/// Every perceived trace of length 1..max_length over ZERO plus
/// `ent_nonzero` entity labels and `env_count` environment labels; every
/// extracted episode goes through check_proposition.
SweepSummary exhaustive_proposition_sweep(std::size_t ent_nonzero, std::size_t env_count,
                                          std::size_t max_length);

enum class EpisodeShape {
  kRandom,             // entity and environment labels drawn freely
  kDeterministicEnv,   // environment successor is a fixed function of the pair
  kDeterministicBoth,  // both successors fixed functions; ends when the entity map yields ZERO
};

struct EpisodeParams {
  std::size_t ent_nonzero = 1;
  std::size_t env_count = 1;
  std::size_t max_length = 1;
  EpisodeShape shape = EpisodeShape::kRandom;
  double unterminated_probability = 0.0;
};

/// Random episode whose labels come from PerceptionSpace::numbered(ent_nonzero, env_count).
ObservedEpisode random_episode(Rng& rng, const EpisodeParams& params);

/// `trials` random episodes with up to `max_labels` labels per set (ZERO
/// included in the entity count) and lifetimes up to `max_length` steps.
SweepSummary randomized_proposition_sweep(std::uint64_t trials, std::size_t max_labels,
                                          std::size_t max_length, std::uint64_t seed);

struct DualitySummary {
  std::uint64_t episodes = 0;
  std::uint64_t deterministic = 0;
  std::uint64_t mismatches = 0;
};

/// Checks is_deterministic_env(ep) == is_contradictory(dual_view(ep)),
/// witnesses included, on `trials` random episodes.
DualitySummary randomized_duality_sweep(std::uint64_t trials, std::size_t max_labels,
                                        std::size_t max_length, std::uint64_t seed);

}  // namespace contra
