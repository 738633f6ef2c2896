#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "contra/rng.hpp"

namespace contra::coop {

enum class Stance : std::uint8_t { kCoop = 0, kNonCoop = 1 };

/// Payoff to the first-listed stance of a meeting.
struct PayoffMatrix {
  int cc = 2;
  int nn = 0;
  int cn = -1;
  int nc = 1;

  /// Expected payoff against a uniformly random opponent is the same for
  /// both stances.
  bool symmetric_expectation() const { return cc + cn == nc + nn; }
};

struct CoopConfig {
  std::size_t env_size = 20;      // m
  std::size_t population = 1000;  // n
  double flip_probability = 0.0;  // p
  std::size_t repetitions = 100;
  std::uint64_t seed = kDefaultSeed;
  PayoffMatrix payoff;
};

struct IndividualRecord {
  Stance initial_stance = Stance::kCoop;  // assigned before the first flip chance
  std::vector<Stance> stance_history;     // stance used at each meeting
  int total_payoff = 0;
  /// Some meeting was played with a stance other than the assigned one.
  bool contradictory = false;

  friend bool operator==(const IndividualRecord&, const IndividualRecord&) = default;
};

struct RepetitionResult {
  std::vector<Stance> environment;
  std::size_t winner = 0;
  IndividualRecord winner_record;
  std::size_t non_contradictory = 0;
  // Per-stance meeting payoff totals over the whole population.
  std::int64_t coop_payoff_sum = 0;
  std::uint64_t coop_meetings = 0;
  std::int64_t noncoop_payoff_sum = 0;
  std::uint64_t noncoop_meetings = 0;

  friend bool operator==(const RepetitionResult&, const RepetitionResult&) = default;
};

struct MeanEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::uint64_t samples = 0;
};

struct CoopReport {
  CoopConfig config;
  std::vector<RepetitionResult> repetitions;
  std::size_t contradictory_winners = 0;

  double contradictory_winner_percent() const;
  /// Fraction of all simulated individuals that never changed stance.
  double non_contradictory_fraction() const;
  /// Mean meeting payoff for one stance. The standard error treats each
  /// repetition as one observation, since meetings within a repetition
  /// share the same environment draw.
  MeanEstimate meeting_payoff(Stance s) const;
};

std::pair<int, int> meeting_payoff(Stance a, Stance b, const PayoffMatrix& pm = {});

/// p with (1 - p)^m = 1/2: a stance survives all m flip chances with
/// probability one half.
double flip_probability_for_even_odds(std::size_t m);

/// One individual: a uniform initial stance, then before each meeting a
/// flip with probability `flip_probability`.
IndividualRecord simulate_individual(Rng& rng, const std::vector<Stance>& environment,
                                     double flip_probability, const PayoffMatrix& pm = {});

/// Simulates the game; repetition r draws from derive_stream(seed, r).
CoopReport run_coop_experiment(const CoopConfig& cfg);

/// Payoff of `stance` against `samples` independent uniformly random
/// opponents.
MeanEstimate sample_meeting_payoff(Stance stance, std::uint64_t samples, std::uint64_t seed,
                                   const PayoffMatrix& pm = {});

}  // namespace contra::coop
