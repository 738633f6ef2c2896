#include "contra/coop.hpp"

#include <cmath>
#include <stdexcept>

namespace contra::coop {

namespace {

constexpr std::uint64_t kCoopTag = 0x636f6f70ULL;
constexpr std::uint64_t kMeetingTag = 0x6d656574ULL;

Stance flipped(Stance s) { return s == Stance::kCoop ? Stance::kNonCoop : Stance::kCoop; }

Stance draw_stance(Rng& rng) {
  return std::bernoulli_distribution(0.5)(rng) ? Stance::kNonCoop : Stance::kCoop;
}

MeanEstimate estimate(const std::vector<double>& xs) {
  MeanEstimate e;
  e.samples = xs.size();
  if (xs.empty()) return e;
  double sum = 0.0;
  for (double x : xs) sum += x;
  e.mean = sum / static_cast<double>(xs.size());
  if (xs.size() > 1) {
    double ss = 0.0;
    for (double x : xs) ss += (x - e.mean) * (x - e.mean);
    e.std_error = std::sqrt(ss / static_cast<double>(xs.size() - 1) /
                            static_cast<double>(xs.size()));
  }
  return e;
}

RepetitionResult run_repetition(const CoopConfig& cfg, std::size_t rep) {
  auto rng = derive_stream(cfg.seed, rep, kCoopTag);
  RepetitionResult r;
  r.environment.reserve(cfg.env_size);
  for (std::size_t j = 0; j < cfg.env_size; ++j) r.environment.push_back(draw_stance(rng));

  for (std::size_t i = 0; i < cfg.population; ++i) {
    auto rec = simulate_individual(rng, r.environment, cfg.flip_probability, cfg.payoff);
    for (std::size_t j = 0; j < cfg.env_size; ++j) {
      const int gain = meeting_payoff(rec.stance_history[j], r.environment[j], cfg.payoff).first;
      if (rec.stance_history[j] == Stance::kCoop) {
        r.coop_payoff_sum += gain;
        ++r.coop_meetings;
      } else {
        r.noncoop_payoff_sum += gain;
        ++r.noncoop_meetings;
      }
    }
    if (!rec.contradictory) ++r.non_contradictory;
    if (i == 0 || rec.total_payoff > r.winner_record.total_payoff) {
      r.winner = i;
      r.winner_record = std::move(rec);
    }
  }
  return r;
}

}  // namespace

std::pair<int, int> meeting_payoff(Stance a, Stance b, const PayoffMatrix& pm) {
  if (a == Stance::kCoop && b == Stance::kCoop) return {pm.cc, pm.cc};
  if (a == Stance::kNonCoop && b == Stance::kNonCoop) return {pm.nn, pm.nn};
  if (a == Stance::kCoop) return {pm.cn, pm.nc};
  return {pm.nc, pm.cn};
}

IndividualRecord simulate_individual(Rng& rng, const std::vector<Stance>& environment,
                                     double flip_probability, const PayoffMatrix& pm) {
  std::bernoulli_distribution flip(flip_probability);
  IndividualRecord rec;
  rec.initial_stance = draw_stance(rng);
  rec.stance_history.reserve(environment.size());
  Stance stance = rec.initial_stance;
  for (const auto opponent : environment) {
    if (flip(rng)) stance = flipped(stance);
    rec.stance_history.push_back(stance);
    // Measured against the assigned stance, so a flip before the first
    // meeting already counts.
    rec.contradictory = rec.contradictory || stance != rec.initial_stance;
    rec.total_payoff += meeting_payoff(stance, opponent, pm).first;
  }
  return rec;
}

double flip_probability_for_even_odds(std::size_t m) {
  if (m == 0) throw std::invalid_argument("environment size must be at least 1");
  return 1.0 - std::pow(2.0, -1.0 / static_cast<double>(m));
}

CoopReport run_coop_experiment(const CoopConfig& cfg) {
  if (cfg.env_size == 0 || cfg.population == 0 || cfg.repetitions == 0) {
    throw std::invalid_argument("env size, population and repetitions must be at least 1");
  }
  if (!(cfg.flip_probability >= 0.0 && cfg.flip_probability <= 1.0)) {
    throw std::invalid_argument("flip probability must lie in [0, 1]");
  }
  CoopReport report;
  report.config = cfg;
  report.repetitions.reserve(cfg.repetitions);
  for (std::size_t rep = 0; rep < cfg.repetitions; ++rep) {
    report.repetitions.push_back(run_repetition(cfg, rep));
    if (report.repetitions.back().winner_record.contradictory) ++report.contradictory_winners;
  }
  return report;
}

double CoopReport::contradictory_winner_percent() const {
  if (repetitions.empty()) return 0.0;
  return 100.0 * static_cast<double>(contradictory_winners) /
         static_cast<double>(repetitions.size());
}

double CoopReport::non_contradictory_fraction() const {
  std::uint64_t nc = 0;
  for (const auto& r : repetitions) nc += r.non_contradictory;
  const auto total = static_cast<double>(repetitions.size() * config.population);
  return total > 0 ? static_cast<double>(nc) / total : 0.0;
}

MeanEstimate CoopReport::meeting_payoff(Stance s) const {
  std::vector<double> means;
  std::uint64_t meetings = 0;
  for (const auto& r : repetitions) {
    const auto sum = s == Stance::kCoop ? r.coop_payoff_sum : r.noncoop_payoff_sum;
    const auto count = s == Stance::kCoop ? r.coop_meetings : r.noncoop_meetings;
    if (count == 0) continue;
    means.push_back(static_cast<double>(sum) / static_cast<double>(count));
    meetings += count;
  }
  auto e = estimate(means);
  e.samples = meetings;
  return e;
}

MeanEstimate sample_meeting_payoff(Stance stance, std::uint64_t samples, std::uint64_t seed,
                                   const PayoffMatrix& pm) {
  auto rng = derive_stream(seed, static_cast<std::uint64_t>(stance), kMeetingTag);
  double sum = 0.0;
  double sumsq = 0.0;
  for (std::uint64_t i = 0; i < samples; ++i) {
    const double g = meeting_payoff(stance, draw_stance(rng), pm).first;
    sum += g;
    sumsq += g * g;
  }
  MeanEstimate e;
  e.samples = samples;
  if (samples == 0) return e;
  const double n = static_cast<double>(samples);
  e.mean = sum / n;
  if (samples > 1) e.std_error = std::sqrt((sumsq - n * e.mean * e.mean) / (n - 1) / n);
  return e;
}

}  // namespace contra::coop
