#include "contra/theorem.hpp"

#include <map>
#include <utility>

namespace contra {

namespace {

constexpr std::uint64_t kSweepTag = 0x7468656f72656dULL;

void tally(const ObservedEpisode& ep, const PerceptionSpace& space, SweepSummary& s) {
  ++s.episodes;
  const auto v = check_proposition(ep, space);
  if (v.terminated) ++s.terminated;
  if (v.premises_hold()) ++s.premise_hits;
  if (v.violation()) {
    ++s.violations;
    if (!s.first_violation) s.first_violation = ep;
  }
}

std::size_t pick(Rng& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

}  // namespace

SweepSummary exhaustive_proposition_sweep(std::size_t ent_nonzero, std::size_t env_count,
                                          std::size_t max_length) {
  const auto space = PerceptionSpace::numbered(ent_nonzero, env_count);
  std::vector<PerceivedPair> alphabet;
  for (const auto& e : space.ent_states()) {
    for (const auto& v : space.env_states()) alphabet.push_back({e, v});
  }
  const std::size_t radix = alphabet.size();

  SweepSummary s;
  for (std::size_t len = 1; len <= max_length; ++len) {
    std::vector<std::size_t> digits(len, 0);
    PerceivedTrace pt;
    pt.pairs.assign(len, alphabet[0]);
    while (true) {
      ++s.traces;
      for (const auto& ep : extract_entities(pt)) tally(ep, space, s);
      // Odometer increment.
      std::size_t i = 0;
      while (i < len && ++digits[i] == radix) {
        digits[i] = 0;
        pt.pairs[i] = alphabet[0];
        ++i;
      }
      if (i == len) break;
      pt.pairs[i] = alphabet[digits[i]];
    }
  }
  return s;
}

ObservedEpisode random_episode(Rng& rng, const EpisodeParams& p) {
  const auto space = PerceptionSpace::numbered(p.ent_nonzero, p.env_count);
  // Non-ZERO entity labels sort first; ZERO is last.
  const auto& ents = space.ent_states();
  const auto& envs = space.env_states();
  const std::size_t n_ent = ents.size() - 1;
  const std::size_t n_env = envs.size();
  const std::size_t target = 1 + pick(rng, p.max_length);

  // Successor maps over (entity index, env index); entity map index n_ent is ZERO.
  std::vector<std::size_t> env_map(n_ent * n_env);
  std::vector<std::size_t> ent_map(n_ent * n_env);
  for (auto& x : env_map) x = pick(rng, n_env);
  for (auto& x : ent_map) x = pick(rng, n_ent + 1);

  ObservedEpisode ep;
  ep.start = pick(rng, 4);
  std::size_t e = pick(rng, n_ent);
  std::size_t v = pick(rng, n_env);
  std::size_t next_e = n_ent;
  std::size_t next_v = 0;
  while (true) {
    ep.ent.push_back(ents[e]);
    ep.env.push_back(envs[v]);
    const std::size_t key = e * n_env + v;
    next_v = p.shape == EpisodeShape::kRandom ? pick(rng, n_env) : env_map[key];
    if (p.shape == EpisodeShape::kDeterministicBoth) {
      next_e = ent_map[key];
      if (next_e == n_ent || ep.ent.size() >= target) break;
    } else {
      if (ep.ent.size() >= target) break;
      next_e = pick(rng, n_ent);
    }
    e = next_e;
    v = next_v;
  }
  const bool cut = std::bernoulli_distribution(p.unterminated_probability)(rng);
  if (!cut) ep.successor = PerceivedPair{Label::zero(), envs[next_v]};
  return ep;
}

SweepSummary randomized_proposition_sweep(std::uint64_t trials, std::size_t max_labels,
                                          std::size_t max_length, std::uint64_t seed) {
  SweepSummary s;
  for (std::uint64_t t = 0; t < trials; ++t) {
    auto rng = derive_stream(seed, t, kSweepTag);
    EpisodeParams p;
    p.ent_nonzero = 1 + pick(rng, max_labels - 1);
    p.env_count = 1 + pick(rng, max_labels);
    p.max_length = max_length;
    p.shape = static_cast<EpisodeShape>(pick(rng, 3));
    p.unterminated_probability = 0.1;
    const auto ep = random_episode(rng, p);
    ++s.traces;
    tally(ep, PerceptionSpace::numbered(p.ent_nonzero, p.env_count), s);
  }
  return s;
}

DualitySummary randomized_duality_sweep(std::uint64_t trials, std::size_t max_labels,
                                        std::size_t max_length, std::uint64_t seed) {
  DualitySummary s;
  for (std::uint64_t t = 0; t < trials; ++t) {
    auto rng = derive_stream(seed, t, kSweepTag + 1);
    EpisodeParams p;
    p.ent_nonzero = 1 + pick(rng, max_labels - 1);
    p.env_count = 1 + pick(rng, max_labels);
    p.max_length = max_length;
    p.shape = static_cast<EpisodeShape>(pick(rng, 3));
    p.unterminated_probability = 0.25;
    const auto ep = random_episode(rng, p);
    ++s.episodes;
    const auto env_w = is_deterministic_env(ep);
    const auto dual_w = is_contradictory(dual_view(ep));
    if (!env_w) ++s.deterministic;
    if (env_w != dual_w) ++s.mismatches;
  }
  return s;
}

}  // namespace contra
