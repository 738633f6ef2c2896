#include "contra/observer.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace contra {

namespace {

std::vector<Label> sorted_unique(std::vector<Label> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

enum class Component { kEnt, kEnv };

// Episode labels interned to small integers so the quadratic pair scan
// compares ints instead of strings. -1 marks an unknown successor.
struct InternedEpisode {
  std::vector<int> ent;
  std::vector<int> env;
  std::vector<int> next;
};

InternedEpisode intern(const ObservedEpisode& ep, Component successor_of) {
  std::map<Label, int> ids;
  auto id = [&](const Label& l) {
    auto [it, inserted] = ids.emplace(l, static_cast<int>(ids.size()));
    return it->second;
  };
  InternedEpisode out;
  const std::size_t n = ep.ent.size();
  out.ent.reserve(n);
  out.env.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.ent.push_back(id(ep.ent[i]));
    out.env.push_back(id(ep.env[i]));
  }
  const auto& seq = successor_of == Component::kEnt ? out.ent : out.env;
  out.next.assign(n, -1);
  for (std::size_t i = 0; i + 1 < n; ++i) out.next[i] = seq[i + 1];
  if (n > 0 && ep.successor) {
    out.next[n - 1] = id(successor_of == Component::kEnt ? ep.successor->ent : ep.successor->env);
  }
  return out;
}

std::optional<Witness> successor_conflict(const ObservedEpisode& ep, Component which) {
  if (ep.ent.size() != ep.env.size()) {
    throw std::invalid_argument("episode entity and environment lengths differ");
  }
  const auto e = intern(ep, which);
  const std::size_t n = e.ent.size();
  for (std::size_t a = 0; a < n; ++a) {
    if (e.next[a] < 0) continue;
    for (std::size_t b = a + 1; b < n; ++b) {
      if (e.next[b] < 0) continue;
      if (e.ent[a] == e.ent[b] && e.env[a] == e.env[b] && e.next[a] != e.next[b]) {
        return Witness{a, b};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

const std::string& Label::text() const {
  static const std::string kZeroText = "0";
  return zero_ ? kZeroText : text_;
}

PerceptionSpace::PerceptionSpace(std::vector<Label> ent_states, std::vector<Label> env_states)
    : ent_(sorted_unique(std::move(ent_states))), env_(sorted_unique(std::move(env_states))) {
  if (!has_ent(Label::zero())) {
    throw std::invalid_argument("entity perception set must contain ZERO");
  }
  if (env_.empty()) throw std::invalid_argument("environment perception set is empty");
}

PerceptionSpace PerceptionSpace::numbered(std::size_t ent_nonzero, std::size_t env_count) {
  std::vector<Label> ent{Label::zero()};
  std::vector<Label> env;
  for (std::size_t i = 0; i < ent_nonzero; ++i) ent.emplace_back("e" + std::to_string(i));
  for (std::size_t i = 0; i < env_count; ++i) env.emplace_back("v" + std::to_string(i));
  return PerceptionSpace(std::move(ent), std::move(env));
}

bool PerceptionSpace::has_ent(const Label& l) const {
  return std::binary_search(ent_.begin(), ent_.end(), l);
}

bool PerceptionSpace::has_env(const Label& l) const {
  return std::binary_search(env_.begin(), env_.end(), l);
}

PerceivedTrace perceive_trace(const Observer& obs, const Trace& trace) {
  PerceivedTrace pt;
  pt.pairs.reserve(trace.states.size());
  for (const auto& s : trace.states) pt.pairs.push_back({obs.ent(s), obs.env(s)});
  return pt;
}

PerceptionSpace observed_space(const PerceivedTrace& pt) {
  std::vector<Label> ent{Label::zero()};
  std::vector<Label> env;
  for (const auto& p : pt.pairs) {
    ent.push_back(p.ent);
    env.push_back(p.env);
  }
  if (env.empty()) env.emplace_back("empty");
  return PerceptionSpace(std::move(ent), std::move(env));
}

std::optional<CAState> detect_glider(const CAState& s) {
  std::optional<std::vector<Cell>> best;
  for (const auto& shape : glider_shapes_all_headings()) {
    const Cell anchor = *shape.live().begin();
    for (const auto& c : s.live()) {
      const auto dx = c.x - anchor.x;
      const auto dy = c.y - anchor.y;
      std::vector<Cell> cells;
      bool ok = true;
      for (const auto& v : shape.live()) {
        Cell t{v.x + dx, v.y + dy};
        if (!s.alive(t)) {
          ok = false;
          break;
        }
        cells.push_back(t);
      }
      if (!ok) continue;
      // Isolation: no foreign live cell touches the candidate.
      for (const auto& m : cells) {
        for (std::int64_t ny = -1; ny <= 1 && ok; ++ny) {
          for (std::int64_t nx = -1; nx <= 1 && ok; ++nx) {
            Cell n{m.x + nx, m.y + ny};
            if (s.alive(n) && std::find(cells.begin(), cells.end(), n) == cells.end()) ok = false;
          }
        }
        if (!ok) break;
      }
      if (ok && (!best || cells < *best)) best = std::move(cells);
    }
  }
  if (!best) return std::nullopt;
  return CAState(std::set<Cell>(best->begin(), best->end()));
}

std::string describe_cells(const CAState& s) {
  if (s.empty()) return "empty";
  std::ostringstream os;
  bool first = true;
  for (const auto& c : s.live()) {
    if (!first) os << ';';
    os << c.x << ',' << c.y;
    first = false;
  }
  return os.str();
}

Observer glider_observer() {
  Observer obs;
  obs.ent = [](const CAState& s) {
    auto g = detect_glider(s);
    return g ? Label(describe_cells(*g)) : Label::zero();
  };
  obs.env = [](const CAState& s) {
    auto g = detect_glider(s);
    if (!g) return Label(describe_cells(s));
    std::set<Cell> rest;
    std::set_difference(s.live().begin(), s.live().end(), g->live().begin(), g->live().end(),
                        std::inserter(rest, rest.end()));
    return Label(describe_cells(CAState(std::move(rest))));
  };
  return obs;
}

std::vector<ObservedEpisode> extract_entities(const PerceivedTrace& pt) {
  std::vector<ObservedEpisode> out;
  const auto& pairs = pt.pairs;
  std::size_t i = 0;
  while (i < pairs.size()) {
    if (pairs[i].ent.is_zero()) {
      ++i;
      continue;
    }
    ObservedEpisode ep;
    ep.start = i;
    while (i < pairs.size() && !pairs[i].ent.is_zero()) {
      ep.ent.push_back(pairs[i].ent);
      ep.env.push_back(pairs[i].env);
      ++i;
    }
    if (i < pairs.size()) ep.successor = pairs[i];
    out.push_back(std::move(ep));
  }
  return out;
}

std::size_t intelligence(const ObservedEpisode& ep) { return ep.last(); }

std::optional<Witness> is_contradictory(const ObservedEpisode& ep) {
  return successor_conflict(ep, Component::kEnt);
}

std::optional<Witness> is_deterministic_env(const ObservedEpisode& ep) {
  return successor_conflict(ep, Component::kEnv);
}

std::size_t contradiction_threshold(const PerceptionSpace& space) {
  return space.ent_states().size() * space.env_states().size();
}

PropositionVerdict check_proposition(const ObservedEpisode& ep, const PerceptionSpace& space) {
  for (std::size_t i = 0; i < ep.ent.size(); ++i) {
    if (!space.has_ent(ep.ent[i]) || !space.has_env(ep.env[i])) {
      throw std::invalid_argument("episode label outside the perception space at step " +
                                  std::to_string(i));
    }
  }
  if (ep.successor && (!space.has_ent(ep.successor->ent) || !space.has_env(ep.successor->env))) {
    throw std::invalid_argument("episode successor label outside the perception space");
  }

  PropositionVerdict v;
  v.terminated = ep.terminated();
  v.env_witness = is_deterministic_env(ep);
  v.deterministic_env = !v.env_witness;
  v.intelligence = intelligence(ep);
  v.threshold = contradiction_threshold(space);
  v.exceeds_threshold = v.intelligence > v.threshold;
  v.contradiction_witness = is_contradictory(ep);
  v.contradictory = v.contradiction_witness.has_value();
  return v;
}

ObservedEpisode dual_view(const ObservedEpisode& ep) {
  ObservedEpisode d;
  d.start = ep.start;
  d.ent = ep.env;
  d.env = ep.ent;
  if (ep.successor) d.successor = PerceivedPair{ep.successor->env, ep.successor->ent};
  return d;
}

PerceptionSpace dual_space(const PerceptionSpace& space) {
  std::vector<Label> ent = space.env_states();
  ent.push_back(Label::zero());
  return PerceptionSpace(std::move(ent), space.ent_states());
}

}  // namespace contra
