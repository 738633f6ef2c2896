#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "contra/ca.hpp"
#include "contra/coop.hpp"
#include "contra/market.hpp"
#include "contra/observer.hpp"
#include "contra/perceived_io.hpp"
#include "contra/theorem.hpp"
#include "contra/updown.hpp"

namespace py = pybind11;
using namespace contra;

namespace {

py::int_ to_py(const updown::BigInt& v) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(v.str().c_str(), nullptr, 10));
}

py::object label_to_py(const Label& l) {
  if (l.is_zero()) return py::none();
  return py::str(l.text());
}

Label label_from_py(const py::handle& h) {
  if (h.is_none()) return Label::zero();
  return Label(h.cast<std::string>());
}

std::vector<std::pair<std::int64_t, std::int64_t>> cells_of(const CAState& s) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (const auto& c : s.live()) out.emplace_back(c.x, c.y);
  return out;
}

CAState state_of(const std::vector<std::pair<std::int64_t, std::int64_t>>& cells) {
  std::set<Cell> live;
  for (auto [x, y] : cells) live.insert({x, y});
  return CAState(std::move(live));
}

ObservedEpisode episode_from_py(std::size_t start, const py::list& ent, const py::list& env,
                                const py::object& successor) {
  ObservedEpisode ep;
  ep.start = start;
  for (auto h : ent) ep.ent.push_back(label_from_py(h));
  for (auto h : env) ep.env.push_back(label_from_py(h));
  if (!successor.is_none()) {
    auto t = successor.cast<py::tuple>();
    ep.successor = PerceivedPair{label_from_py(t[0]), label_from_py(t[1])};
  }
  return ep;
}

py::dict episode_to_py(const ObservedEpisode& ep) {
  py::list ent, env;
  for (const auto& l : ep.ent) ent.append(label_to_py(l));
  for (const auto& l : ep.env) env.append(label_to_py(l));
  py::dict d;
  d["start"] = ep.start;
  d["ent"] = ent;
  d["env"] = env;
  d["successor"] = ep.successor ? py::object(py::make_tuple(label_to_py(ep.successor->ent),
                                                            label_to_py(ep.successor->env)))
                                : py::object(py::none());
  d["terminated"] = ep.terminated();
  d["intelligence"] = intelligence(ep);
  return d;
}

py::object witness_to_py(const std::optional<Witness>& w) {
  if (!w) return py::none();
  return py::make_tuple(w->a, w->b);
}

}  // namespace

PYBIND11_MODULE(_contra, m) {
  m.doc() = "Observer-relative entities and contradiction in cellular automata";

  m.def("parse_pattern", [](const std::string& text) { return cells_of(parse_pattern(text)); },
        "Live cells (x, y) of a '.'/'O' pattern.");
  m.def("write_pattern", [](const std::vector<std::pair<std::int64_t, std::int64_t>>& cells) {
    return write_pattern(state_of(cells));
  });
  m.def("life_step", [](const std::vector<std::pair<std::int64_t, std::int64_t>>& cells) {
    return cells_of(life_step(state_of(cells)));
  });
  m.def("run", [](const std::vector<std::pair<std::int64_t, std::int64_t>>& cells, std::size_t steps) {
    std::vector<std::vector<std::pair<std::int64_t, std::int64_t>>> out;
    for (const auto& s : run(state_of(cells), steps).states) out.push_back(cells_of(s));
    return out;
  });
  m.def("glider_block_scene", [] { return cells_of(glider_block_scene()); });

  m.def("observe_glider_trace", [](const std::vector<std::pair<std::int64_t, std::int64_t>>& cells,
                                   std::size_t steps) {
    const auto pt = perceive_trace(glider_observer(), run(state_of(cells), steps));
    py::list pairs;
    for (const auto& p : pt.pairs) pairs.append(py::make_tuple(label_to_py(p.ent), label_to_py(p.env)));
    return pairs;
  }, "Perceived (ent, env) pairs under the glider observer; None is ZERO.");

  m.def("extract_entities", [](const py::list& pairs) {
    PerceivedTrace pt;
    for (auto h : pairs) {
      auto t = h.cast<py::tuple>();
      pt.pairs.push_back({label_from_py(t[0]), label_from_py(t[1])});
    }
    py::list out;
    for (const auto& ep : extract_entities(pt)) out.append(episode_to_py(ep));
    return out;
  });

  m.def("is_contradictory", [](std::size_t start, const py::list& ent, const py::list& env,
                               const py::object& successor) {
    return witness_to_py(is_contradictory(episode_from_py(start, ent, env, successor)));
  }, py::arg("start"), py::arg("ent"), py::arg("env"), py::arg("successor") = py::none());

  m.def("is_deterministic_env", [](std::size_t start, const py::list& ent, const py::list& env,
                                   const py::object& successor) {
    return witness_to_py(is_deterministic_env(episode_from_py(start, ent, env, successor)));
  }, py::arg("start"), py::arg("ent"), py::arg("env"), py::arg("successor") = py::none());

  m.def("dual_view", [](std::size_t start, const py::list& ent, const py::list& env,
                        const py::object& successor) {
    return episode_to_py(dual_view(episode_from_py(start, ent, env, successor)));
  }, py::arg("start"), py::arg("ent"), py::arg("env"), py::arg("successor") = py::none());

  m.def("check_proposition", [](std::size_t start, const py::list& ent, const py::list& env,
                                const py::object& successor, const py::list& ent_space,
                                const py::list& env_space) {
    std::vector<Label> es{Label::zero()}, vs;
    for (auto h : ent_space) es.push_back(label_from_py(h));
    for (auto h : env_space) vs.push_back(label_from_py(h));
    const auto v = check_proposition(episode_from_py(start, ent, env, successor),
                                     PerceptionSpace(std::move(es), std::move(vs)));
    return py::module_::import("json").attr("loads")(to_json(v).dump());
  }, py::arg("start"), py::arg("ent"), py::arg("env"), py::arg("successor"),
     py::arg("ent_space"), py::arg("env_space"));

  m.def("exhaustive_proposition_violations", [](std::size_t ent_nonzero, std::size_t env_count,
                                                std::size_t max_length) {
    const auto s = exhaustive_proposition_sweep(ent_nonzero, env_count, max_length);
    return py::make_tuple(s.traces, s.premise_hits, s.violations);
  });

  m.def("victories_dp", [](const std::string& strategy) {
    const auto c = updown::victories_dp(updown::Strategy::parse(strategy));
    return py::make_tuple(to_py(c.wins), to_py(c.total));
  });
  m.def("victories_bruteforce", [](const std::string& strategy) {
    const auto c = updown::victories_bruteforce(updown::Strategy::parse(strategy));
    return py::make_tuple(to_py(c.wins), to_py(c.total));
  });
  m.def("max_victories", [](std::size_t n) {
    const auto r = updown::max_victories(n);
    return py::make_tuple(r.strategy.str(), to_py(r.count.wins), to_py(r.count.total));
  });

  m.def("flip_probability_for_even_odds", &coop::flip_probability_for_even_odds);
  m.def("run_coop_experiment", [](std::size_t m_, std::size_t n, double p, std::size_t reps,
                                  std::uint64_t seed) {
    coop::CoopConfig cfg;
    cfg.env_size = m_;
    cfg.population = n;
    cfg.flip_probability = p;
    cfg.repetitions = reps;
    cfg.seed = seed;
    const auto r = coop::run_coop_experiment(cfg);
    py::dict d;
    d["contradictory_winners"] = r.contradictory_winners;
    d["contradictory_winner_percent"] = r.contradictory_winner_percent();
    d["non_contradictory_fraction"] = r.non_contradictory_fraction();
    py::list payoffs;
    for (const auto& rep : r.repetitions) payoffs.append(rep.winner_record.total_payoff);
    d["winner_payoffs"] = payoffs;
    return d;
  }, py::arg("m") = 20, py::arg("n") = 1000, py::arg("p"), py::arg("reps") = 100,
     py::arg("seed") = kDefaultSeed);

  m.def("run_market_experiment", [](std::size_t tests, std::size_t group_size, std::size_t days,
                                    std::uint64_t seed) {
    market::MarketConfig cfg;
    cfg.tests = tests;
    cfg.group_size = group_size;
    cfg.days = days;
    cfg.seed = seed;
    const auto r = market::run_market_experiment(cfg);
    py::dict d;
    d["count_a_gt_b"] = r.count_a_gt_b;
    d["count_b_gt_a"] = r.count_b_gt_a;
    d["count_tie"] = r.count_tie;
    d["feasibility_violations"] = r.feasibility_violations;
    d["conservation_violations"] = r.conservation_violations;
    return d;
  }, py::arg("tests") = 50, py::arg("group_size") = 100, py::arg("days") = market::kDaysPerWeek,
     py::arg("seed") = kDefaultSeed);

  m.attr("DEFAULT_SEED") = kDefaultSeed;
}
