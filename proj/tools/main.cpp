// contra: command-line front end for the cellular automaton, observer and
// experiment modules. Every subcommand is deterministic given its flags.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "contra/ca.hpp"
#include "contra/coop.hpp"
#include "contra/market.hpp"
#include "contra/observer.hpp"
#include "contra/perceived_io.hpp"
#include "contra/theorem.hpp"
#include "contra/updown.hpp"

namespace {

using nlohmann::json;
using namespace contra;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { kCsv, kReport };

json big(const updown::BigInt& v) {
  if (v <= std::numeric_limits<std::uint64_t>::max()) return v.convert_to<std::uint64_t>();
  return v.str();
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

// --- life ---------------------------------------------------------------

struct LifeArgs {
  std::string pattern_file;
  std::size_t steps = 10;
  std::vector<std::int64_t> viewport;
};

int cmd_life(const LifeArgs& a, Format fmt) {
  std::ifstream in(a.pattern_file, std::ios::binary);
  if (!in) throw UsageError("cannot read pattern file '" + a.pattern_file + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  CAState initial;
  try {
    initial = parse_pattern(buf.str());
  } catch (const PatternParseError& e) {
    throw UsageError(a.pattern_file + ": " + e.what());
  }
  const auto trace = run(initial, a.steps);

  Viewport view;
  if (!a.viewport.empty()) {
    if (a.viewport.size() != 4) throw UsageError("--viewport takes x0,y0,x1,y1");
    view = {a.viewport[0], a.viewport[1], a.viewport[2], a.viewport[3]};
  } else {
    CAState all;
    for (const auto& s : trace.states) all = all.merged(s);
    view = Viewport::bounding(all);
  }

  if (fmt == Format::kCsv) {
    std::cout << "t,x,y\n";
    for (std::size_t t = 0; t < trace.states.size(); ++t) {
      for (const auto& c : trace.states[t].live()) std::cout << t << ',' << c.x << ',' << c.y << '\n';
    }
    return kExitOk;
  }
  for (std::size_t t = 0; t < trace.states.size(); ++t) {
    std::cout << "t=" << t << " population=" << trace.states[t].population() << '\n'
              << write_pattern(trace.states[t], view) << '\n';
  }
  return kExitOk;
}

// --- observe ------------------------------------------------------------

struct ObserveArgs {
  std::string scene = "glider-block";
  std::optional<std::size_t> steps;
  std::string perceived_out;
};

int cmd_observe(const ObserveArgs& a, Format fmt) {
  CAState initial;
  std::size_t steps = 19;
  if (a.scene == "glider-block") {
    initial = glider_block_scene();
  } else if (a.scene == "lone-glider") {
    initial = glider();
    steps = 40;
  } else if (a.scene == "block") {
    initial = block();
  } else {
    throw UsageError("unknown scene '" + a.scene + "' (glider-block, lone-glider, block)");
  }
  if (a.steps) steps = *a.steps;

  const auto pt = perceive_trace(glider_observer(), run(initial, steps));
  if (!a.perceived_out.empty()) {
    std::ofstream out(a.perceived_out, std::ios::binary);
    if (!out) throw UsageError("cannot write '" + a.perceived_out + "'");
    out << write_perceived_trace(pt);
  }
  const auto space = observed_space(pt);
  const auto episodes = extract_entities(pt);

  if (fmt == Format::kCsv) {
    std::cout << "start,end,intelligence,terminated,contradictory,deterministic_env,"
                 "threshold,premises_hold,violation\n";
    for (const auto& ep : episodes) {
      const auto v = check_proposition(ep, space);
      std::cout << ep.start << ',' << ep.start + ep.last() << ',' << v.intelligence << ','
                << v.terminated << ',' << v.contradictory << ',' << v.deterministic_env << ','
                << v.threshold << ',' << v.premises_hold() << ',' << v.violation() << '\n';
    }
    return kExitOk;
  }
  json report{{"scene", a.scene}, {"steps", steps}, {"entities", episodes.size()}};
  auto arr = json::array();
  for (const auto& ep : episodes) {
    auto v = check_proposition(ep, space);
    arr.push_back({{"lifetime", {ep.start, ep.start + ep.last()}},
                   {"intelligence", v.intelligence},
                   {"terminated", v.terminated},
                   {"verdict", to_json(v)},
                   {"claim",
                    v.premises_hold() ? "premises hold; contradiction required"
                                      : "premises not all met; no claim"}});
  }
  report["episodes"] = arr;
  emit(report);
  return kExitOk;
}

// --- updown -------------------------------------------------------------

struct UpdownArgs {
  std::size_t n = 10;
  std::string strategy;
  bool demo = false;
};

int cmd_updown(const UpdownArgs& a, Format fmt) {
  if (a.n < 2 || a.n > updown::kScanMaxN) {
    throw UsageError("--n must lie in [2, " + std::to_string(updown::kScanMaxN) + "]");
  }
  if (a.demo) {
    if (a.n > updown::kDemoMaxN) {
      throw UsageError("--demo needs n <= " + std::to_string(updown::kDemoMaxN));
    }
    const auto d = updown::contradictory_bonus_demo(a.n);
    if (fmt == Format::kCsv) {
      std::cout << "round,deck,strategy,won\n";
      for (std::size_t i = 0; i < d.rounds.size(); ++i) {
        std::cout << i + 1 << ',';
        for (int c : d.rounds[i].deck) std::cout << c;
        std::cout << ',' << d.rounds[i].strategy.str() << ',' << d.rounds[i].won << '\n';
      }
      return kExitOk;
    }
    auto rounds = json::array();
    for (const auto& r : d.rounds) {
      rounds.push_back({{"deck", r.deck}, {"strategy", r.strategy.str()}, {"won", r.won}});
    }
    emit({{"n", d.n},
          {"m", big(d.m)},
          {"rounds", rounds},
          {"switches", d.switches},
          {"fixed_strategy_can_win_all", d.fixed_strategy_can_win_all}});
    return kExitOk;
  }

  std::vector<updown::MaxResult> rows;
  if (!a.strategy.empty()) {
    std::optional<updown::Strategy> s;
    try {
      s = updown::Strategy::parse(a.strategy);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    if (s->deck_size() != a.n) {
      throw UsageError("strategy '" + a.strategy + "' has " + std::to_string(s->words().size()) +
                       " words; n = " + std::to_string(a.n) + " needs " +
                       std::to_string(a.n - 1));
    }
    rows.push_back({*s, updown::victories_dp(*s)});
  } else {
    rows = updown::victory_table(a.n);
  }
  std::optional<updown::MaxResult> best;
  if (a.strategy.empty()) best = updown::max_victories(a.n);

  if (fmt == Format::kCsv) {
    std::cout << "strategy,wins,total\n";
    for (const auto& r : rows) std::cout << r.strategy.str() << ',' << r.count.wins << ',' << r.count.total << '\n';
    if (best) {
      std::cout << "# max," << best->strategy.str() << ',' << best->count.wins << ','
                << best->count.total << '\n';
    }
    return kExitOk;
  }
  auto table = json::array();
  for (const auto& r : rows) {
    table.push_back({{"strategy", r.strategy.str()}, {"wins", big(r.count.wins)}, {"total", big(r.count.total)}});
  }
  json report{{"n", a.n}, {"table", table}};
  if (best) {
    report["max"] = {{"strategy", best->strategy.str()},
                     {"wins", big(best->count.wins)},
                     {"total", big(best->count.total)}};
  }
  emit(report);
  return kExitOk;
}

// --- coop ---------------------------------------------------------------

struct CoopArgs {
  coop::CoopConfig cfg;
  std::optional<double> p;
  bool even_odds = false;
};

const char* stance_name(coop::Stance s) { return s == coop::Stance::kCoop ? "C" : "N"; }

int cmd_coop(CoopArgs a, Format fmt, std::uint64_t seed) {
  if (a.p && a.even_odds) throw UsageError("--p and --even-odds are mutually exclusive");
  if (a.cfg.env_size == 0 || a.cfg.population == 0 || a.cfg.repetitions == 0) {
    throw UsageError("--m, --n and --reps must be at least 1");
  }
  a.cfg.seed = seed;
  a.cfg.flip_probability =
      a.p ? *a.p : coop::flip_probability_for_even_odds(a.cfg.env_size);
  if (!(a.cfg.flip_probability >= 0.0 && a.cfg.flip_probability <= 1.0)) {
    throw UsageError("--p must lie in [0, 1]");
  }
  const auto r = coop::run_coop_experiment(a.cfg);
  const auto mc = r.meeting_payoff(coop::Stance::kCoop);
  const auto mn = r.meeting_payoff(coop::Stance::kNonCoop);

  if (fmt == Format::kCsv) {
    std::cout << "rep,winner,payoff,contradictory,history,non_contradictory\n";
    for (std::size_t i = 0; i < r.repetitions.size(); ++i) {
      const auto& rep = r.repetitions[i];
      std::cout << i << ',' << rep.winner << ',' << rep.winner_record.total_payoff << ','
                << rep.winner_record.contradictory << ',';
      for (auto s : rep.winner_record.stance_history) std::cout << stance_name(s);
      std::cout << ',' << rep.non_contradictory << '\n';
    }
    std::cout << "# contradictory_winner_percent," << r.contradictory_winner_percent() << '\n';
    return kExitOk;
  }
  auto reps = json::array();
  for (const auto& rep : r.repetitions) {
    std::string hist;
    for (auto s : rep.winner_record.stance_history) hist += stance_name(s);
    reps.push_back({{"winner", rep.winner},
                    {"payoff", rep.winner_record.total_payoff},
                    {"contradictory", rep.winner_record.contradictory},
                    {"initial_stance", stance_name(rep.winner_record.initial_stance)},
                    {"history", hist},
                    {"non_contradictory", rep.non_contradictory}});
  }
  emit({{"config",
         {{"m", a.cfg.env_size},
          {"n", a.cfg.population},
          {"p", a.cfg.flip_probability},
          {"reps", a.cfg.repetitions},
          {"seed", seed}}},
        {"repetitions", reps},
        {"contradictory_winners", r.contradictory_winners},
        {"contradictory_winner_percent", r.contradictory_winner_percent()},
        {"non_contradictory_fraction", r.non_contradictory_fraction()},
        {"meeting_payoff",
         {{"coop", {{"mean", mc.mean}, {"std_error", mc.std_error}}},
          {"noncoop", {{"mean", mn.mean}, {"std_error", mn.std_error}}}}}});
  return kExitOk;
}

// --- market -------------------------------------------------------------

int cmd_market(market::MarketConfig cfg, Format fmt, std::uint64_t seed) {
  if (cfg.tests == 0 || cfg.group_size == 0 || cfg.days == 0 || cfg.max_order < 0) {
    throw UsageError("--tests, --group-size and --days must be at least 1, --max-order >= 0");
  }
  cfg.seed = seed;
  const auto r = market::run_market_experiment(cfg);
  if (fmt == Format::kCsv) {
    std::cout << "test,initial_price,transition,c_a,c_b,comparison\n";
    for (std::size_t i = 0; i < r.tests.size(); ++i) {
      const auto& t = r.tests[i];
      std::cout << i << ',' << t.dynamics.initial_price << ',' << t.dynamics.encoded() << ','
                << t.best_a << ',' << t.best_b << ',' << market::to_string(t.outcome) << '\n';
    }
    std::cout << "# a_gt_b," << r.count_a_gt_b << "\n# b_gt_a," << r.count_b_gt_a << "\n# tie,"
              << r.count_tie << '\n';
    return kExitOk;
  }
  auto tests = json::array();
  for (const auto& t : r.tests) {
    tests.push_back({{"initial_price", t.dynamics.initial_price},
                     {"transition", t.dynamics.encoded()},
                     {"c_a", t.best_a},
                     {"c_b", t.best_b},
                     {"comparison", market::to_string(t.outcome)}});
  }
  emit({{"config",
         {{"tests", cfg.tests},
          {"group_size", cfg.group_size},
          {"days", cfg.days},
          {"max_order", cfg.max_order},
          {"seed", seed}}},
        {"tests", tests},
        {"count_a_gt_b", r.count_a_gt_b},
        {"count_b_gt_a", r.count_b_gt_a},
        {"count_tie", r.count_tie},
        {"group_a_divergence_rate", r.divergence_rate()},
        {"feasibility_violations", r.feasibility_violations},
        {"conservation_violations", r.conservation_violations}});
  return kExitOk;
}

// --- theorem ------------------------------------------------------------

struct TheoremArgs {
  std::uint64_t trials = 10000;
  std::size_t max_length = 10;
  std::size_t random_max_length = 200;
  std::size_t max_labels = 5;
};

json sweep_json(const SweepSummary& s) {
  return {{"traces", s.traces},
          {"episodes", s.episodes},
          {"terminated", s.terminated},
          {"premise_hits", s.premise_hits},
          {"violations", s.violations}};
}

int cmd_theorem(const TheoremArgs& a, Format fmt, std::uint64_t seed) {
  if (a.max_labels < 2) throw UsageError("--max-labels must be at least 2");
  const auto exhaustive = exhaustive_proposition_sweep(1, 2, a.max_length);
  const auto randomized =
      randomized_proposition_sweep(a.trials, a.max_labels, a.random_max_length, seed);
  const auto duality = randomized_duality_sweep(a.trials, a.max_labels, a.random_max_length, seed);
  const auto violations = exhaustive.violations + randomized.violations + duality.mismatches;

  if (fmt == Format::kCsv) {
    std::cout << "check,cases,episodes,premise_hits,violations\n"
              << "exhaustive," << exhaustive.traces << ',' << exhaustive.episodes << ','
              << exhaustive.premise_hits << ',' << exhaustive.violations << '\n'
              << "randomized," << randomized.traces << ',' << randomized.episodes << ','
              << randomized.premise_hits << ',' << randomized.violations << '\n'
              << "duality," << duality.episodes << ',' << duality.episodes << ",,"
              << duality.mismatches << '\n';
  } else {
    auto ex = sweep_json(exhaustive);
    ex["ent_labels"] = 2;
    ex["env_labels"] = 2;
    ex["max_length"] = a.max_length;
    emit({{"exhaustive", ex},
          {"randomized", sweep_json(randomized)},
          {"duality", {{"episodes", duality.episodes},
                       {"deterministic", duality.deterministic},
                       {"mismatches", duality.mismatches}}},
          {"seed", seed},
          {"violations", violations}});
  }
  std::cerr << "violations: " << violations << '\n';
  return violations == 0 ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Observer-relative entities, intelligence and contradiction in cellular automata"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  std::uint64_t seed = kDefaultSeed;
  std::string format = "report";
  app.add_option("--seed", seed, "RNG seed (default " + std::to_string(kDefaultSeed) + ")")
      ->capture_default_str();
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"csv", "report"}))
      ->capture_default_str();

  LifeArgs life;
  auto* life_cmd = app.add_subcommand("life", "Run Life on a '.'/'O' pattern file");
  life_cmd->add_option("pattern", life.pattern_file, "Pattern file")->required();
  life_cmd->add_option("--steps", life.steps, "Generations")->capture_default_str();
  life_cmd->add_option("--viewport", life.viewport, "x0,y0,x1,y1")->delimiter(',');

  ObserveArgs observe;
  auto* observe_cmd = app.add_subcommand("observe", "Observe a built-in scene with the glider observer");
  observe_cmd->add_option("--scene", observe.scene, "glider-block | lone-glider | block")
      ->capture_default_str();
  observe_cmd->add_option("--steps", observe.steps, "Trace length (default 19, lone-glider 40)");
  observe_cmd->add_option("--perceived-out", observe.perceived_out,
                          "Write the perceived trace ('t ent env' lines)");

  UpdownArgs ud;
  auto* updown_cmd = app.add_subcommand("updown", "Exact victory counts for Up and Down");
  updown_cmd->add_option("--n", ud.n, "Deck size")->capture_default_str();
  updown_cmd->add_option("--strategy", ud.strategy, "Word over U/D of length n-1");
  updown_cmd->add_flag("--demo", ud.demo, "Show a contradictory player winning m+1 decks");

  CoopArgs co;
  auto* coop_cmd = app.add_subcommand("coop", "Co-operation meeting game");
  coop_cmd->add_option("--m", co.cfg.env_size, "Environment size")->capture_default_str();
  coop_cmd->add_option("--n", co.cfg.population, "Population")->capture_default_str();
  coop_cmd->add_option("--p", co.p, "Flip probability");
  coop_cmd->add_flag("--even-odds", co.even_odds, "p = 1 - 2^(-1/m) (the default)");
  coop_cmd->add_option("--reps", co.cfg.repetitions, "Repetitions")->capture_default_str();

  market::MarketConfig mk;
  auto* market_cmd = app.add_subcommand("market", "Stockholders under deterministic prices");
  market_cmd->add_option("--tests", mk.tests, "Tests")->capture_default_str();
  market_cmd->add_option("--group-size", mk.group_size, "Traders per group")->capture_default_str();
  market_cmd->add_option("--days", mk.days, "Trading days")->capture_default_str();
  market_cmd->add_option("--max-order", mk.max_order, "Largest random order")->capture_default_str();

  TheoremArgs th;
  auto* theorem_cmd = app.add_subcommand("theorem", "Check the contradiction proposition");
  theorem_cmd->add_option("--trials", th.trials, "Randomized episodes")->capture_default_str();
  theorem_cmd->add_option("--max-length", th.max_length, "Exhaustive trace length")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const Format fmt = format == "csv" ? Format::kCsv : Format::kReport;
  try {
    if (*life_cmd) return cmd_life(life, fmt);
    if (*observe_cmd) return cmd_observe(observe, fmt);
    if (*updown_cmd) return cmd_updown(ud, fmt);
    if (*coop_cmd) return cmd_coop(co, fmt, seed);
    if (*market_cmd) return cmd_market(mk, fmt, seed);
    if (*theorem_cmd) return cmd_theorem(th, fmt, seed);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
