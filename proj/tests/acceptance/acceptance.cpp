// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "contra/ca.hpp"
#include "contra/coop.hpp"
#include "contra/market.hpp"
#include "contra/observer.hpp"
#include "contra/theorem.hpp"
#include "contra/updown.hpp"

using namespace contra;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void criterion(const std::string& name, double time_limit_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (time_limit_s > 0 && secs >= time_limit_s) {
    o.pass = false;
    o.detail += " (over the " + std::to_string(static_cast<int>(time_limit_s)) + " s budget)";
  }
  if (!o.pass) ++failures;
  std::printf("%s  %-28s %7.2fs  %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), secs, o.detail.c_str());
  std::fflush(stdout);
}

Outcome exact_combinatorics() {
  using updown::BigInt;
  const std::array<std::pair<BigInt, BigInt>, 3> expected{
      std::pair<BigInt, BigInt>{50521, 3628800}, {353792, 39916800}, {2702765, 479001600}};
  std::ostringstream os;
  bool ok = true;
  for (std::size_t i = 0; i < 3; ++i) {
    const std::size_t n = 10 + i;
    const auto r = updown::max_victories(n);
    const bool hit = r.count.wins == expected[i].first && r.count.total == expected[i].second;
    ok = ok && hit;
    os << (i ? "; " : "") << "n=" << n << " " << r.strategy.str() << " " << r.count.wins << "/" << r.count.total;
  }
  return {ok, os.str()};
}

Outcome oracle_equivalence() {
  std::uint64_t compared = 0;
  for (std::size_t n = 2; n <= 8; ++n) {
    for (std::uint64_t code = 0; code < (1ull << (n - 1)); ++code) {
      const auto s = updown::Strategy::from_bits(code, n - 1);
      if (!(updown::victories_dp(s) == updown::victories_bruteforce(s))) {
        return {false, "mismatch at " + s.str()};
      }
      ++compared;
    }
  }
  for (std::size_t n = 2; n <= 12; ++n) {
    updown::BigInt sum = 0;
    for (const auto& r : updown::victory_table(n)) sum += r.count.wins;
    if (sum != updown::factorial(n)) return {false, "partition fails at n=" + std::to_string(n)};
  }
  return {true, std::to_string(compared) + " strategies agree (n<=8); partition exact for n<=12"};
}

Outcome theorem_check() {
  const auto ex = exhaustive_proposition_sweep(1, 2, 10);
  const auto rnd = randomized_proposition_sweep(10000, 5, 200, kDefaultSeed);
  std::ostringstream os;
  os << "exhaustive " << ex.traces << " traces, " << ex.premise_hits << " premise hits, "
     << ex.violations << " violations; randomized " << rnd.traces << " episodes, "
     << rnd.premise_hits << " premise hits, " << rnd.violations << " violations";
  const bool ok = ex.violations == 0 && rnd.violations == 0 && ex.traces == 1398100 && rnd.traces >= 10000 &&
                  ex.premise_hits > 0 && rnd.premise_hits > 0;
  return {ok, os.str()};
}

Outcome duality() {
  const auto d = randomized_duality_sweep(10000, 5, 200, kDefaultSeed);
  std::ostringstream os;
  os << d.episodes << " episodes (" << d.deterministic << " deterministic), " << d.mismatches << " mismatches";
  return {d.episodes >= 10000 && d.mismatches == 0, os.str()};
}

Outcome glider_scenario() {
  const auto pt = perceive_trace(glider_observer(), run(glider_block_scene(), 19));
  const auto eps = extract_entities(pt);
  bool zero_tail = pt.pairs.size() == 20;
  for (std::size_t t = 15; t < pt.pairs.size(); ++t) zero_tail = zero_tail && pt.pairs[t].ent.is_zero();
  std::ostringstream os;
  os << eps.size() << " entity";
  if (!eps.empty()) {
    os << ", lifetime " << eps[0].start << ".." << eps[0].start + eps[0].last() << ", intelligence "
       << intelligence(eps[0]);
  }
  os << ", ZERO for t=15..19: " << (zero_tail ? "yes" : "no");
  const bool ok = eps.size() == 1 && eps[0].start == 0 && eps[0].ent.size() == 15 && intelligence(eps[0]) == 14 &&
                  zero_tail;
  return {ok, os.str()};
}

Outcome coop_reproduction() {
  constexpr int kSeeds = 5;
  bool ok = true;
  double min_pct = 100.0;
  double worst_payoff_z = 0.0;
  double worst_fraction_z = 0.0;
  for (int i = 0; i < kSeeds; ++i) {
    coop::CoopConfig cfg;
    cfg.env_size = 20;
    cfg.population = 1000;
    cfg.repetitions = 100;
    cfg.flip_probability = coop::flip_probability_for_even_odds(20);
    cfg.seed = kDefaultSeed + static_cast<std::uint64_t>(i);
    const auto r = coop::run_coop_experiment(cfg);
    min_pct = std::min(min_pct, r.contradictory_winner_percent());
    ok = ok && r.contradictory_winner_percent() >= 99.0;
    for (auto s : {coop::Stance::kCoop, coop::Stance::kNonCoop}) {
      const auto e = r.meeting_payoff(s);
      const double z = std::abs(e.mean - 0.5) / e.std_error;
      worst_payoff_z = std::max(worst_payoff_z, z);
      ok = ok && z <= 3.0;
    }
    const double total = static_cast<double>(cfg.population * cfg.repetitions);
    const double z = std::abs(r.non_contradictory_fraction() - 0.5) / std::sqrt(0.25 / total);
    worst_fraction_z = std::max(worst_fraction_z, z);
    ok = ok && z <= 3.0;
  }
  std::ostringstream os;
  os.precision(3);
  os << kSeeds << " seeds: min contradictory winners " << min_pct << "%, worst payoff |z| " << worst_payoff_z
     << ", worst non-contradictory fraction |z| " << worst_fraction_z;
  return {ok, os.str()};
}

Outcome market_reproduction() {
  constexpr int kSeeds = 20;
  std::size_t a = 0, b = 0, tests = 0;
  std::uint64_t feas = 0, cons = 0;
  for (int i = 0; i < kSeeds; ++i) {
    market::MarketConfig cfg;
    cfg.tests = 50;
    cfg.seed = kDefaultSeed + static_cast<std::uint64_t>(i);
    const auto r = market::run_market_experiment(cfg);
    a += r.count_a_gt_b;
    b += r.count_b_gt_a;
    tests += r.tests.size();
    feas += r.feasibility_violations;
    cons += r.conservation_violations;
  }
  const double fa = static_cast<double>(a) / static_cast<double>(tests);
  const double fb = static_cast<double>(b) / static_cast<double>(tests);
  std::ostringstream os;
  os.precision(3);
  os << kSeeds << " seeds x 50 tests: A>B " << fa << ", B>A " << fb << ", feasibility violations " << feas
     << ", conservation violations " << cons;
  return {fa <= 0.05 && fb >= 0.30 && fb <= 0.85 && feas == 0 && cons == 0, os.str()};
}

#ifdef CONTRA_CLI_PATH
std::string capture(const std::string& cmd) {
  std::string out;
  FILE* p = popen((cmd + " 2>&1").c_str(), "r");
  if (!p) throw std::runtime_error("cannot run " + cmd);
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  const int status = pclose(p);
  out += "\nstatus=" + std::to_string(status);
  return out;
}

Outcome cli_reproducibility() {
  const auto dir = std::filesystem::temp_directory_path() / "contra_acceptance";
  std::filesystem::create_directories(dir);
  const auto pattern = (dir / "glider.txt").string();
  std::ofstream(pattern) << ".O.\n..O\nOOO\n";
  const std::string cli = CONTRA_CLI_PATH;
  const std::vector<std::string> args{
      "life " + pattern + " --steps 8",
      "life " + pattern + " --steps 8 --format csv",
      "observe",
      "observe --scene lone-glider --format csv",
      "observe --scene block",
      "updown --n 10",
      "updown --n 6 --format csv",
      "updown --n 5 --demo --format csv",
      "updown --n 8 --strategy UDUDUDU",
      "coop",
      "coop --seed 7 --format csv",
      "coop --p 0.1 --reps 20 --n 200",
      "market",
      "market --seed 7 --format csv",
      "theorem --trials 3000 --max-length 8",
      "theorem --trials 3000 --max-length 8 --seed 7 --format csv",
  };
  std::size_t same = 0;
  std::string first_diff;
  for (const auto& a : args) {
    const auto x = capture(cli + " " + a);
    const auto y = capture(cli + " " + a);
    if (x == y && x.find("status=0") != std::string::npos) {
      ++same;
    } else if (first_diff.empty()) {
      first_diff = a;
    }
  }
  std::filesystem::remove_all(dir);
  std::string detail = std::to_string(same) + "/" + std::to_string(args.size()) + " invocations byte-identical";
  if (!first_diff.empty()) detail += "; first difference or failure: " + first_diff;
  return {same == args.size(), detail};
}
#endif

}  // namespace

int main() {
  criterion("exact-combinatorics", 5, exact_combinatorics);
  criterion("oracle-equivalence", 30, oracle_equivalence);
  criterion("theorem-check", 60, theorem_check);
  criterion("duality", 0, duality);
  criterion("glider-scenario", 0, glider_scenario);
  criterion("coop-reproduction", 30, coop_reproduction);
  criterion("market-reproduction", 60, market_reproduction);
#ifdef CONTRA_CLI_PATH
  criterion("cli-reproducibility", 0, cli_reproducibility);
#else
  criterion("cli-reproducibility", 0, [] { return Outcome{false, "built without the CLI"}; });
#endif
  std::printf("%s: %d failing criteria\n", failures ? "FAILED" : "OK", failures);
  return failures ? 1 : 0;
}
