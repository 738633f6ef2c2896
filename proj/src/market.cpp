#include "contra/market.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace contra::market {

namespace {

constexpr std::uint64_t kMarketTag = 0x6d61726b6574ULL;

bool feasible(const Portfolio& p) { return p.cash >= 0 && p.shares >= 0; }

}  // namespace

std::size_t price_index(int price) {
  for (std::size_t i = 0; i < kPrices.size(); ++i) {
    if (kPrices[i] == price) return i;
  }
  throw std::invalid_argument("price " + std::to_string(price) + " is not one of 900/1000/1100");
}

std::vector<int> PriceDynamics::path(std::size_t days) const {
  std::vector<int> out;
  out.reserve(days);
  int p = initial_price;
  for (std::size_t d = 0; d < days; ++d) {
    out.push_back(p);
    p = next[price_index(p)];
  }
  return out;
}

std::string PriceDynamics::encoded() const {
  std::string s;
  for (int p : next) s.push_back(static_cast<char>('0' + price_index(p)));
  return s;
}

PriceDynamics sample_dynamics(Rng& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, kPrices.size() - 1);
  PriceDynamics d;
  for (auto& n : d.next) n = kPrices[pick(rng)];
  d.initial_price = kPrices[pick(rng)];
  return d;
}

std::int64_t clamp_trade(std::int64_t intended, const Portfolio& p, int price) {
  return std::clamp(intended, -p.shares, p.max_buy(price));
}

TraderPolicy TraderPolicy::consistent(PriceChoices preset, std::int64_t max_order) {
  if (max_order < 0) throw std::invalid_argument("max order must be non-negative");
  TraderPolicy t;
  t.kind_ = Kind::kConsistent;
  t.preset_ = preset;
  t.max_order_ = max_order;
  return t;
}

TraderPolicy TraderPolicy::free(std::int64_t max_order) {
  if (max_order < 0) throw std::invalid_argument("max order must be non-negative");
  TraderPolicy t;
  t.kind_ = Kind::kFree;
  t.max_order_ = max_order;
  return t;
}

TraderPolicy TraderPolicy::scripted(std::vector<std::int64_t> intended) {
  TraderPolicy t;
  t.kind_ = Kind::kScripted;
  t.script_ = std::move(intended);
  return t;
}

WeekResult simulate_week(const PriceDynamics& dyn, const TraderPolicy& policy, Rng& rng,
                         std::size_t days) {
  if (days == 0) throw std::invalid_argument("a week needs at least one trading day");
  std::uniform_int_distribution<std::int64_t> order(-policy.max_order(), policy.max_order());
  PriceChoices memory = policy.preset();
  WeekResult w;
  Portfolio p;
  const auto prices = dyn.path(days);
  for (std::size_t d = 0; d < days; ++d) {
    DayRecord r;
    r.price = prices[d];
    switch (policy.kind()) {
      case TraderPolicy::Kind::kConsistent: {
        auto& choice = memory[price_index(r.price)];
        if (!choice) choice = clamp_trade(order(rng), p, r.price);
        r.intended = *choice;
        break;
      }
      case TraderPolicy::Kind::kFree:
        r.intended = order(rng);
        break;
      case TraderPolicy::Kind::kScripted:
        r.intended = d < policy.script().size() ? policy.script()[d] : 0;
        break;
    }
    r.executed = clamp_trade(r.intended, p, r.price);
    p.cash -= r.executed * r.price;
    p.shares += r.executed;
    r.after = p;
    w.days.push_back(r);
  }
  w.final_capital = p.value(prices.back());
  return w;
}

MarketTest run_market_test(const PriceDynamics& dyn, const TraderPolicy& group_a,
                           const TraderPolicy& group_b, std::size_t group_size, std::size_t days,
                           Rng& rng) {
  if (group_size == 0) throw std::invalid_argument("group size must be at least 1");
  MarketTest test;
  test.dynamics = dyn;
  const auto path = dyn.path(days);
  const bool constant = std::all_of(path.begin(), path.end(), [&](int p) { return p == path[0]; });

  auto audit = [&](const WeekResult& w) {
    for (const auto& d : w.days) {
      if (!feasible(d.after)) ++test.feasibility_violations;
    }
    if (constant && w.final_capital != kInitialCash + kInitialShares * path[0]) {
      ++test.conservation_violations;
    }
  };

  for (std::size_t i = 0; i < group_size; ++i) {
    const auto w = simulate_week(dyn, group_a, rng, days);
    audit(w);
    std::array<bool, 3> seen{};
    for (const auto& d : w.days) {
      const auto k = price_index(d.price);
      if (seen[k]) {
        ++test.a_repeat_days;
        if (d.executed != d.intended) ++test.a_execution_divergences;
      }
      seen[k] = true;
    }
    test.best_a = i == 0 ? w.final_capital : std::max(test.best_a, w.final_capital);
  }
  for (std::size_t i = 0; i < group_size; ++i) {
    const auto w = simulate_week(dyn, group_b, rng, days);
    audit(w);
    test.best_b = i == 0 ? w.final_capital : std::max(test.best_b, w.final_capital);
  }

  if (test.best_a > test.best_b) {
    test.outcome = Outcome::kAWins;
  } else if (test.best_b > test.best_a) {
    test.outcome = Outcome::kBWins;
  } else {
    test.outcome = Outcome::kTie;
  }
  return test;
}

MarketReport run_market_experiment(const MarketConfig& cfg) {
  if (cfg.tests == 0 || cfg.group_size == 0 || cfg.days == 0 || cfg.max_order < 0) {
    throw std::invalid_argument("tests, group size and days must be at least 1");
  }
  const auto group_a = TraderPolicy::consistent({}, cfg.max_order);
  const auto group_b = TraderPolicy::free(cfg.max_order);
  MarketReport report;
  report.config = cfg;
  for (std::size_t t = 0; t < cfg.tests; ++t) {
    auto rng = derive_stream(cfg.seed, t, kMarketTag);
    const auto dyn = sample_dynamics(rng);
    auto test = run_market_test(dyn, group_a, group_b, cfg.group_size, cfg.days, rng);
    report.add(std::move(test));
  }
  return report;
}

void MarketReport::add(MarketTest test) {
  switch (test.outcome) {
    case Outcome::kAWins:
      ++count_a_gt_b;
      break;
    case Outcome::kBWins:
      ++count_b_gt_a;
      break;
    case Outcome::kTie:
      ++count_tie;
      break;
  }
  feasibility_violations += test.feasibility_violations;
  conservation_violations += test.conservation_violations;
  tests.push_back(std::move(test));
}

double MarketReport::divergence_rate() const {
  std::uint64_t div = 0;
  std::uint64_t rep = 0;
  for (const auto& t : tests) {
    div += t.a_execution_divergences;
    rep += t.a_repeat_days;
  }
  return rep == 0 ? 0.0 : static_cast<double>(div) / static_cast<double>(rep);
}

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::kAWins:
      return "A>B";
    case Outcome::kBWins:
      return "B>A";
    case Outcome::kTie:
      return "tie";
  }
  return "?";
}

}  // namespace contra::market
