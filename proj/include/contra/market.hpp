#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "contra/rng.hpp"

namespace contra::market {

inline constexpr std::array<int, 3> kPrices{900, 1000, 1100};
inline constexpr std::size_t kDaysPerWeek = 7;
inline constexpr std::int64_t kInitialCash = 10000;
inline constexpr std::int64_t kInitialShares = 10;

/// Index of `price` in kPrices; throws std::invalid_argument otherwise.
std::size_t price_index(int price);

/// Tomorrow's price as a function of today's.
struct PriceDynamics {
  std::array<int, 3> next{900, 1000, 1100};  // next[price_index(p)]
  int initial_price = 1000;

  std::vector<int> path(std::size_t days) const;
  /// Three digits, one per price level in kPrices order, each the index of
  /// the next price: "012" is the identity.
  std::string encoded() const;

  friend bool operator==(const PriceDynamics&, const PriceDynamics&) = default;
};

/// Uniform over the 27 maps and the 3 initial prices.
PriceDynamics sample_dynamics(Rng& rng);

struct Portfolio {
  std::int64_t cash = kInitialCash;
  std::int64_t shares = kInitialShares;

  std::int64_t max_buy(int price) const { return cash / price; }
  std::int64_t value(int price) const { return cash + shares * price; }

  friend bool operator==(const Portfolio&, const Portfolio&) = default;
};

/// Clamps a signed intention (positive buys) to what the portfolio allows.
std::int64_t clamp_trade(std::int64_t intended, const Portfolio& p, int price);

/// Largest order size a trader may draw. Any trade a portfolio can reach
/// within a week (at most ~74 shares) lies inside [-kDefaultMaxOrder,
/// kDefaultMaxOrder].
inline constexpr std::int64_t kDefaultMaxOrder = 100;

/// Per-price choices of a consistent trader; unset levels are decided at
/// the first day with that price.
using PriceChoices = std::array<std::optional<std::int64_t>, 3>;

class TraderPolicy {
 public:
  enum class Kind { kConsistent, kFree, kScripted };

  /// The first day a price appears, the trader draws an order, executes
  /// what is feasible, and from then on repeats that executed count on
  /// every day with the same price (clamped if no longer feasible).
  /// Preset levels skip the draw.
  static TraderPolicy consistent(PriceChoices preset = {},
                                 std::int64_t max_order = kDefaultMaxOrder);
  /// A fresh order uniform in [-max_order, max_order] every day, clamped.
  static TraderPolicy free(std::int64_t max_order = kDefaultMaxOrder);
  /// Intended trade per day, in order; missing days hold.
  static TraderPolicy scripted(std::vector<std::int64_t> intended);
  static TraderPolicy hold() { return scripted({}); }

  Kind kind() const { return kind_; }
  const PriceChoices& preset() const { return preset_; }
  std::int64_t max_order() const { return max_order_; }
  const std::vector<std::int64_t>& script() const { return script_; }

 private:
  Kind kind_ = Kind::kScripted;
  PriceChoices preset_{};
  std::int64_t max_order_ = kDefaultMaxOrder;
  std::vector<std::int64_t> script_;
};

struct DayRecord {
  int price = 0;
  std::int64_t intended = 0;
  std::int64_t executed = 0;
  Portfolio after;
};

struct WeekResult {
  std::vector<DayRecord> days;
  std::int64_t final_capital = 0;
};

/// Trades once per day at that day's price, starting from the initial
/// portfolio; final capital is cash plus shares at the last day's price.
/// Random draws come from `rng` in day order.
WeekResult simulate_week(const PriceDynamics& dyn, const TraderPolicy& policy, Rng& rng,
                         std::size_t days = kDaysPerWeek);

enum class Outcome { kAWins, kBWins, kTie };

struct MarketTest {
  PriceDynamics dynamics;
  std::int64_t best_a = 0;
  std::int64_t best_b = 0;
  Outcome outcome = Outcome::kTie;
  /// Group A days repeating an earlier price whose executed trade differs
  /// from the repeated choice because it was no longer feasible.
  std::uint64_t a_execution_divergences = 0;
  std::uint64_t a_repeat_days = 0;
  /// Invariant audits over every simulated week; both must stay zero.
  /// Conservation applies only when the price path is constant.
  std::uint64_t feasibility_violations = 0;
  std::uint64_t conservation_violations = 0;

  friend bool operator==(const MarketTest&, const MarketTest&) = default;
};

struct MarketConfig {
  std::size_t tests = 50;
  std::size_t group_size = 100;
  std::size_t days = kDaysPerWeek;
  std::int64_t max_order = kDefaultMaxOrder;
  std::uint64_t seed = kDefaultSeed;
  friend bool operator==(const MarketConfig&, const MarketConfig&) = default;
};

struct MarketReport {
  MarketConfig config;
  std::vector<MarketTest> tests;
  std::size_t count_a_gt_b = 0;
  std::size_t count_b_gt_a = 0;
  std::size_t count_tie = 0;
  std::uint64_t feasibility_violations = 0;
  std::uint64_t conservation_violations = 0;

  /// Appends a test and updates the counts.
  void add(MarketTest test);
  double divergence_rate() const;
  friend bool operator==(const MarketReport&, const MarketReport&) = default;
};

/// One test: `group_size` weeks under each policy on the same dynamics;
/// c(A), c(B) are the best final capitals.
MarketTest run_market_test(const PriceDynamics& dyn, const TraderPolicy& group_a,
                           const TraderPolicy& group_b, std::size_t group_size, std::size_t days,
                           Rng& rng);

/// Test t draws from derive_stream(seed, t): first the dynamics, then the
/// group A weeks, then group B.
MarketReport run_market_experiment(const MarketConfig& cfg);

std::string to_string(Outcome o);

}  // namespace contra::market
