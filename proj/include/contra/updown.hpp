#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace contra::updown {

using BigInt = boost::multiprecision::cpp_int;

enum class Word : std::uint8_t { kUp = 0, kDown = 1 };

/// w_1..w_{n-1}; UP orders before DOWN.
class Strategy {
 public:
  explicit Strategy(std::vector<Word> words);

  /// Parses a word over {U, D}; throws std::invalid_argument otherwise.
  static Strategy parse(std::string_view text);
  /// Bits of `code` from least significant: bit i set means w_{i+1} = DOWN.
  static Strategy from_bits(std::uint64_t code, std::size_t length);
  static Strategy alternating(std::size_t length, Word first = Word::kUp);
  /// Rise/fall pattern of a deck.
  static Strategy pattern_of(const std::vector<int>& cards);

  const std::vector<Word>& words() const { return words_; }
  std::size_t deck_size() const { return words_.size() + 1; }
  std::string str() const;
  Strategy complement() const;
  Strategy reversed() const;

  friend auto operator<=>(const Strategy&, const Strategy&) = default;
  friend bool operator==(const Strategy&, const Strategy&) = default;

 private:
  std::vector<Word> words_;
};

struct VictoryCount {
  BigInt wins;
  BigInt total;
  friend bool operator==(const VictoryCount&, const VictoryCount&) = default;
};

class EnumerationLimit : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr std::size_t kBruteforceMaxN = 9;
inline constexpr std::size_t kScanMaxN = 16;
inline constexpr std::size_t kDemoMaxN = 8;

BigInt factorial(std::size_t n);

/// True iff each w_i matches the order of c_i, c_{i+1}. Cards must be
/// distinct; throws std::invalid_argument on a length mismatch or repeats.
bool wins(const Strategy& s, const std::vector<int>& cards);

/// Enumerates every permutation of 1..n. Refuses n > kBruteforceMaxN.
VictoryCount victories_bruteforce(const Strategy& s);

/// Counts permutations with the prescribed up/down pattern in O(n^2).
VictoryCount victories_dp(const Strategy& s);

struct MaxResult {
  Strategy strategy;
  VictoryCount count;
};

/// Best fixed strategy over all 2^(n-1) words. Ties go to the strategy
/// starting with UP, then to the lexicographically least word.
MaxResult max_victories(std::size_t n);

/// All 2^(n-1) strategies in from_bits order with their counts.
std::vector<MaxResult> victory_table(std::size_t n);

struct DemoRound {
  std::vector<int> deck;
  Strategy strategy;
  bool won = false;
};

struct BonusDemo {
  std::size_t n = 0;
  BigInt m;
  std::vector<DemoRound> rounds;  // m + 1 rounds, all won
  std::size_t switches = 0;
  bool fixed_strategy_can_win_all = true;
};

/// A player wins the m decks of a best fixed strategy, then switches once
/// to win the lexicographically first remaining deck. The construction is
/// checked: every round replays through wins(), and no single strategy
/// wins every listed deck.
BonusDemo contradictory_bonus_demo(std::size_t n);

}  // namespace contra::updown
