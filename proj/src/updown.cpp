#include "contra/updown.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>

namespace contra::updown {

namespace {

// f[j]: arrangements of the first i+1 cards whose last card has rank j
// among them. An UP step sums ranks below j, a DOWN step ranks at or above.
template <typename Int>
Int count_pattern(const std::vector<Word>& words) {
  std::vector<Int> f{Int(1)};
  for (std::size_t i = 0; i < words.size(); ++i) {
    const std::size_t len = f.size() + 1;
    std::vector<Int> g(len, Int(0));
    if (words[i] == Word::kUp) {
      Int acc(0);
      for (std::size_t j = 0; j < len; ++j) {
        g[j] = acc;
        if (j < f.size()) acc += f[j];
      }
    } else {
      Int acc(0);
      for (std::size_t j = len; j-- > 0;) {
        if (j < f.size()) acc += f[j];
        g[j] = acc;
      }
    }
    f = std::move(g);
  }
  return std::accumulate(f.begin(), f.end(), Int(0));
}

bool better(const MaxResult& cand, const MaxResult& best) {
  if (cand.count.wins != best.count.wins) return cand.count.wins > best.count.wins;
  return cand.strategy < best.strategy;
}

}  // namespace

Strategy::Strategy(std::vector<Word> words) : words_(std::move(words)) {
  if (words_.empty()) throw std::invalid_argument("strategy needs at least one word");
}

Strategy Strategy::parse(std::string_view text) {
  std::vector<Word> w;
  for (char c : text) {
    if (c == 'U' || c == 'u') {
      w.push_back(Word::kUp);
    } else if (c == 'D' || c == 'd') {
      w.push_back(Word::kDown);
    } else {
      throw std::invalid_argument("strategy words must be U or D, got '" + std::string(text) +
                                  "'");
    }
  }
  return Strategy(std::move(w));
}

Strategy Strategy::from_bits(std::uint64_t code, std::size_t length) {
  std::vector<Word> w(length);
  for (std::size_t i = 0; i < length; ++i) w[i] = (code >> i) & 1 ? Word::kDown : Word::kUp;
  return Strategy(std::move(w));
}

Strategy Strategy::alternating(std::size_t length, Word first) {
  std::vector<Word> w(length);
  for (std::size_t i = 0; i < length; ++i) {
    const bool same = i % 2 == 0;
    w[i] = same ? first : (first == Word::kUp ? Word::kDown : Word::kUp);
  }
  return Strategy(std::move(w));
}

Strategy Strategy::pattern_of(const std::vector<int>& cards) {
  if (cards.size() < 2) throw std::invalid_argument("deck needs at least two cards");
  std::vector<Word> w;
  for (std::size_t i = 0; i + 1 < cards.size(); ++i) {
    w.push_back(cards[i] < cards[i + 1] ? Word::kUp : Word::kDown);
  }
  return Strategy(std::move(w));
}

std::string Strategy::str() const {
  std::string s;
  for (auto w : words_) s.push_back(w == Word::kUp ? 'U' : 'D');
  return s;
}

Strategy Strategy::complement() const {
  auto w = words_;
  for (auto& x : w) x = x == Word::kUp ? Word::kDown : Word::kUp;
  return Strategy(std::move(w));
}

Strategy Strategy::reversed() const {
  auto w = words_;
  std::reverse(w.begin(), w.end());
  return Strategy(std::move(w));
}

BigInt factorial(std::size_t n) {
  BigInt f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

bool wins(const Strategy& s, const std::vector<int>& cards) {
  if (cards.size() != s.deck_size()) {
    throw std::invalid_argument("strategy has " + std::to_string(s.words().size()) +
                                " words but the deck has " + std::to_string(cards.size()) +
                                " cards");
  }
  if (std::set<int>(cards.begin(), cards.end()).size() != cards.size()) {
    throw std::invalid_argument("deck cards must be distinct");
  }
  return Strategy::pattern_of(cards) == s;
}

VictoryCount victories_bruteforce(const Strategy& s) {
  const std::size_t n = s.deck_size();
  if (n > kBruteforceMaxN) {
    throw EnumerationLimit("brute-force enumeration is limited to n <= " +
                           std::to_string(kBruteforceMaxN) + " (got n = " + std::to_string(n) +
                           ")");
  }
  std::vector<int> deck(n);
  std::iota(deck.begin(), deck.end(), 1);
  BigInt w = 0;
  do {
    if (wins(s, deck)) ++w;
  } while (std::next_permutation(deck.begin(), deck.end()));
  return {w, factorial(n)};
}

VictoryCount victories_dp(const Strategy& s) {
  const std::size_t n = s.deck_size();
  // n! < 2^64 up to n = 20.
  if (n <= 20) return {BigInt(count_pattern<std::uint64_t>(s.words())), factorial(n)};
  return {count_pattern<BigInt>(s.words()), factorial(n)};
}

std::vector<MaxResult> victory_table(std::size_t n) {
  if (n < 2 || n > kScanMaxN) {
    throw std::invalid_argument("strategy scan needs 2 <= n <= " + std::to_string(kScanMaxN) +
                                " (got n = " + std::to_string(n) + ")");
  }
  const std::uint64_t count = std::uint64_t{1} << (n - 1);
  std::vector<MaxResult> out;
  out.reserve(count);
  for (std::uint64_t code = 0; code < count; ++code) {
    auto s = Strategy::from_bits(code, n - 1);
    auto c = victories_dp(s);
    out.push_back({std::move(s), std::move(c)});
  }
  return out;
}

MaxResult max_victories(std::size_t n) {
  auto table = victory_table(n);
  std::size_t best = 0;
  for (std::size_t i = 1; i < table.size(); ++i) {
    if (better(table[i], table[best])) best = i;
  }
  return std::move(table[best]);
}

BonusDemo contradictory_bonus_demo(std::size_t n) {
  if (n < 2 || n > kDemoMaxN) {
    throw std::invalid_argument("bonus demo needs 2 <= n <= " + std::to_string(kDemoMaxN));
  }
  const auto best = max_victories(n);
  BonusDemo demo;
  demo.n = n;
  demo.m = best.count.wins;

  std::vector<int> deck(n);
  std::iota(deck.begin(), deck.end(), 1);
  std::optional<std::vector<int>> extra;
  do {
    if (wins(best.strategy, deck)) {
      demo.rounds.push_back({deck, best.strategy, false});
    } else if (!extra) {
      extra = deck;
    }
  } while (std::next_permutation(deck.begin(), deck.end()));

  if (!extra) throw std::logic_error("every deck matches one strategy; no bonus deck exists");
  demo.rounds.push_back({*extra, Strategy::pattern_of(*extra), false});

  for (std::size_t i = 0; i < demo.rounds.size(); ++i) {
    auto& r = demo.rounds[i];
    r.won = wins(r.strategy, r.deck);
    if (i > 0 && r.strategy != demo.rounds[i - 1].strategy) ++demo.switches;
  }

  demo.fixed_strategy_can_win_all = false;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << (n - 1)); ++code) {
    const auto s = Strategy::from_bits(code, n - 1);
    if (std::all_of(demo.rounds.begin(), demo.rounds.end(),
                    [&](const DemoRound& r) { return wins(s, r.deck); })) {
      demo.fixed_strategy_can_win_all = true;
    }
  }
  return demo;
}

}  // namespace contra::updown
