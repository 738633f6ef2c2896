#include <doctest.h>

#include <stdexcept>

#include <map>
#include <random>
#include <set>
#include <vector>

#include "contra/ca.hpp"
#include "contra/observer.hpp"

using namespace contra;

namespace {

// Independent Life oracle on a dense grid with a dead margin wide enough
// that nothing reaches the edge.
std::set<Cell> dense_step(const std::set<Cell>& live) {
  if (live.empty()) return {};
  std::int64_t x0 = live.begin()->x, x1 = x0, y0 = live.begin()->y, y1 = y0;
  for (const auto& c : live) {
    x0 = std::min(x0, c.x);
    x1 = std::max(x1, c.x);
    y0 = std::min(y0, c.y);
    y1 = std::max(y1, c.y);
  }
  x0 -= 2;
  y0 -= 2;
  x1 += 2;
  y1 += 2;
  const auto w = static_cast<std::size_t>(x1 - x0 + 1);
  const auto h = static_cast<std::size_t>(y1 - y0 + 1);
  std::vector<std::vector<int>> g(h, std::vector<int>(w, 0));
  for (const auto& c : live) g[c.y - y0][c.x - x0] = 1;
  std::set<Cell> out;
  for (std::size_t r = 1; r + 1 < h; ++r) {
    for (std::size_t c = 1; c + 1 < w; ++c) {
      int n = 0;
      for (int dr = -1; dr <= 1; ++dr)
        for (int dc = -1; dc <= 1; ++dc)
          if (dr || dc) n += g[r + dr][c + dc];
      const bool alive = n == 3 || (n == 2 && g[r][c]);
      if (alive) out.insert({static_cast<std::int64_t>(c) + x0, static_cast<std::int64_t>(r) + y0});
    }
  }
  return out;
}

CAState random_soup(std::mt19937_64& rng, int size, double density, std::int64_t ox, std::int64_t oy) {
  std::bernoulli_distribution live(density);
  std::set<Cell> cells;
  for (int y = 0; y < size; ++y)
    for (int x = 0; x < size; ++x)
      if (live(rng)) cells.insert({x + ox, y + oy});
  return CAState(std::move(cells));
}

}  // namespace

TEST_CASE("parse_pattern transcribes '.'/'O' grids") {
  CHECK(parse_pattern("").empty());
  CHECK(parse_pattern(".O.\n..O\nOOO") == CAState{{1, 0}, {2, 1}, {0, 2}, {1, 2}, {2, 2}});
  CHECK(parse_pattern("OO\nOO") == CAState{{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  CHECK(parse_pattern("OO\r\nOO\r\n") == parse_pattern("OO\nOO\n"));
}

TEST_CASE("parse_pattern reports the position of a bad character") {
  try {
    parse_pattern("...\n.O.\n..x");
    FAIL("expected a parse error");
  } catch (const PatternParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() == 3);
  }
  CHECK_THROWS_AS(parse_pattern("O O"), PatternParseError);
  CHECK_THROWS_AS(parse_pattern("O\rO"), PatternParseError);
  CHECK_THROWS_AS(parse_pattern("*"), PatternParseError);
}

TEST_CASE("write_pattern renders the viewport and round-trips") {
  const auto g = glider();
  CHECK(write_pattern(g) == ".O.\n..O\nOOO\n");
  CHECK(parse_pattern(write_pattern(g)) == g);
  CHECK(write_pattern(CAState{}).empty());
  CHECK(write_pattern(g, Viewport{-1, 0, 1, 0}) == "..O\n");
}

TEST_CASE("life_step on small known patterns") {
  CHECK(life_step(CAState{}).empty());
  CHECK(life_step(block()) == block());

  // Hand-applied rule: the ends of a horizontal bar have one neighbour and
  // die, the centre has two and survives, and (1,0) and (1,2) have three.
  const CAState horizontal{{0, 1}, {1, 1}, {2, 1}};
  const CAState vertical{{1, 0}, {1, 1}, {1, 2}};
  CHECK(life_step(horizontal) == vertical);
  CHECK(life_step(vertical) == horizontal);

  CHECK(life_step(CAState{{0, 0}}).empty());
  CHECK(life_step(CAState{{0, 0}, {1, 0}}).empty());
}

TEST_CASE("block is a fixpoint at any translation") {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::int64_t> off(-1'000'000, 1'000'000);
  for (int i = 0; i < 50; ++i) {
    const auto b = block().translated(off(rng), off(rng));
    CHECK(life_step(b) == b);
  }
}

TEST_CASE("every glider shape returns to itself shifted diagonally after four steps") {
  const auto& shapes = glider_shapes_all_headings();
  REQUIRE(shapes.size() == 16);
  std::set<std::pair<std::int64_t, std::int64_t>> shifts;
  for (const auto& s : shapes) {
    const auto after = run(s, 4).states[4];
    bool found = false;
    for (std::int64_t dx : {-1, 1}) {
      for (std::int64_t dy : {-1, 1}) {
        if (after == s.translated(dx, dy)) {
          found = true;
          shifts.insert({dx, dy});
        }
      }
    }
    CHECK(found);
  }
  CHECK(shifts.size() == 4);
  // The standard glider travels towards +x, +y.
  CHECK(run(glider(), 4).states[4] == glider().translated(1, 1));
}

TEST_CASE("life_step agrees with a dense-grid oracle on random soups") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> off(-50, 50);
  for (int trial = 0; trial < 40; ++trial) {
    auto s = random_soup(rng, 12, 0.35, off(rng), off(rng));
    for (int k = 0; k < 10; ++k) {
      const auto next = life_step(s);
      REQUIRE(next.live() == dense_step(s.live()));
      s = next;
    }
  }
}

TEST_CASE("life_step stays inside the 1-neighbourhood of the live set") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const auto s = random_soup(rng, 10, 0.4, 0, 0);
    for (const auto& c : life_step(s).live()) {
      bool near = false;
      for (std::int64_t dy = -1; dy <= 1 && !near; ++dy)
        for (std::int64_t dx = -1; dx <= 1 && !near; ++dx) near = s.alive({c.x + dx, c.y + dy});
      CHECK(near);
    }
  }
}

TEST_CASE("run produces a consistent trace") {
  const auto g = glider();
  const auto t0 = run(g, 0);
  REQUIRE(t0.states.size() == 1);
  CHECK(t0.states[0] == g);

  std::mt19937_64 rng(3);
  const auto t = run(random_soup(rng, 8, 0.5, 0, 0), 25);
  REQUIRE(t.states.size() == 26);
  CHECK(t.steps() == 25);
  for (std::size_t k = 0; k + 1 < t.states.size(); ++k) CHECK(life_step(t.states[k]) == t.states[k + 1]);
  CHECK(life_step(t.states[5]) == life_step(t.states[5]));
}

TEST_CASE("glider_block_scene holds one glider and one block") {
  const auto scene = glider_block_scene();
  CHECK(scene.population() == 9);
  CHECK(scene == glider().merged(block().translated(7, 7)));
}

TEST_CASE("glider_block_scene: no isolated glider survives the collision") {
  // Brute-force scan independent of detect_glider. A shape counts only when
  // none of its cells touches a foreign live cell; at state 15 the glider's
  // cells are still present but already merged with the block.
  auto copies = [](const CAState& s, bool isolated) {
    int found = 0;
    for (const auto& shape : glider_shapes_all_headings()) {
      const auto& first = *shape.live().begin();
      for (const auto& anchor : s.live()) {
        const auto cand = shape.translated(anchor.x - first.x, anchor.y - first.y);
        bool ok = true;
        for (const auto& c : cand.live()) ok = ok && s.alive(c);
        if (ok && isolated) {
          for (const auto& c : cand.live())
            for (std::int64_t dy = -1; dy <= 1; ++dy)
              for (std::int64_t dx = -1; dx <= 1; ++dx) {
                const Cell n{c.x + dx, c.y + dy};
                ok = ok && (!s.alive(n) || cand.alive(n));
              }
        }
        found += ok;
      }
    }
    return found;
  };
  const auto t = run(glider_block_scene(), 19);
  for (std::size_t k = 0; k <= 14; ++k) {
    CHECK(copies(t.states[k], true) == 1);
    CHECK(detect_glider(t.states[k]).has_value());
    CHECK(t.states[k].population() == 9);
  }
  CHECK(copies(t.states[15], false) > 0);
  for (std::size_t k = 15; k <= 19; ++k) {
    CHECK(copies(t.states[k], true) == 0);
    CHECK_FALSE(detect_glider(t.states[k]).has_value());
  }
}
