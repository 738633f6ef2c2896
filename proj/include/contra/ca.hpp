#pragma once

#include <compare>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace contra {

/// A site of the unbounded integer lattice. `y` grows downwards, matching
/// the row order of plaintext patterns.
struct Cell {
  std::int64_t x = 0;
  std::int64_t y = 0;

  /// Row-major order: by y, then x.
  friend constexpr auto operator<=>(const Cell& a, const Cell& b) {
    if (auto c = a.y <=> b.y; c != 0) return c;
    return a.x <=> b.x;
  }
  friend constexpr bool operator==(const Cell&, const Cell&) = default;
};

/// Finite set of live cells; every other cell of the plane is dead.
class CAState {
 public:
  CAState() = default;
  explicit CAState(std::set<Cell> live) : live_(std::move(live)) {}
  CAState(std::initializer_list<Cell> cells) : live_(cells) {}

  const std::set<Cell>& live() const { return live_; }
  bool alive(const Cell& c) const { return live_.count(c) != 0; }
  std::size_t population() const { return live_.size(); }
  bool empty() const { return live_.empty(); }

  CAState translated(std::int64_t dx, std::int64_t dy) const;
  /// Union of two states.
  CAState merged(const CAState& other) const;

  friend bool operator==(const CAState&, const CAState&) = default;

 private:
  std::set<Cell> live_;
};

/// Inclusive bounding box used when rendering a state.
struct Viewport {
  std::int64_t min_x = 0;
  std::int64_t min_y = 0;
  std::int64_t max_x = -1;
  std::int64_t max_y = -1;

  bool empty() const { return max_x < min_x || max_y < min_y; }
  static Viewport bounding(const CAState& s);
};

/// Sequence s_0..s_T with s_{k+1} = life_step(s_k).
struct Trace {
  std::vector<CAState> states;

  std::size_t steps() const { return states.empty() ? 0 : states.size() - 1; }
};

class PatternParseError : public std::runtime_error {
 public:
  PatternParseError(std::size_t line, std::size_t column, char found);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Parses a '.'/'O' plaintext grid. Row 0, column 0 is the top-left cell.
/// A trailing '\r' before a newline is tolerated. Lines and columns in
/// errors are 1-based.
CAState parse_pattern(std::string_view text);

/// Renders the viewport as '.'/'O' rows, each terminated by '\n'.
std::string write_pattern(const CAState& s, const Viewport& view);
inline std::string write_pattern(const CAState& s) {
  return write_pattern(s, Viewport::bounding(s));
}

/// One synchronous application of Conway's rule: survive on 2, born on 3.
CAState life_step(const CAState& s);

Trace run(const CAState& initial, std::size_t steps);

/// The four phases of a glider travelling towards +x,+y, each normalised
/// so that its bounding box starts at (0,0). Phase k+1 is life_step of
/// phase k up to translation.
const std::vector<CAState>& glider_phases();

/// Glider phases for all four diagonal headings (16 shapes).
const std::vector<CAState>& glider_shapes_all_headings();

CAState glider();
CAState block();

/// A glider aimed at a block: the glider is intact for states 0..14 and
/// destroyed by the collision from state 15 on.
CAState glider_block_scene();

}  // namespace contra
