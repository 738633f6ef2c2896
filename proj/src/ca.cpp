#include "contra/ca.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>

namespace contra {

namespace {

CAState normalised(const CAState& s) {
  if (s.empty()) return s;
  auto v = Viewport::bounding(s);
  return s.translated(-v.min_x, -v.min_y);
}

CAState mirrored(const CAState& s, bool flip_x, bool flip_y) {
  std::set<Cell> out;
  for (const auto& c : s.live()) {
    out.insert({flip_x ? -c.x : c.x, flip_y ? -c.y : c.y});
  }
  return normalised(CAState(std::move(out)));
}

}  // namespace

CAState CAState::translated(std::int64_t dx, std::int64_t dy) const {
  std::set<Cell> out;
  for (const auto& c : live_) out.insert({c.x + dx, c.y + dy});
  return CAState(std::move(out));
}

CAState CAState::merged(const CAState& other) const {
  auto out = live_;
  out.insert(other.live_.begin(), other.live_.end());
  return CAState(std::move(out));
}

Viewport Viewport::bounding(const CAState& s) {
  if (s.empty()) return {};
  Viewport v{std::numeric_limits<std::int64_t>::max(), std::numeric_limits<std::int64_t>::max(),
             std::numeric_limits<std::int64_t>::min(), std::numeric_limits<std::int64_t>::min()};
  for (const auto& c : s.live()) {
    v.min_x = std::min(v.min_x, c.x);
    v.max_x = std::max(v.max_x, c.x);
    v.min_y = std::min(v.min_y, c.y);
    v.max_y = std::max(v.max_y, c.y);
  }
  return v;
}

PatternParseError::PatternParseError(std::size_t line, std::size_t column, char found)
    : std::runtime_error([&] {
        std::ostringstream os;
        os << "pattern parse error at line " << line << ", column " << column
           << ": unexpected character ";
        if (found >= 0x20 && found < 0x7f) {
          os << "'" << found << "'";
        } else {
          os << "0x" << std::hex << static_cast<int>(static_cast<unsigned char>(found));
        }
        return os.str();
      }()),
      line_(line),
      column_(column) {}

CAState parse_pattern(std::string_view text) {
  std::set<Cell> live;
  std::int64_t row = 0;
  std::int64_t col = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    switch (ch) {
      case '.':
        ++col;
        break;
      case 'O':
        live.insert({col, row});
        ++col;
        break;
      case '\n':
        ++row;
        col = 0;
        break;
      case '\r':
        if (i + 1 < text.size() && text[i + 1] == '\n') break;
        [[fallthrough]];
      default:
        throw PatternParseError(static_cast<std::size_t>(row) + 1, static_cast<std::size_t>(col) + 1,
                                ch);
    }
  }
  return CAState(std::move(live));
}

std::string write_pattern(const CAState& s, const Viewport& view) {
  std::string out;
  if (view.empty()) return out;
  for (auto y = view.min_y; y <= view.max_y; ++y) {
    for (auto x = view.min_x; x <= view.max_x; ++x) out.push_back(s.alive({x, y}) ? 'O' : '.');
    out.push_back('\n');
  }
  return out;
}

CAState life_step(const CAState& s) {
  std::map<Cell, int> counts;
  for (const auto& c : s.live()) {
    for (std::int64_t dy = -1; dy <= 1; ++dy) {
      for (std::int64_t dx = -1; dx <= 1; ++dx) {
        if (dx != 0 || dy != 0) ++counts[{c.x + dx, c.y + dy}];
      }
    }
  }
  std::set<Cell> next;
  for (const auto& [cell, n] : counts) {
    if (n == 3 || (n == 2 && s.alive(cell))) next.insert(next.end(), cell);
  }
  return CAState(std::move(next));
}

Trace run(const CAState& initial, std::size_t steps) {
  Trace t;
  t.states.reserve(steps + 1);
  t.states.push_back(initial);
  for (std::size_t k = 0; k < steps; ++k) t.states.push_back(life_step(t.states.back()));
  return t;
}

CAState glider() { return parse_pattern(".O.\n..O\nOOO"); }
CAState block() { return parse_pattern("OO\nOO"); }

const std::vector<CAState>& glider_phases() {
  static const std::vector<CAState> phases = [] {
    std::vector<CAState> out;
    CAState g = glider();
    for (int k = 0; k < 4; ++k) {
      out.push_back(normalised(g));
      g = life_step(g);
    }
    return out;
  }();
  return phases;
}

const std::vector<CAState>& glider_shapes_all_headings() {
  static const std::vector<CAState> shapes = [] {
    std::vector<CAState> out;
    for (bool fx : {false, true}) {
      for (bool fy : {false, true}) {
        for (const auto& p : glider_phases()) out.push_back(mirrored(p, fx, fy));
      }
    }
    return out;
  }();
  return shapes;
}

CAState glider_block_scene() {
  // Block on the glider's diagonal. With this offset the glider stays
  // isolated through state 14; the collision leaves no glider (and by
  // state 80 no live cell at all).
  return glider().merged(block().translated(7, 7));
}

}  // namespace contra
