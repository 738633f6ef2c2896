#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "contra/ca.hpp"

namespace contra {

/// Opaque perception label. The distinguished ZERO label means "entity
/// absent" and is distinct from every textual label, including "0".
class Label {
 public:
  Label() = default;  // ZERO
  explicit Label(std::string text) : zero_(false), text_(std::move(text)) {}

  static Label zero() { return Label(); }

  bool is_zero() const { return zero_; }
  /// Text of a non-ZERO label; "0" for ZERO.
  const std::string& text() const;

  friend auto operator<=>(const Label&, const Label&) = default;
  friend bool operator==(const Label&, const Label&) = default;

 private:
  bool zero_ = true;  // ZERO sorts after every textual label
  std::string text_;
};

/// Finite, nonempty perception sets. ZERO must belong to the entity set.
class PerceptionSpace {
 public:
  PerceptionSpace(std::vector<Label> ent_states, std::vector<Label> env_states);

  /// Space with ZERO plus `ent_nonzero` entity labels "e0","e1",... and
  /// `env_count` environment labels "v0","v1",...
  static PerceptionSpace numbered(std::size_t ent_nonzero, std::size_t env_count);

  const std::vector<Label>& ent_states() const { return ent_; }
  const std::vector<Label>& env_states() const { return env_; }
  bool has_ent(const Label& l) const;
  bool has_env(const Label& l) const;

 private:
  std::vector<Label> ent_;
  std::vector<Label> env_;
};

/// The pair (ps_ent, ps_env). Both functions must be total and deterministic.
struct Observer {
  std::function<Label(const CAState&)> ent;
  std::function<Label(const CAState&)> env;
};

struct PerceivedPair {
  Label ent;
  Label env;
  friend bool operator==(const PerceivedPair&, const PerceivedPair&) = default;
};

struct PerceivedTrace {
  std::vector<PerceivedPair> pairs;
  friend bool operator==(const PerceivedTrace&, const PerceivedTrace&) = default;
};

/// One entity: a maximal run of non-ZERO entity labels starting at `start`,
/// the environment over the same steps, and the perceived pair one step past
/// the run when the trace continues that far.
struct ObservedEpisode {
  std::size_t start = 0;
  std::vector<Label> ent;
  std::vector<Label> env;
  std::optional<PerceivedPair> successor;

  /// q, the index of the last step of the lifetime relative to `start`.
  std::size_t last() const { return ent.empty() ? 0 : ent.size() - 1; }
  /// Finite lifetime: the entity is observed to disappear.
  bool terminated() const { return successor.has_value() && successor->ent.is_zero(); }

  friend bool operator==(const ObservedEpisode&, const ObservedEpisode&) = default;
};

struct Witness {
  std::size_t a = 0;
  std::size_t b = 0;
  friend bool operator==(const Witness&, const Witness&) = default;
};

PerceivedTrace perceive_trace(const Observer& obs, const Trace& trace);

/// Smallest space containing every label of `pt` (plus ZERO).
PerceptionSpace observed_space(const PerceivedTrace& pt);

/// Returns the cells of an isolated glider phase in `s`, if any. A match is
/// a translate of one of the glider shapes (any heading) with no other live
/// cell in the 8-neighbourhood of its cells. Several matches resolve to the
/// one whose sorted cell list is least in (y, x) order.
std::optional<CAState> detect_glider(const CAState& s);

/// Text form of a cell set: "x,y;x,y;..." in (y, x) order, or "empty".
std::string describe_cells(const CAState& s);

/// ps_ent: the detected glider's cells (ZERO when none).
/// ps_env: the remaining live cells.
Observer glider_observer();

std::vector<ObservedEpisode> extract_entities(const PerceivedTrace& pt);

/// |lifetime| - 1.
std::size_t intelligence(const ObservedEpisode& ep);

/// First (a, b) in lexicographic order, a < b, with equal perceived pairs and
/// different successor entity labels. Steps whose successor is unknown are
/// never compared.
std::optional<Witness> is_contradictory(const ObservedEpisode& ep);

/// First (a, b) with equal perceived pairs and different successor
/// environment labels; nullopt means the environment is deterministic.
std::optional<Witness> is_deterministic_env(const ObservedEpisode& ep);

/// |P_ent| * |P_env|, ZERO counted.
std::size_t contradiction_threshold(const PerceptionSpace& space);

struct PropositionVerdict {
  bool terminated = false;
  bool deterministic_env = false;
  std::size_t intelligence = 0;
  std::size_t threshold = 0;
  bool exceeds_threshold = false;
  bool contradictory = false;
  std::optional<Witness> env_witness;
  std::optional<Witness> contradiction_witness;

  bool premises_hold() const { return terminated && deterministic_env && exceeds_threshold; }
  /// Premises hold but no contradiction was found. Never expected.
  bool violation() const { return premises_hold() && !contradictory; }
};

/// Throws std::invalid_argument if the episode uses labels outside `space`.
PropositionVerdict check_proposition(const ObservedEpisode& ep, const PerceptionSpace& space);

/// Exchanges entity and environment roles. The successor pair is swapped
/// too, so dual_view(dual_view(ep)) == ep.
ObservedEpisode dual_view(const ObservedEpisode& ep);

/// Space of the dual observer: the environment labels plus ZERO become the
/// entity space and the old entity labels (ZERO included) the environment
/// space.
PerceptionSpace dual_space(const PerceptionSpace& space);

}  // namespace contra
