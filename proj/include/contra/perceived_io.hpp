#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "contra/observer.hpp"

namespace contra {

/// Line format: one step per line, "t ent env", LF-terminated. ZERO is
/// written as "0". Labels must be non-empty and free of whitespace, and a
/// textual label may not be "0"; violations throw std::invalid_argument.
std::string write_perceived_trace(const PerceivedTrace& pt);

/// Inverse of write_perceived_trace. Time indices must run 0,1,2,...
/// Blank lines are ignored. Errors throw std::invalid_argument naming the line.
PerceivedTrace read_perceived_trace(std::string_view text);

nlohmann::json to_json(const Label& l);
nlohmann::json to_json(const Witness& w);
nlohmann::json to_json(const ObservedEpisode& ep);
nlohmann::json to_json(const PropositionVerdict& v);

}  // namespace contra
