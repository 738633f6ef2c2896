#include "contra/perceived_io.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace contra {

namespace {

void check_token(const Label& l, std::size_t t) {
  if (l.is_zero()) return;
  const auto& s = l.text();
  bool bad = s.empty() || s == "0";
  for (char c : s) bad = bad || std::isspace(static_cast<unsigned char>(c));
  if (bad) {
    throw std::invalid_argument("label at step " + std::to_string(t) +
                                " cannot be written in line format: '" + s + "'");
  }
}

Label token_label(const std::string& tok) { return tok == "0" ? Label::zero() : Label(tok); }

nlohmann::json labels_json(const std::vector<Label>& v) {
  auto arr = nlohmann::json::array();
  for (const auto& l : v) arr.push_back(to_json(l));
  return arr;
}

}  // namespace

std::string write_perceived_trace(const PerceivedTrace& pt) {
  std::ostringstream os;
  for (std::size_t t = 0; t < pt.pairs.size(); ++t) {
    check_token(pt.pairs[t].ent, t);
    check_token(pt.pairs[t].env, t);
    os << t << ' ' << pt.pairs[t].ent.text() << ' ' << pt.pairs[t].env.text() << '\n';
  }
  return os.str();
}

PerceivedTrace read_perceived_trace(std::string_view text) {
  PerceivedTrace pt;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    std::string t, ent, env, extra;
    if (!(ls >> t >> ent >> env) || (ls >> extra)) {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": expected 't ent env'");
    }
    if (t != std::to_string(pt.pairs.size())) {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": expected time index " +
                                  std::to_string(pt.pairs.size()) + ", got '" + t + "'");
    }
    pt.pairs.push_back({token_label(ent), token_label(env)});
  }
  return pt;
}

nlohmann::json to_json(const Label& l) {
  return l.is_zero() ? nlohmann::json(nullptr) : nlohmann::json(l.text());
}

nlohmann::json to_json(const Witness& w) { return {{"a", w.a}, {"b", w.b}}; }

nlohmann::json to_json(const ObservedEpisode& ep) {
  nlohmann::json j{{"start", ep.start},
                   {"lifetime", {ep.start, ep.start + ep.last()}},
                   {"intelligence", intelligence(ep)},
                   {"terminated", ep.terminated()},
                   {"ent", labels_json(ep.ent)},
                   {"env", labels_json(ep.env)}};
  j["successor"] = ep.successor
                       ? nlohmann::json{{"ent", to_json(ep.successor->ent)},
                                        {"env", to_json(ep.successor->env)}}
                       : nlohmann::json(nullptr);
  return j;
}

nlohmann::json to_json(const PropositionVerdict& v) {
  auto opt = [](const std::optional<Witness>& w) {
    return w ? to_json(*w) : nlohmann::json(nullptr);
  };
  return {{"terminated", v.terminated},
          {"deterministic_env", v.deterministic_env},
          {"intelligence", v.intelligence},
          {"threshold", v.threshold},
          {"exceeds_threshold", v.exceeds_threshold},
          {"contradictory", v.contradictory},
          {"env_witness", opt(v.env_witness)},
          {"contradiction_witness", opt(v.contradiction_witness)},
          {"premises_hold", v.premises_hold()},
          {"violation", v.violation()}};
}

}  // namespace contra
