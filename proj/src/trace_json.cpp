#include "edgegame/trace_json.hpp"

#include <istream>
#include <ostream>
#include <string>

namespace edgegame {

Json to_json(const ComponentSummary& c) {
  return Json{{"label", c.label},         {"x", c.x},
              {"star_like", c.star_like}, {"S_ok", c.s_ok},
              {"M_ok", c.m_ok},           {"gamma", c.gamma},
              {"unmatched", c.unmatched}, {"colours", c.colours},
              {"relevant", c.relevant},   {"base_nodes", c.base_nodes}};
}

Json to_json(const InvariantReport& r) {
  Json comps = Json::array();
  for (const auto& c : r.components) comps.push_back(to_json(c));
  return Json{{"components", comps},
              {"active_components", r.active_components},
              {"s_violations", r.s_violations},
              {"m_violations", r.m_violations},
              {"unmatched_cap_violations", r.unmatched_cap_violations},
              {"star_size_violations", r.star_size_violations},
              {"colour_bound_violations", r.colour_bound_violations},
              {"three_leaf_violations", r.three_leaf_violations},
              {"max_colours_present", r.max_colours_present},
              {"max_x", r.max_x}};
}

Json to_json(const StrategyDecision& d) {
  return Json{{"case_tag", to_string(d.case_tag)}, {"edge", d.edge},
              {"colour", d.colour},                {"component", d.component},
              {"base", d.base},                    {"target_edge", d.target_edge},
              {"target_vertex", d.target_vertex},  {"path_length", d.path_length}};
}

Json to_json(const MoveRecord& m) {
  Json j{{"move_no", m.move_no}, {"player", to_string(m.player)}};
  if (m.skip) {
    j["action"] = Json{{"skip", true}};
    j["colour"] = nullptr;
  } else {
    j["action"] = Json{{"edge", m.edge}};
    j["colour"] = m.colour;
  }
  if (m.decision) {
    j["case_tag"] = to_string(m.decision->case_tag);
    j["decision"] = to_json(*m.decision);
  }
  j["report"] = to_json(m.report);
  return j;
}

Json to_json(const GameStats& s) {
  return Json{{"max_alice_lca_queries", s.max_alice_lca_queries},
              {"max_alice_leaf_ops", s.max_alice_leaf_ops},
              {"max_colours_after_alice", s.max_colours_after_alice},
              {"max_colours_after_bob", s.max_colours_after_bob},
              {"alice_invariant_failures", s.alice_invariant_failures},
              {"star_size_failures", s.star_size_failures},
              {"three_leaf_failures", s.three_leaf_failures},
              {"max_leaf_list_length", s.max_leaf_list_length},
              {"alice_moves", s.alice_moves},
              {"bob_moves", s.bob_moves},
              {"bob_skips", s.bob_skips}};
}

Json trace_header(const GameTrace& t) {
  return Json{{"type", "header"},
              {"config",
               {{"forest_hash", t.forest_hash},
                {"vertices", t.vertices},
                {"edges", t.edges},
                {"delta", t.delta},
                {"k", t.k},
                {"first_player", to_string(t.first_player)},
                {"bob_may_skip", t.bob_may_skip},
                {"bob_policy", t.bob_policy},
                {"alice_policy", t.alice_policy}}}};
}

Json trace_footer(const GameTrace& t) {
  return Json{{"type", "footer"},
              {"outcome", to_string(t.outcome)},
              {"stuck_edges", t.stuck_edges},
              {"diagnostics", t.diagnostics},
              {"stats", to_json(t.stats)}};
}

void write_trace(std::ostream& out, const GameTrace& t) {
  out << trace_header(t).dump() << '\n';
  for (const auto& m : t.moves) out << to_json(m).dump() << '\n';
  out << trace_footer(t).dump() << '\n';
}

InvariantReport report_from_json(const Json& j) {
  InvariantReport r;
  for (const auto& c : j.at("components")) {
    ComponentSummary s;
    s.label = c.at("label").get<ComponentLabel>();
    s.x = c.at("x").get<int32_t>();
    s.star_like = c.at("star_like").get<bool>();
    s.s_ok = c.at("S_ok").get<bool>();
    s.m_ok = c.at("M_ok").get<bool>();
    s.gamma = c.at("gamma").get<int32_t>();
    s.unmatched = c.at("unmatched").get<int32_t>();
    s.colours = c.at("colours").get<int32_t>();
    s.relevant = c.at("relevant").get<bool>();
    s.base_nodes = c.at("base_nodes").get<std::vector<Vertex>>();
    r.components.push_back(std::move(s));
  }
  r.active_components = j.at("active_components").get<int32_t>();
  r.s_violations = j.at("s_violations").get<int32_t>();
  r.m_violations = j.at("m_violations").get<int32_t>();
  r.unmatched_cap_violations = j.at("unmatched_cap_violations").get<int32_t>();
  r.star_size_violations = j.at("star_size_violations").get<int32_t>();
  r.colour_bound_violations = j.at("colour_bound_violations").get<int32_t>();
  r.three_leaf_violations = j.at("three_leaf_violations").get<int32_t>();
  r.max_colours_present = j.at("max_colours_present").get<int32_t>();
  r.max_x = j.at("max_x").get<int32_t>();
  return r;
}

MoveRecord move_from_json(const Json& j) {
  MoveRecord m;
  m.move_no = j.at("move_no").get<int32_t>();
  m.player = j.at("player").get<std::string>() == to_string(Player::kAlice) ? Player::kAlice : Player::kBob;
  const Json& action = j.at("action");
  m.skip = action.contains("skip") && action.at("skip").get<bool>();
  if (!m.skip) {
    m.edge = action.at("edge").get<EdgeId>();
    m.colour = j.at("colour").get<Colour>();
  }
  if (j.contains("report")) m.report = report_from_json(j.at("report"));
  return m;
}

LoadedTrace read_trace(std::istream& in) {
  LoadedTrace t;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      Json j = Json::parse(line);
      const std::string type = j.value("type", "");
      if (type == "header") t.header = std::move(j);
      else if (type == "footer") t.footer = std::move(j);
      else t.moves.push_back(move_from_json(j));
    } catch (const Json::exception& e) {
      throw GameError(ErrorCode::kParse, "trace line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return t;
}

}  // namespace edgegame
