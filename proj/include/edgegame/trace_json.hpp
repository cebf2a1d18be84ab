#pragma once

#include <iosfwd>
#include <vector>

#include "json.hpp"

#include "edgegame/game_engine.hpp"

namespace edgegame {

using Json = nlohmann::json;

Json to_json(const ComponentSummary& c);
Json to_json(const InvariantReport& r);
Json to_json(const StrategyDecision& d);
Json to_json(const MoveRecord& m);
Json to_json(const GameStats& s);
Json trace_header(const GameTrace& t);
Json trace_footer(const GameTrace& t);

// One JSON object per line: header, moves, footer.
void write_trace(std::ostream& out, const GameTrace& t);

struct LoadedTrace {
  Json header;
  std::vector<MoveRecord> moves;  // action fields, case tag and report only
  Json footer;
};

// Inverse of write_trace for the fields replay needs. Throws kParse.
LoadedTrace read_trace(std::istream& in);
MoveRecord move_from_json(const Json& j);
InvariantReport report_from_json(const Json& j);

}  // namespace edgegame
