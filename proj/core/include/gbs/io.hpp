#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "gbs/branching.hpp"
#include "gbs/error.hpp"
#include "gbs/faithfulness.hpp"
#include "gbs/graph.hpp"
#include "gbs/representation.hpp"
#include "gbs/step_function.hpp"

namespace gbs::io {

using nlohmann::json;

/// Reads a whole file; throws ParseError if it cannot be opened.
std::string read_file(const std::filesystem::path& path);

/// Parses JSON text. Syntax errors become ParseError with line and column.
json parse_json(std::string_view text, std::string_view what = "input");

/// {"vertices": ["v", ...], "edges": [{"id": "e", "src": "v", "dst": "w"}, ...]}
DirectedGraph graph_from_json(const json& j);
json graph_to_json(const DirectedGraph& g);
DirectedGraph parse_graph(std::string_view text);

/// Rendering options. With `approx`, every exact scalar also carries a
/// decimal "approx" field.
struct Style {
  bool approx = false;
};

/// {"a": "p/q", "b": "r/s"} denoting a + b sqrt(d). "b" may be omitted.
QuadScalar scalar_from_json(const json& j, std::int64_t d);
json scalar_to_json(const QuadScalar& x, Style style = {});
json interval_to_json(const Interval& i, Style style = {});
Interval interval_from_json(const json& j, std::int64_t d);
json interval_set_to_json(const IntervalSet& s, Style style = {});
/// Values as {"radicand": "coefficient", ...}.
json radical_to_json(const RadCoeff& c, Style style = {});
json step_function_to_json(const StepFunction& f, Style style = {});

/// {"d": 2, "theta": {"e": {"a": "0", "b": "1"}}}; angles reduced mod 1 on load.
struct ThetaConfig {
  std::int64_t d = 2;
  std::map<std::string, QuadScalar> theta;
};
ThetaConfig theta_config_from_json(const json& j);
ThetaConfig parse_theta_config(std::string_view text);
/// Throws UnknownEdge for names not in g.
std::map<EdgeId, QuadScalar> resolve_thetas(const DirectedGraph& g, const ThetaConfig& config);

json system_to_json(const BranchingSystem& bs, Style style = {});
BranchingSystem system_from_json(const json& j);

json axiom_report_to_json(const BranchingSystem& bs, const AxiomReport& r, Style style = {});
json relation_report_to_json(const RelationReport& r, Style style = {});
json verdict_to_json(const BranchingSystem& bs, const FaithfulnessVerdict& v, Style style = {});
json error_to_json(ErrorKind kind, std::string_view message);

}  // namespace gbs::io
