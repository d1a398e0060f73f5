#pragma once

#include <filesystem>

#include <json.hpp>

#include "parlearn/matrix.hpp"
#include "parlearn/multigraph.hpp"
#include "parlearn/weighted_graph.hpp"

namespace parlearn {

using Json = nlohmann::json;

/// Rationals travel as canonical strings ("p/q" or "p"). Reading also accepts
/// JSON integers.
Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

/// {"n": int, "edges": [[u,v],...], "labels": {"1": v, ...}}; 0-based
/// vertices, 1-based labels, loops as [v,v], parallel edges repeated. An
/// optional "k" sets the arity; otherwise it is the largest label present.
Json to_json(const LabeledMultigraph& g);
LabeledMultigraph graph_from_json(const Json& j);

/// {"alpha": ["1","2"], "beta": [["1","1"],["1","0"]]}
Json to_json(const WeightedGraph& h);
WeightedGraph weighted_graph_from_json(const Json& j);

Json to_json(const Matrix& m);

Json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace parlearn
