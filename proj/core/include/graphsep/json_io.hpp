#pragma once

#include <json.hpp>

#include "graphsep/classifier.hpp"
#include "graphsep/pptmix.hpp"

namespace graphsep {

using Json = nlohmann::json;

/// All *_from_json readers throw std::invalid_argument on malformed input
/// (missing fields, bad labels, bad rationals); nlohmann::json::exception
/// covers syntactically broken documents.

Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);

Json state_to_json(const GraphDiagonalState& s);
GraphDiagonalState state_from_json(const Json& j);

Json witness_to_json(const DiagonalWitness& w);
DiagonalWitness witness_from_json(const Json& j);

/// Bipartitions travel as side strings like "AD|BC".
std::string bipartition_to_string(const Bipartition& m);
Bipartition bipartition_from_string(const std::string& text, int n);

Json decomposition_to_json(const Decomposition& d, const Graph& g);
Decomposition decomposition_from_json(const Json& j, const Graph& g);

Json verdict_to_json(const Verdict& v, const GraphDiagonalState& s);

Json lp_certificate_to_json(const LpCertificate& c, const Graph& g);
LpCertificate lp_certificate_from_json(const Json& j, const Graph& g);

}  // namespace graphsep
