#include "graphsep/json_io.hpp"

#include <stdexcept>

namespace graphsep {

namespace {

const Json& require(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw std::invalid_argument(std::string("missing field: ") + key);
  return *it;
}

int require_int(const Json& j, const char* key) {
  const Json& v = require(j, key);
  if (!v.is_number_integer()) throw std::invalid_argument(std::string("not an integer: ") + key);
  return v.get<int>();
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw std::invalid_argument("rationals must be strings like \"5/13\" or integers");
}

/// Weight maps keyed by sign strings; entries absent from the map are zero.
RationalVec vec_from_json(const Json& j, int n) {
  int dim = 1 << n;
  RationalVec out(dim, Rational(0));
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (static_cast<int>(it.key().size()) != n)
        throw std::invalid_argument("label length does not match the qubit count: " + it.key());
      out[parse_label(it.key())] = rational_from_json(it.value());
    }
    return out;
  }
  if (j.is_array()) {
    if (static_cast<int>(j.size()) != dim)
      throw std::invalid_argument("weight array length is not 2^n");
    for (int k = 0; k < dim; ++k) out[k] = rational_from_json(j[k]);
    return out;
  }
  throw std::invalid_argument("weights must be a label map or an array");
}

Json vec_to_json(const RationalVec& v, int n) {
  Json out = Json::object();
  for (std::size_t k = 0; k < v.size(); ++k)
    if (v[k] != 0) out[label_str(static_cast<BasisLabel>(k), n)] = to_string(v[k]);
  return out;
}

}  // namespace

Json graph_to_json(const Graph& g) {
  Json edges = Json::array();
  for (auto [i, j] : g.edges()) edges.push_back(Json::array({i, j}));
  return Json{{"n", g.num_qubits()}, {"edges", edges}};
}

Graph graph_from_json(const Json& j) {
  int n = require_int(j, "n");
  if (n < 1 || n > kMaxQubits) throw std::invalid_argument("qubit count out of range");
  const Json& edges = require(j, "edges");
  if (!edges.is_array()) throw std::invalid_argument("edges must be an array");
  std::vector<std::pair<int, int>> list;
  for (const Json& e : edges) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      throw std::invalid_argument("each edge must be a pair of qubit indices");
    int a = e[0].get<int>(), b = e[1].get<int>();
    if (a < 1 || a > n || b < 1 || b > n || a == b)
      throw std::invalid_argument("edge endpoint out of range");
    list.emplace_back(a, b);
  }
  return Graph(n, list);
}

Json state_to_json(const GraphDiagonalState& s) {
  return Json{{"graph", graph_to_json(s.graph)},
              {"lambda", vec_to_json(s.weights, s.num_qubits())}};
}

GraphDiagonalState state_from_json(const Json& j) {
  Graph g = graph_from_json(require(j, "graph"));
  const Json* weights = nullptr;
  if (auto it = j.find("lambda"); it != j.end()) weights = &*it;
  else if (auto it2 = j.find("lambda_array"); it2 != j.end()) weights = &*it2;
  else throw std::invalid_argument("missing field: lambda");
  // Structural parsing only; distribution validity is checked by the caller.
  return GraphDiagonalState(g, vec_from_json(*weights, g.num_qubits()));
}

Json witness_to_json(const DiagonalWitness& w) {
  return Json{{"graph", graph_to_json(w.graph)},
              {"coeffs", vec_to_json(w.coeffs, w.graph.num_qubits())}};
}

DiagonalWitness witness_from_json(const Json& j) {
  Graph g = graph_from_json(require(j, "graph"));
  return DiagonalWitness{g, vec_from_json(require(j, "coeffs"), g.num_qubits())};
}

std::string bipartition_to_string(const Bipartition& m) { return m.str(); }

Bipartition bipartition_from_string(const std::string& text, int n) {
  auto bar = text.find('|');
  if (bar == std::string::npos) throw std::invalid_argument("partition needs a '|': " + text);
  std::uint32_t mask = 0, seen = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (i == bar) continue;
    int q = text[i] - 'A' + 1;
    if (q < 1 || q > n) throw std::invalid_argument("partition letter out of range: " + text);
    std::uint32_t bit = 1u << (q - 1);
    if (seen & bit) throw std::invalid_argument("repeated qubit in partition: " + text);
    seen |= bit;
    if (i < bar) mask |= bit;
  }
  if (seen != (1u << n) - 1u)
    throw std::invalid_argument("partition does not cover all qubits: " + text);
  return Bipartition(n, mask).canonical();
}

Json decomposition_to_json(const Decomposition& d, const Graph& g) {
  Json comps = Json::array();
  for (const Component& c : d.components) {
    comps.push_back(Json{{"weight", to_string(c.weight)},
                         {"kind", certificate_kind_name(c.kind)},
                         {"partition", c.part.str()},
                         {"lambda", vec_to_json(c.state.weights, g.num_qubits())}});
  }
  return Json{{"components", comps}};
}

Decomposition decomposition_from_json(const Json& j, const Graph& g) {
  const Json& comps = require(j, "components");
  if (!comps.is_array()) throw std::invalid_argument("components must be an array");
  Decomposition d;
  for (const Json& c : comps) {
    Component out;
    out.weight = rational_from_json(require(c, "weight"));
    out.kind = certificate_kind_from_name(require(c, "kind").get<std::string>());
    out.part = bipartition_from_string(require(c, "partition").get<std::string>(),
                                       g.num_qubits());
    out.state = GraphDiagonalState(g, vec_from_json(require(c, "lambda"), g.num_qubits()));
    d.components.push_back(std::move(out));
  }
  return d;
}

Json verdict_to_json(const Verdict& v, const GraphDiagonalState& s) {
  Json out;
  switch (v.kind) {
    case VerdictKind::Gme: out["verdict"] = "GME"; break;
    case VerdictKind::Biseparable: out["verdict"] = "BISEPARABLE"; break;
    case VerdictKind::Inconclusive: out["verdict"] = "INCONCLUSIVE"; break;
  }
  if (v.threshold) out["threshold"] = to_string(*v.threshold);
  if (!v.reason.empty()) out["reason"] = v.reason;
  if (v.witness) {
    out["witness"] = witness_to_json(*v.witness);
    out["witness_value"] = to_string(v.evaluation);
  }
  if (v.decomposition) out["decomposition"] = decomposition_to_json(*v.decomposition, s.graph);
  return out;
}

Json lp_certificate_to_json(const LpCertificate& c, const Graph& g) {
  int n = g.num_qubits();
  Json out{{"feasible", c.feasible}};
  if (c.feasible) {
    Json comps = Json::array();
    for (const PartitionComponent& pc : c.components)
      comps.push_back(Json{{"partition", pc.part.str()}, {"x", vec_to_json(pc.x, n)}});
    out["components"] = comps;
  } else {
    out["dual"] = vec_to_json(c.dual_w, n);
    Json sup = Json::array();
    for (const DualSupport& ds : c.supports)
      sup.push_back(Json{{"partition", ds.part.str()},
                         {"a", vec_to_json(ds.a, n)},
                         {"b", vec_to_json(ds.b, n)}});
    out["supports"] = sup;
  }
  return out;
}

LpCertificate lp_certificate_from_json(const Json& j, const Graph& g) {
  int n = g.num_qubits();
  LpCertificate c;
  c.feasible = require(j, "feasible").get<bool>();
  if (c.feasible) {
    for (const Json& pc : require(j, "components"))
      c.components.push_back(PartitionComponent{
          bipartition_from_string(require(pc, "partition").get<std::string>(), n),
          vec_from_json(require(pc, "x"), n)});
  } else {
    c.dual_w = vec_from_json(require(j, "dual"), n);
    for (const Json& ds : require(j, "supports"))
      c.supports.push_back(DualSupport{
          bipartition_from_string(require(ds, "partition").get<std::string>(), n),
          vec_from_json(require(ds, "a"), n), vec_from_json(require(ds, "b"), n)});
  }
  return c;
}

}  // namespace graphsep
