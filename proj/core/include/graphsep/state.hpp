#pragma once

#include <bit>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "graphsep/graph.hpp"
#include "graphsep/rational.hpp"

namespace graphsep {

/// Sign-string rendering of a label, qubit 1 first: 0b0110 on 4 qubits -> "+--+".
std::string label_str(BasisLabel k, int n);
BasisLabel parse_label(const std::string& signs);

/// Mixed state diagonal in the graph basis, weights exact rationals.
/// Intermediate proof machinery may hold unnormalized states (sum <= 1 after
/// scaling); `require_normalized` is enforced at API boundaries.
struct GraphDiagonalState {
  Graph graph;
  RationalVec weights;  // length 2^n, indexed by BasisLabel

  GraphDiagonalState() = default;
  GraphDiagonalState(Graph g, RationalVec w);

  int num_qubits() const { return graph.num_qubits(); }
  int dim() const { return graph.dim(); }
  Rational total() const { return vec_sum(weights); }
  bool is_normalized() const { return total() == 1; }
  void check_valid(bool require_normalized = true) const;

  bool operator==(const GraphDiagonalState& other) const = default;
};

/// p * |G><G| + (1-p) * 1/2^n.
GraphDiagonalState white_noise(const Graph& g, const Rational& p);

GraphDiagonalState uniform_state(const Graph& g);
GraphDiagonalState point_mass(const Graph& g, BasisLabel k);

/// Local Z conjugation: weights permuted by XOR with t.
GraphDiagonalState flip_signs(const GraphDiagonalState& s, BasisLabel t);

/// Weight relabeling under local complementation at vertex a: the returned
/// state lives on local_complement(graph, a) and is locally equivalent.
GraphDiagonalState apply_local_complement(const GraphDiagonalState& s, int a);

/// Expansion |Gamma_k><Gamma_k| = 2^-n sum_S chi_k(S) g_S.
std::vector<std::pair<Rational, PauliString>> basis_projector(const Graph& g, BasisLabel k);

/// Cyclic qubit relabeling for ring graphs; errors unless the shift is a
/// graph automorphism.
GraphDiagonalState translate(const GraphDiagonalState& s, int shift);

/// chi_k(S) = prod_{i in S} a_k^(i) = (-1)^{|k & S|}.
inline int character(BasisLabel k, std::uint32_t subset) {
  return (std::popcount(k & subset) % 2 == 0) ? 1 : -1;
}

}  // namespace graphsep
