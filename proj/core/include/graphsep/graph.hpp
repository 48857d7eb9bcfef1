#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "graphsep/pauli.hpp"

namespace graphsep {

/// Graph-basis label: n sign bits, bit i-1 set means qubit i carries a '-'
/// eigenvalue. Label 0 is the graph state itself.
using BasisLabel = std::uint32_t;

constexpr int kMaxQubits = 8;

/// Simple undirected graph on up to 8 qubits, adjacency kept as per-vertex
/// neighbour bitmasks.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, const std::vector<std::pair<int, int>>& edges);  // 1-based endpoints

  int num_qubits() const { return n_; }
  int dim() const { return 1 << n_; }

  bool has_edge(int i, int j) const;        // 1-based
  void toggle_edge(int i, int j);           // 1-based
  std::uint32_t neighbourhood(int i) const { return adj_[i - 1]; }
  int degree(int i) const;

  std::vector<std::pair<int, int>> edges() const;

  bool operator==(const Graph& other) const = default;
  /// Dense encoding (n plus upper-triangle bits) for set membership.
  std::uint64_t encode() const;

  bool is_connected() const;
  /// True when vertex `center` (1-based) is adjacent to every other vertex
  /// and no other edges exist (GHZ graph).
  bool is_star(int* center = nullptr) const;

 private:
  int n_ = 0;
  std::vector<std::uint32_t> adj_;
};

struct Bipartition {
  int n = 0;
  std::uint32_t mask = 0;  // side M; canonical form excludes qubit 1

  Bipartition() = default;
  Bipartition(int n_qubits, std::uint32_t m);
  /// From 1-based qubit indices for side M.
  Bipartition(int n_qubits, const std::vector<int>& side);

  Bipartition canonical() const;
  bool contains(int qubit) const { return (mask >> (qubit - 1)) & 1u; }
  int side_size() const;
  std::vector<int> side_qubits() const;
  std::string str() const;  // e.g. "AD|BC"

  bool operator==(const Bipartition& other) const = default;
};

/// All canonical bipartitions (side not containing qubit 1), nonempty both sides.
std::vector<Bipartition> all_bipartitions(int n);

PauliString stabilizer_generator(const Graph& g, int i);  // 1-based

/// Ordered product of g_i over the set bits of `subset` (bit i-1 <-> qubit i).
PauliString group_element(const Graph& g, std::uint32_t subset);

Graph local_complement(const Graph& g, int a);  // 1-based

/// Graph-basis label relabeling induced by local complementation at `a`:
/// signs on N(a) flip iff the label's sign at a is '-'.
BasisLabel label_transform_lc(const Graph& g, int a, BasisLabel label);

/// Number of Bell pairs across M|M~ in the pure graph state
/// (GF(2) rank of the off-diagonal adjacency block).
int cut_rank(const Graph& g, const Bipartition& m);

/// Closure of g under local complementation at every vertex. Requires n <= 6.
std::vector<Graph> lc_orbit(const Graph& g);

/// Searches the LC orbit for `target`; on success fills `sequence` with the
/// 1-based vertices to complement (in application order) mapping g to target.
bool lc_sequence_to(const Graph& g, const Graph& target, std::vector<int>& sequence);

/// Named built-in graphs: "GHZ3", "GHZ4", ..., "C4", "C5", "C6", "R5", "Y5", "Y6", "Y{N}".
Graph builtin_graph(const std::string& name);

/// Y_N family: line 1-2-3 plus centre 3 fanned out to 4..N.
Graph y_graph(int n);
Graph path_graph(int n);
Graph ring_graph(int n);
Graph star_graph(int n);

}  // namespace graphsep
