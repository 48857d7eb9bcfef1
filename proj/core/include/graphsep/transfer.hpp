#pragma once

#include "graphsep/graph.hpp"
#include "graphsep/rational.hpp"

namespace graphsep {

/// Linear map sending a graph-diagonal weight vector to the graph-basis
/// diagonal of the state's partial transpose across M. The map is an
/// XOR-convolution: T_{jk} depends only on j^k, so applications run as a
/// Walsh-Hadamard transform instead of a dense mat-vec.
class TransferMatrix {
 public:
  TransferMatrix(const Graph& g, const Bipartition& m);

  const Graph& graph() const { return graph_; }
  const Bipartition& bipartition() const { return part_; }
  int dim() const { return static_cast<int>(kernel_.size()); }

  /// Entry T_{jk}, an integer multiple of 2^{1-n} in [-1, 1].
  const Rational& entry(int j, int k) const { return kernel_[j ^ k]; }

  /// (T v)_j = <Gamma_j| rho^{T_M} |Gamma_j> for rho with diagonal v.
  RationalVec apply(const RationalVec& v) const;

  /// True iff every entry of apply(v) is >= 0 (exact PPT test).
  bool image_nonnegative(const RationalVec& v) const;

 private:
  Graph graph_;
  Bipartition part_;
  RationalVec kernel_;          // kernel_[d] = T_{jk} for d = j^k
  std::vector<int> signature_;  // +-1 spectrum in the Walsh basis
};

TransferMatrix transfer_matrix(const Graph& g, const Bipartition& m);

/// Shared memoized construction keyed by (graph, partition); thread-safe.
/// The returned reference stays valid for the program lifetime.
const TransferMatrix& cached_transfer(const Graph& g, const Bipartition& m);

/// In-place Walsh-Hadamard transform (unnormalized), exact.
void walsh_hadamard(RationalVec& v);

}  // namespace graphsep
