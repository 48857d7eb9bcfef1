#pragma once

#include <optional>
#include <vector>

#include "graphsep/classifier.hpp"
#include "graphsep/transfer.hpp"

namespace graphsep {

/// One summand of a PPT mixture: x >= 0 with a nonnegative partial-transpose
/// diagonal across `part` (unnormalized; the x vectors over all partitions
/// sum to the state's weight vector).
struct PartitionComponent {
  Bipartition part;
  RationalVec x;
};

/// Infeasibility support for one partition: the dual vector decomposes as
/// w = a + T_part b with a, b >= 0, proving w is nonnegative on every state
/// that is PPT across `part`.
struct DualSupport {
  Bipartition part;
  RationalVec a, b;
};

/// Outcome of the PPT-mixture linear program.
struct LpCertificate {
  bool feasible = false;
  std::vector<PartitionComponent> components;  // feasible: sums to the weights
  RationalVec dual_w;                          // infeasible: w . lambda < 0
  std::vector<DualSupport> supports;           // infeasible: one per partition
};

/// Decides exactly whether the weight vector splits as a sum of per-partition
/// components that are entrywise nonnegative with nonnegative
/// partial-transpose diagonals. Solved by exact-rational simplex with column
/// generation: the master program runs over certified component columns and a
/// small pricing program per partition proves optimality of an infeasibility
/// dual. Both answers come with re-checkable certificates.
LpCertificate is_ppt_mixture(const GraphDiagonalState& s, const std::vector<Bipartition>& parts);

/// Re-verifies an LP certificate against the state from scratch.
bool verify_lp_certificate(const GraphDiagonalState& s, const std::vector<Bipartition>& parts,
                           const LpCertificate& cert, std::string* why = nullptr);

/// Canonical bipartitions whose cut carries exactly one Bell pair.
std::vector<Bipartition> one_bp_partitions(const Graph& g);

/// True when some local-complementation image of the graph has a vertex on
/// the three-qubit side of a 2-vs-3 cut with exactly one neighbour inside its
/// own side (the decoupling condition reducing the cut to four qubits).
/// On success, `sequence` receives the complementation vertices in order.
bool has_decoupling_vertex(const Graph& g, const Bipartition& m,
                           std::vector<int>* sequence = nullptr);

/// Complete decision for Y-shaped-graph-diagonal states: the PPT-mixture LP
/// restricted to one-Bell-pair cuts is necessary and sufficient, so Feasible
/// upgrades to Biseparable and Infeasible to Gme (with a dual witness).
Verdict classify_yn(const GraphDiagonalState& s);

/// Builds a validate_witness-valid witness from an infeasible LP outcome. The
/// Farkas dual is decomposable across every cut its supports cover; entries
/// off the state's support are lifted so the decompositions hold everywhere.
/// When the certificate lacks supports for some bipartitions (a restricted
/// cut list was used), the full-program dual is recomputed internally. Throws
/// if the certificate is feasible.
DiagonalWitness dual_witness(const GraphDiagonalState& s, const LpCertificate& cert);

}  // namespace graphsep
