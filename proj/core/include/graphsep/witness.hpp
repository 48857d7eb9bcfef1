#pragma once

#include <string>

#include "graphsep/state.hpp"

namespace graphsep {

/// Entanglement witness diagonal in the graph basis:
/// W = sum_k coeffs[k] |Gamma_k><Gamma_k|. A strictly negative expectation
/// value on a state certifies genuine multipartite entanglement, provided the
/// witness passes validate_witness.
struct DiagonalWitness {
  Graph graph;
  RationalVec coeffs;

  int dim() const { return graph.dim(); }
};

/// Exact expectation value sum_k coeffs[k] * lambda_k; throws on graph mismatch.
Rational evaluate(const DiagonalWitness& w, const GraphDiagonalState& s);

struct WitnessReport {
  bool valid = false;
  std::string violation;  // human-readable description of the first failure
};

/// A diagonal witness is valid (nonnegative on every PPT mixture, hence on
/// every biseparable state) when for each bipartition M it splits as
/// W = P + Q^{T_M} with P, Q >= 0. In the graph basis this is the exact dual
/// description of the per-cut PPT cone {v >= 0, T_M v >= 0}, so validity is a
/// small LP feasibility question per cut: coeffs = p + T_M q, p, q >= 0.
WitnessReport validate_witness(const DiagonalWitness& w);

/// Conjugation by local Z flips: coefficients permuted by XOR with t.
/// Validity and the biseparable-nonnegativity property are preserved.
DiagonalWitness flip_witness(const DiagonalWitness& w, BasisLabel t);

/// Four-qubit cluster witness penalizing one basis label together with the
/// half-weighted block of labels that cannot form a separable pair with it
/// (both end signs opposite). coeffs: 1/2 everywhere, -1 on `center`,
/// -1/2 on the four labels whose end signs are both opposite to center's.
DiagonalWitness w1_witness(const Graph& g, BasisLabel center = 0);

/// Four-qubit cluster witness penalizing an inseparable label pair:
/// 1/2 everywhere, -1 on l1 and on l2. Requires l2 to differ from l1 in
/// both end signs (qubits 1 and 4).
DiagonalWitness w2_witness(const Graph& g, BasisLabel l1, BasisLabel l2);

/// Five-qubit witnesses with exact white-noise detection thresholds
/// 9/25 (Y5), 9/25 (C5) and 7/19 (R5). The ring witness is kept in its
/// unnormalized integer-coefficient form; only the sign of the expectation
/// value carries meaning.
DiagonalWitness y5_witness();
DiagonalWitness c5_witness();
DiagonalWitness r5_witness();

/// Star-graph (GHZ-basis) witness: 1/2 everywhere, -1 on `center`.
/// For GHZ-diagonal states this single family is complete.
DiagonalWitness ghz_witness(const Graph& g, BasisLabel center = 0);

/// Lookup by CLI name: "w1", "w2", "y5", "c5", "r5", "ghz3".."ghz8".
DiagonalWitness named_witness(const std::string& name);

}  // namespace graphsep
