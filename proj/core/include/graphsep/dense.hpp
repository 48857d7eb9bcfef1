#pragma once

#include <complex>
#include <vector>

#include "graphsep/state.hpp"

namespace graphsep {

/// Brute-force ground truth. Everything here is float arithmetic over small
/// dense matrices; the exact decision path never depends on it.
struct DenseOperator {
  int dim = 0;
  std::vector<std::complex<double>> a;  // row-major dim x dim

  DenseOperator() = default;
  explicit DenseOperator(int d) : dim(d), a(static_cast<std::size_t>(d) * d) {}

  std::complex<double>& at(int r, int c) { return a[static_cast<std::size_t>(r) * dim + c]; }
  const std::complex<double>& at(int r, int c) const {
    return a[static_cast<std::size_t>(r) * dim + c];
  }

  double trace_real() const;
  double hermiticity_defect() const;  // max |a_rc - conj(a_cr)|
};

DenseOperator pauli_to_dense(const PauliString& p);
DenseOperator state_to_dense(const GraphDiagonalState& s);

/// Pure graph-state amplitude vector in the computational basis
/// (entries +-2^{-n/2}), with label-k sign flips applied.
std::vector<double> graph_state_vector(const Graph& g, BasisLabel k = 0);

DenseOperator partial_transpose(const DenseOperator& op, const Bipartition& m);

/// Smallest eigenvalue by cyclic Jacobi rotations; throws on non-Hermitian input.
double min_eigenvalue(const DenseOperator& op);

bool is_ppt(const GraphDiagonalState& s, const Bipartition& m, double tol = 1e-9);

int schmidt_rank(const Graph& g, const Bipartition& m);

struct DepolarizeResult {
  GraphDiagonalState state;
  bool exact = false;                // weights reconstructed as exact rationals
  std::vector<double> fidelities;    // raw float overlaps <Gamma_k|rho|Gamma_k>
};

/// Fidelity projection onto the graph basis of g (the weight-extraction effect
/// of the local depolarization map).
DepolarizeResult depolarize(const DenseOperator& rho, const Graph& g);

}  // namespace graphsep
