#include "graphsep/witness.hpp"

#include <stdexcept>

#include "graphsep/simplex.hpp"
#include "graphsep/transfer.hpp"

namespace graphsep {

namespace {

Rational half() { return Rational(1, 2); }

BasisLabel rotate_label(BasisLabel k, int shift, int n) {
  BasisLabel out = 0;
  for (int q = 0; q < n; ++q)
    if ((k >> q) & 1u) out |= 1u << ((q + shift) % n);
  return out;
}

void require_cluster4(const Graph& g) {
  if (g != path_graph(4)) throw std::invalid_argument("witness requires the four-qubit cluster graph");
}

}  // namespace

Rational evaluate(const DiagonalWitness& w, const GraphDiagonalState& s) {
  if (w.graph != s.graph) throw std::invalid_argument("evaluate: witness/state graph mismatch");
  Rational acc = 0;
  for (int k = 0; k < w.dim(); ++k) acc += w.coeffs[k] * s.weights[k];
  return acc;
}

namespace {

bool entrywise_nonnegative(const RationalVec& v) {
  for (const Rational& x : v)
    if (x < 0) return false;
  return true;
}

/// Feasibility of coeffs = p + T q with p, q >= 0 across one cut.
bool decomposable_across(const DiagonalWitness& w, const Bipartition& m) {
  const TransferMatrix& t = cached_transfer(w.graph, m);
  // Cheap sufficient checks: p = coeffs, q = 0 or p = 0, q = T coeffs
  // (the transfer matrix is an involution).
  if (entrywise_nonnegative(w.coeffs)) return true;
  RationalVec image = t.apply(w.coeffs);
  if (entrywise_nonnegative(image)) return true;
  int dim = w.dim();
  std::vector<RationalVec> rows(dim, RationalVec(2 * dim, Rational(0)));
  for (int r = 0; r < dim; ++r) {
    for (int j = 0; j < dim; ++j) rows[r][j] = t.entry(r, j);
    rows[r][dim + r] = 1;
  }
  LpResult res = solve_lp(std::move(rows), w.coeffs, RationalVec(2 * dim, Rational(0)));
  return res.status == LpStatus::Optimal;
}

}  // namespace

WitnessReport validate_witness(const DiagonalWitness& w) {
  WitnessReport report;
  for (const auto& m : all_bipartitions(w.graph.num_qubits())) {
    if (!decomposable_across(w, m)) {
      report.violation =
          "no positive + transposed-positive split across " + m.str();
      return report;
    }
  }
  report.valid = true;
  return report;
}

DiagonalWitness flip_witness(const DiagonalWitness& w, BasisLabel t) {
  DiagonalWitness out{w.graph, RationalVec(w.dim())};
  for (int k = 0; k < w.dim(); ++k) out.coeffs[k] = w.coeffs[k ^ t];
  return out;
}

DiagonalWitness w1_witness(const Graph& g, BasisLabel center) {
  require_cluster4(g);
  DiagonalWitness w{g, RationalVec(16, half())};
  w.coeffs[center] -= 1;
  // Labels differing from the center in both end signs (qubits 1 and 4)
  // cannot pair separably with it; they carry the -1/2 block.
  for (BasisLabel k = 0; k < 16; ++k) {
    BasisLabel d = k ^ center;
    if ((d & 0b0001u) && (d & 0b1000u)) w.coeffs[k] -= half();
  }
  return w;
}

DiagonalWitness w2_witness(const Graph& g, BasisLabel l1, BasisLabel l2) {
  require_cluster4(g);
  BasisLabel d = l1 ^ l2;
  if (!((d & 0b0001u) && (d & 0b1000u)))
    throw std::invalid_argument("w2_witness: labels must differ in both end signs");
  DiagonalWitness w{g, RationalVec(16, half())};
  w.coeffs[l1] -= 1;
  w.coeffs[l2] -= 1;
  return w;
}

DiagonalWitness y5_witness() {
  DiagonalWitness w{y_graph(5), RationalVec(32, half())};
  w.coeffs[0] -= 1;
  // -1/2 on labels with a minus on qubit 1 unless both branch ends
  // (qubits 4, 5) are plus: these are the pairs excluded from the
  // separable-pair rule on the Y graph.
  for (BasisLabel k = 0; k < 32; ++k)
    if ((k & 0b00001u) && (k & 0b11000u)) w.coeffs[k] -= half();
  return w;
}

DiagonalWitness c5_witness() {
  DiagonalWitness w{path_graph(5), RationalVec(32, half())};
  w.coeffs[0] -= 1;
  for (BasisLabel k = 0; k < 32; ++k) {
    bool a1 = k & 0b00001u, a2 = k & 0b00010u, a4 = k & 0b01000u, a5 = k & 0b10000u;
    if (a1 && a5) w.coeffs[k] -= half();
    if (!a1 && a2 && a5) w.coeffs[k] -= Rational(1, 4);
    if (a1 && a4 && !a5) w.coeffs[k] -= Rational(1, 4);
  }
  return w;
}

DiagonalWitness r5_witness() {
  DiagonalWitness w{ring_graph(5), RationalVec(32, Rational(0))};
  const char* plus3[] = {"++++-", "++-+-", "++---"};
  const char* plus1[] = {"+++--", "+-+--", "+----"};
  for (const char* seed : plus3)
    for (int r = 0; r < 5; ++r) w.coeffs[rotate_label(parse_label(seed), r, 5)] += 3;
  for (const char* seed : plus1)
    for (int r = 0; r < 5; ++r) w.coeffs[rotate_label(parse_label(seed), r, 5)] += 1;
  w.coeffs[parse_label("-----")] -= 1;
  w.coeffs[0] -= 3;
  return w;
}

DiagonalWitness ghz_witness(const Graph& g, BasisLabel center) {
  if (!g.is_star()) throw std::invalid_argument("ghz_witness requires a star graph");
  DiagonalWitness w{g, RationalVec(g.dim(), half())};
  w.coeffs[center] -= 1;
  return w;
}

DiagonalWitness named_witness(const std::string& name) {
  if (name == "w1") return w1_witness(path_graph(4));
  if (name == "w2") return w2_witness(path_graph(4), 0, parse_label("-++-"));
  if (name == "y5") return y5_witness();
  if (name == "c5") return c5_witness();
  if (name == "r5") return r5_witness();
  if (name.size() == 4 && name.substr(0, 3) == "ghz")
    return ghz_witness(star_graph(name[3] - '0'));
  throw std::invalid_argument("unknown witness name: " + name);
}

}  // namespace graphsep
