#include "graphsep/state.hpp"

#include <bit>
#include <stdexcept>

namespace graphsep {

std::string label_str(BasisLabel k, int n) {
  std::string out(n, '+');
  for (int i = 0; i < n; ++i)
    if ((k >> i) & 1u) out[i] = '-';
  return out;
}

BasisLabel parse_label(const std::string& signs) {
  BasisLabel k = 0;
  for (std::size_t i = 0; i < signs.size(); ++i) {
    if (signs[i] == '-') k |= 1u << i;
    else if (signs[i] != '+') throw std::invalid_argument("bad sign string: " + signs);
  }
  return k;
}

GraphDiagonalState::GraphDiagonalState(Graph g, RationalVec w)
    : graph(std::move(g)), weights(std::move(w)) {
  if (static_cast<int>(weights.size()) != graph.dim())
    throw std::invalid_argument("weight vector length != 2^n");
}

void GraphDiagonalState::check_valid(bool require_normalized) const {
  for (const auto& w : weights)
    if (w < 0) throw std::invalid_argument("negative weight");
  Rational t = total();
  if (require_normalized ? (t != 1) : (t > 1))
    throw std::invalid_argument("weights do not form a probability distribution");
}

GraphDiagonalState white_noise(const Graph& g, const Rational& p) {
  if (p < 0 || p > 1) throw std::invalid_argument("white_noise: p out of [0,1]");
  Rational floor = (1 - p) / g.dim();
  RationalVec w(g.dim(), floor);
  w[0] += p;
  return GraphDiagonalState(g, std::move(w));
}

GraphDiagonalState uniform_state(const Graph& g) { return white_noise(g, 0); }

GraphDiagonalState point_mass(const Graph& g, BasisLabel k) {
  RationalVec w(g.dim(), Rational(0));
  w[k] = 1;
  return GraphDiagonalState(g, std::move(w));
}

GraphDiagonalState flip_signs(const GraphDiagonalState& s, BasisLabel t) {
  RationalVec w(s.dim());
  for (int k = 0; k < s.dim(); ++k) w[k] = s.weights[k ^ t];
  return GraphDiagonalState(s.graph, std::move(w));
}

GraphDiagonalState apply_local_complement(const GraphDiagonalState& s, int a) {
  RationalVec w(s.dim());
  for (BasisLabel k = 0; k < static_cast<BasisLabel>(s.dim()); ++k)
    w[label_transform_lc(s.graph, a, k)] = s.weights[k];
  return GraphDiagonalState(local_complement(s.graph, a), std::move(w));
}

std::vector<std::pair<Rational, PauliString>> basis_projector(const Graph& g, BasisLabel k) {
  std::vector<std::pair<Rational, PauliString>> terms;
  Rational scale(1, g.dim());
  scale.canonicalize();
  terms.reserve(g.dim());
  for (std::uint32_t subset = 0; subset < static_cast<std::uint32_t>(g.dim()); ++subset)
    terms.emplace_back(character(k, subset) * scale, group_element(g, subset));
  return terms;
}

GraphDiagonalState translate(const GraphDiagonalState& s, int shift) {
  int n = s.num_qubits();
  int r = ((shift % n) + n) % n;
  // permutation q -> q + r (mod n), 0-based internally
  auto perm_ok = [&] {
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        int pi = (i - 1 + r) % n + 1, pj = (j - 1 + r) % n + 1;
        if (s.graph.has_edge(i, j) != s.graph.has_edge(pi, pj)) return false;
      }
    return true;
  };
  if (!perm_ok()) throw std::invalid_argument("translate: shift is not a graph automorphism");
  RationalVec w(s.dim());
  for (BasisLabel k = 0; k < static_cast<BasisLabel>(s.dim()); ++k) {
    BasisLabel pk = 0;
    for (int q = 0; q < n; ++q)
      if ((k >> q) & 1u) pk |= 1u << ((q + r) % n);
    w[pk] = s.weights[k];
  }
  return GraphDiagonalState(s.graph, std::move(w));
}

}  // namespace graphsep
