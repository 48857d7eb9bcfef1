#include "graphsep/transfer.hpp"

#include <bit>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace graphsep {

void walsh_hadamard(RationalVec& v) {
  std::size_t n = v.size();
  for (std::size_t len = 1; len < n; len <<= 1) {
    for (std::size_t i = 0; i < n; i += len << 1) {
      for (std::size_t j = i; j < i + len; ++j) {
        Rational a = v[j], b = v[j + len];
        v[j] = a + b;
        v[j + len] = a - b;
      }
    }
  }
}

TransferMatrix::TransferMatrix(const Graph& g, const Bipartition& m) : graph_(g), part_(m) {
  if (g.num_qubits() > kMaxQubits)
    throw std::invalid_argument("transfer_matrix: dimension overflow");
  if (m.n != g.num_qubits()) throw std::invalid_argument("transfer_matrix: size mismatch");
  int dim = g.dim();
  signature_.resize(dim);
  // Transposition fixes X and Z and negates Y, so the stabilizer-group element
  // g_S picks up (-1) per Y letter inside M. Its X part is S, its Z part is
  // the GF(2) image of S under the adjacency matrix.
  for (std::uint32_t s = 0; s < static_cast<std::uint32_t>(dim); ++s) {
    std::uint32_t z = 0;
    for (int i = 1; i <= g.num_qubits(); ++i)
      if ((s >> (i - 1)) & 1u) z ^= g.neighbourhood(i);
    std::uint32_t y_in_m = s & z & m.mask;
    signature_[s] = (std::popcount(y_in_m) % 2 == 0) ? 1 : -1;
  }
  // kernel = 2^-n * WHT(signature)
  kernel_.resize(dim);
  for (int d = 0; d < dim; ++d) kernel_[d] = signature_[d];
  walsh_hadamard(kernel_);
  Rational scale(1, dim);
  scale.canonicalize();
  for (auto& x : kernel_) x *= scale;
}

RationalVec TransferMatrix::apply(const RationalVec& v) const {
  if (v.size() != kernel_.size()) throw std::invalid_argument("transfer apply: size mismatch");
  // conv(kernel, v) via WHT: T v = 2^-n * WHT(signature .* WHT(v))
  RationalVec w = v;
  walsh_hadamard(w);
  for (std::size_t i = 0; i < w.size(); ++i)
    if (signature_[i] < 0) w[i] = -w[i];
  walsh_hadamard(w);
  Rational scale(1, static_cast<unsigned long>(w.size()));
  scale.canonicalize();
  for (auto& x : w) x *= scale;
  return w;
}

bool TransferMatrix::image_nonnegative(const RationalVec& v) const {
  for (const auto& x : apply(v))
    if (x < 0) return false;
  return true;
}

TransferMatrix transfer_matrix(const Graph& g, const Bipartition& m) {
  return TransferMatrix(g, m);
}

const TransferMatrix& cached_transfer(const Graph& g, const Bipartition& m) {
  static std::mutex mu;
  static std::map<std::pair<std::uint64_t, std::uint32_t>, std::unique_ptr<TransferMatrix>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(g.encode(), m.mask);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, std::make_unique<TransferMatrix>(g, m)).first;
  return *it->second;
}

}  // namespace graphsep
