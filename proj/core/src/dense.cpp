#include "graphsep/dense.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace graphsep {

namespace {

using Complex = std::complex<double>;

Complex phase_i_pow(int e) {
  switch (((e % 4) + 4) % 4) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

}  // namespace

double DenseOperator::trace_real() const {
  double t = 0;
  for (int r = 0; r < dim; ++r) t += at(r, r).real();
  return t;
}

double DenseOperator::hermiticity_defect() const {
  double d = 0;
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) d = std::max(d, std::abs(at(r, c) - std::conj(at(c, r))));
  return d;
}

DenseOperator pauli_to_dense(const PauliString& p) {
  if (p.n > kMaxQubits) throw std::invalid_argument("pauli_to_dense: dimension overflow");
  int dim = 1 << p.n;
  DenseOperator out(dim);
  // Column c maps to row c ^ x_mask with amplitude i^{#Y} * (-1)^{<z, c>}
  // times the stored phase (single pass instead of an explicit Kronecker).
  Complex base = phase_i_pow(p.phase_exp + std::popcount(p.y_mask()));
  for (int c = 0; c < dim; ++c) {
    int r = c ^ static_cast<int>(p.x_mask);
    int sign = (std::popcount(static_cast<std::uint32_t>(c) & p.z_mask) % 2 == 0) ? 1 : -1;
    // Y's i-factor above counts XZ order; acting on |c>, Z sees the column index.
    out.at(r, c) = base * static_cast<double>(sign);
  }
  return out;
}

std::vector<double> graph_state_vector(const Graph& g, BasisLabel k) {
  int n = g.num_qubits();
  int dim = 1 << n;
  double amp = std::pow(2.0, -n / 2.0);
  std::vector<double> v(dim);
  for (int x = 0; x < dim; ++x) {
    int edge_count = 0;
    for (auto [i, j] : g.edges())
      if (((x >> (i - 1)) & 1) && ((x >> (j - 1)) & 1)) ++edge_count;
    int zsign = std::popcount(static_cast<std::uint32_t>(x) & k);
    v[x] = ((edge_count + zsign) % 2 == 0 ? amp : -amp);
  }
  return v;
}

DenseOperator state_to_dense(const GraphDiagonalState& s) {
  if (s.num_qubits() > 6) throw std::invalid_argument("state_to_dense: dimension overflow");
  int dim = s.dim();
  DenseOperator out(dim);
  for (BasisLabel k = 0; k < static_cast<BasisLabel>(dim); ++k) {
    if (s.weights[k] == 0) continue;
    double w = s.weights[k].get_d();
    auto v = graph_state_vector(s.graph, k);
    for (int r = 0; r < dim; ++r)
      for (int c = 0; c < dim; ++c) out.at(r, c) += w * v[r] * v[c];
  }
  return out;
}

DenseOperator partial_transpose(const DenseOperator& op, const Bipartition& m) {
  DenseOperator out(op.dim);
  int mask = static_cast<int>(m.mask);
  for (int r = 0; r < op.dim; ++r)
    for (int c = 0; c < op.dim; ++c) {
      int rr = (r & ~mask) | (c & mask);
      int cc = (c & ~mask) | (r & mask);
      out.at(rr, cc) = op.at(r, c);
    }
  return out;
}

double min_eigenvalue(const DenseOperator& op) {
  if (op.hermiticity_defect() > 1e-10) throw std::invalid_argument("min_eigenvalue: not Hermitian");
  int dim = op.dim;
  DenseOperator m = op;
  // symmetrize away float noise
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) {
      Complex avg = 0.5 * (m.at(r, c) + std::conj(m.at(c, r)));
      m.at(r, c) = avg;
    }
  const int max_sweeps = 100;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double off = 0;
    for (int p = 0; p < dim; ++p)
      for (int q = p + 1; q < dim; ++q) off = std::max(off, std::abs(m.at(p, q)));
    if (off < 1e-14) break;
    for (int p = 0; p < dim; ++p) {
      for (int q = p + 1; q < dim; ++q) {
        Complex z = m.at(p, q);
        double az = std::abs(z);
        if (az < 1e-18) continue;
        Complex eiphi = z / az;
        double app = m.at(p, p).real();
        double aqq = m.at(q, q).real();
        double tau = (aqq - app) / (2.0 * az);
        double t = (tau >= 0 ? -1.0 : 1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        double c = 1.0 / std::sqrt(1.0 + t * t);
        double s = t * c;
        // J = [[c, -s],[s e^{-i phi}, c e^{-i phi}]] on the (p,q) plane
        Complex jqp = s * std::conj(eiphi);
        Complex jqq = c * std::conj(eiphi);
        for (int k = 0; k < dim; ++k) {  // A <- A J
          Complex akp = m.at(k, p), akq = m.at(k, q);
          m.at(k, p) = akp * c + akq * jqp;
          m.at(k, q) = akp * (-s) + akq * jqq;
        }
        for (int k = 0; k < dim; ++k) {  // A <- J^dag A
          Complex apk = m.at(p, k), aqk = m.at(q, k);
          m.at(p, k) = apk * c + aqk * std::conj(jqp);
          m.at(q, k) = apk * (-s) + aqk * std::conj(jqq);
        }
      }
    }
  }
  double lo = m.at(0, 0).real();
  for (int r = 1; r < dim; ++r) lo = std::min(lo, m.at(r, r).real());
  return lo;
}

bool is_ppt(const GraphDiagonalState& s, const Bipartition& m, double tol) {
  if (s.num_qubits() > 6) throw std::invalid_argument("is_ppt: dimension overflow");
  return min_eigenvalue(partial_transpose(state_to_dense(s), m)) >= -tol;
}

int schmidt_rank(const Graph& g, const Bipartition& m) {
  if (g.num_qubits() > 6) throw std::invalid_argument("schmidt_rank: dimension overflow");
  auto v = graph_state_vector(g);
  int n = g.num_qubits();
  std::vector<int> rows_bits, cols_bits;
  for (int q = 0; q < n; ++q) ((m.mask >> q) & 1u ? rows_bits : cols_bits).push_back(q);
  int nr = 1 << rows_bits.size(), nc = 1 << cols_bits.size();
  std::vector<RationalVec> mat(nr, RationalVec(nc));
  for (int r = 0; r < nr; ++r)
    for (int c = 0; c < nc; ++c) {
      int x = 0;
      for (std::size_t b = 0; b < rows_bits.size(); ++b)
        if ((r >> b) & 1) x |= 1 << rows_bits[b];
      for (std::size_t b = 0; b < cols_bits.size(); ++b)
        if ((c >> b) & 1) x |= 1 << cols_bits[b];
      mat[r][c] = (v[x] > 0) ? 1 : -1;
    }
  // exact rank over the rationals
  int rank = 0;
  for (int col = 0; col < nc && rank < nr; ++col) {
    int pivot = -1;
    for (int r = rank; r < nr; ++r)
      if (mat[r][col] != 0) { pivot = r; break; }
    if (pivot < 0) continue;
    std::swap(mat[pivot], mat[rank]);
    for (int r = 0; r < nr; ++r) {
      if (r == rank || mat[r][col] == 0) continue;
      Rational f = mat[r][col] / mat[rank][col];
      for (int c2 = col; c2 < nc; ++c2) mat[r][c2] -= f * mat[rank][c2];
    }
    ++rank;
  }
  return rank;
}

DepolarizeResult depolarize(const DenseOperator& rho, const Graph& g) {
  int dim = g.dim();
  if (rho.dim != dim) throw std::invalid_argument("depolarize: dimension mismatch");
  if (rho.hermiticity_defect() > 1e-9) throw std::invalid_argument("depolarize: not Hermitian");
  if (std::abs(rho.trace_real() - 1.0) > 1e-9) throw std::invalid_argument("depolarize: trace != 1");
  if (min_eigenvalue(rho) < -1e-9) throw std::invalid_argument("depolarize: negative eigenvalue");

  DepolarizeResult out;
  out.fidelities.resize(dim);
  RationalVec weights(dim, Rational(0));
  bool all_exact = true;
  for (BasisLabel k = 0; k < static_cast<BasisLabel>(dim); ++k) {
    auto v = graph_state_vector(g, k);
    double fid = 0;
    for (int r = 0; r < dim; ++r)
      for (int c = 0; c < dim; ++c) fid += v[r] * (rho.at(r, c) * v[c]).real();
    out.fidelities[k] = fid;
    // continued-fraction reconstruction with bounded denominator
    double x = fid;
    long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double y = x;
    for (int it = 0; it < 64; ++it) {
      long a = static_cast<long>(std::floor(y));
      long p2 = a * p1 + p0, q2 = a * q1 + q0;
      if (q2 > 10'000'000) break;
      p0 = p1; q0 = q1; p1 = p2; q1 = q2;
      double frac = y - static_cast<double>(a);
      if (std::abs(static_cast<double>(p1) / q1 - x) < 1e-13 || frac < 1e-13) break;
      y = 1.0 / frac;
    }
    Rational r(p1, q1);
    r.canonicalize();
    if (r < 0 && r > Rational(-1, 1'000'000'000)) r = 0;
    if (std::abs(r.get_d() - fid) > 1e-9 || r < 0) all_exact = false;
    weights[k] = r < 0 ? Rational(0) : r;
  }
  if (vec_sum(weights) != 1) all_exact = false;
  if (all_exact) {
    out.state = GraphDiagonalState(g, std::move(weights));
    out.exact = true;
  } else {
    // carry the float fidelities as best-effort rationals, flagged inexact
    RationalVec approx(dim);
    for (int k = 0; k < dim; ++k) {
      Rational r(static_cast<long>(std::llround(std::max(0.0, out.fidelities[k]) * (1ll << 40))),
                 static_cast<unsigned long>(1ll << 40));
      r.canonicalize();
      approx[k] = r;
    }
    out.state = GraphDiagonalState(g, std::move(approx));
    out.exact = false;
  }
  return out;
}

}  // namespace graphsep
