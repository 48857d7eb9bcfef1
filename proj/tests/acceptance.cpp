// Acceptance gate: one pass/fail line per criterion, nonzero exit on failure.
#include <chrono>
#include <cstdio>
#include <random>
#include <string>

#include "graphsep/dense.hpp"
#include "graphsep/pptmix.hpp"
#include "graphsep/transfer.hpp"
#include "util.hpp"

using namespace graphsep;

namespace {

int failures = 0;

class Criterion {
 public:
  Criterion(int number, std::string title, double budget_seconds)
      : number_(number), title_(std::move(title)), budget_(budget_seconds),
        start_(std::chrono::steady_clock::now()) {}

  void require(bool ok, const std::string& what) {
    if (!ok && problem_.empty()) problem_ = what;
  }

  ~Criterion() {
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    bool ok = problem_.empty() && secs <= budget_;
    if (!ok) ++failures;
    std::printf("criterion %d [%s]: %s (%.1fs / %.0fs)%s%s\n", number_,
                title_.c_str(), ok ? "PASS" : "FAIL", secs, budget_,
                problem_.empty() ? "" : " - ", problem_.c_str());
    std::fflush(stdout);
  }

 private:
  int number_;
  std::string title_;
  std::string problem_;
  double budget_;
  std::chrono::steady_clock::time_point start_;
};

bool gme_certified(const Verdict& v, const GraphDiagonalState& s) {
  return v.kind == VerdictKind::Gme && v.witness && validate_witness(*v.witness).valid &&
         evaluate(*v.witness, s) < 0;
}

bool bisep_certified(const Verdict& v, const GraphDiagonalState& s) {
  return v.kind == VerdictKind::Biseparable && v.decomposition &&
         verify_decomposition(*v.decomposition, s).ok;
}

const Rational kEps = rational(1, 1000000);

void criterion1() {
  Criterion c(1, "four-qubit cluster threshold, both certificates", 5);
  Graph g = path_graph(4);
  std::vector<Bipartition> parts = all_bipartitions(4);

  GraphDiagonalState at = white_noise(g, rational(5, 13));
  c.require(bisep_certified(classify(at), at), "no verified decomposition at 5/13");
  LpCertificate feas = is_ppt_mixture(at, parts);
  c.require(feas.feasible && verify_lp_certificate(at, parts, feas), "LP disagrees at 5/13");

  GraphDiagonalState above = white_noise(g, rational(5, 13) + kEps);
  c.require(gme_certified(classify(above), above), "no valid witness just above 5/13");
  LpCertificate inf = is_ppt_mixture(above, parts);
  c.require(!inf.feasible && verify_lp_certificate(above, parts, inf),
            "LP disagrees just above 5/13");
}

void criterion2() {
  Criterion c(2, "five-qubit thresholds: Y 9/25, cluster 9/25, ring 7/19", 30);
  struct Family {
    const char* name;
    const char* witness;
    Rational threshold;
  };
  const Family families[] = {{"Y5", "y5", rational(9, 25)},
                             {"C5", "c5", rational(9, 25)},
                             {"R5", "r5", rational(7, 19)}};
  for (const Family& f : families) {
    Graph g = builtin_graph(f.name);
    GraphDiagonalState at = white_noise(g, f.threshold);
    c.require(evaluate(named_witness(f.witness), at) == 0,
              std::string(f.name) + ": witness value not exactly zero at threshold");
    c.require(bisep_certified(classify_white_noise(f.name, f.threshold), at),
              std::string(f.name) + ": no verified decomposition at threshold");
    GraphDiagonalState above = white_noise(g, f.threshold + kEps);
    c.require(gme_certified(classify_white_noise(f.name, f.threshold + kEps), above),
              std::string(f.name) + ": no valid witness just above threshold");
  }
}

void criterion3() {
  Criterion c(3, "six-qubit cluster: 11/43 decomposition, 51/179 witness", 60);
  Graph g = path_graph(6);
  GraphDiagonalState low = white_noise(g, rational(11, 43));
  c.require(bisep_certified(classify_white_noise("C6", rational(11, 43)), low),
            "no verified decomposition at 11/43");
  Rational p = rational(51, 179) + kEps;
  GraphDiagonalState hot = white_noise(g, p);
  c.require(gme_certified(classify_white_noise("C6", p), hot),
            "no valid witness just above 51/179");
}

void criterion4() {
  Criterion c(4, "10^4 random cluster states: closed form vs mixture program", 600);
  std::mt19937_64 rng(0x5eed0004);
  Graph g = path_graph(4);
  std::vector<Bipartition> parts = all_bipartitions(4);
  for (int trial = 0; trial < 10000; ++trial) {
    GraphDiagonalState s = testutil::random_state(g, rng);
    bool closed_form = !c4_condition_violation(s.weights).has_value();
    bool lp = is_ppt_mixture(s, parts).feasible;
    if (closed_form != lp) {
      c.require(false, "disagreement at trial " + std::to_string(trial));
      return;
    }
  }
}

void criterion5() {
  Criterion c(5, "Y graphs: restricted cuts suffice (1000 five-qubit, 200 six-qubit)", 900);
  std::mt19937_64 rng(0x5eed0005);
  for (auto [n, trials] : {std::pair{5, 1000}, std::pair{6, 200}}) {
    Graph g = y_graph(n);
    std::vector<Bipartition> restricted = one_bp_partitions(g);
    std::vector<Bipartition> full = all_bipartitions(n);
    for (int trial = 0; trial < trials; ++trial) {
      GraphDiagonalState s = testutil::random_state(g, rng);
      if (is_ppt_mixture(s, restricted).feasible) continue;  // implies full feasibility
      if (is_ppt_mixture(s, full).feasible) {
        c.require(false, "restricted program missed a mixture, n=" + std::to_string(n) +
                             " trial " + std::to_string(trial));
        return;
      }
    }
  }
}

void criterion6() {
  Criterion c(6, "transfer maps vs dense partial transposes, every cut", 120);
  for (const Graph& g : {path_graph(4), star_graph(4), y_graph(5), path_graph(5), ring_graph(5)}) {
    int dim = g.dim();
    GraphDiagonalState s = white_noise(g, rational(4, 9));
    s.weights[1] += s.weights[dim - 2];
    s.weights[dim - 2] = 0;
    DenseOperator rho = state_to_dense(s);
    std::vector<std::vector<double>> basis;
    for (int k = 0; k < dim; ++k) basis.push_back(graph_state_vector(g, k));
    for (const Bipartition& m : all_bipartitions(g.num_qubits())) {
      const TransferMatrix& t = cached_transfer(g, m);
      Rational rowsum = 0;
      for (int k = 0; k < dim; ++k) {
        rowsum += t.entry(0, k);
        if (t.entry(0, k) != t.entry(k, 0)) c.require(false, "asymmetric kernel");
      }
      if (rowsum != 1) c.require(false, "row sum differs from one");
      if ((1 << cut_rank(g, m)) != schmidt_rank(g, m))
        c.require(false, "cut rank vs Schmidt rank mismatch");
      DenseOperator pt = partial_transpose(rho, m);
      RationalVec image = t.apply(s.weights);
      double worst = 0;
      for (int j = 0; j < dim; ++j) {
        double val = 0;
        for (int r = 0; r < dim; ++r)
          for (int col = 0; col < dim; ++col)
            val += basis[j][r] * pt.at(r, col).real() * basis[j][col];
        worst = std::max(worst, std::abs(val - image[j].get_d()));
      }
      if (worst >= 1e-10) c.require(false, "dense deviation " + std::to_string(worst));
    }
  }
}

void criterion7() {
  Criterion c(7, "fuzz: every emitted certificate re-verifies", 600);
  std::mt19937_64 rng(0x5eed0007);
  const std::vector<Graph> graphs = {path_graph(4), star_graph(4), star_graph(5),
                                     y_graph(5),    path_graph(5), ring_graph(5)};
  int checked = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const Graph& g = graphs[trial % graphs.size()];
    GraphDiagonalState s = testutil::random_state(g, rng);
    Verdict v = classify(s);
    if (v.kind == VerdictKind::Gme) {
      if (!gme_certified(v, s)) {
        c.require(false, "entangled verdict without a valid witness at trial " +
                             std::to_string(trial));
        return;
      }
      ++checked;
    } else if (v.kind == VerdictKind::Biseparable) {
      if (!bisep_certified(v, s)) {
        c.require(false, "biseparable verdict without a verified decomposition at trial " +
                             std::to_string(trial));
        return;
      }
      ++checked;
    }
  }
  c.require(checked > 900, "too few conclusive verdicts: " + std::to_string(checked));
}

void criterion8() {
  Criterion c(8, "bound entanglement across a cut, still biseparable", 5);
  GraphDiagonalState s = counterexample_state();
  Bipartition cross(4, 0b0110);  // the two-Bell-pair cut
  c.require(cached_transfer(s.graph, cross).image_nonnegative(s.weights),
            "not PPT across the two-Bell-pair cut (exact)");
  c.require(min_eigenvalue(partial_transpose(state_to_dense(s), cross)) > -1e-10,
            "not PPT across the two-Bell-pair cut (dense)");
  c.require(bisep_certified(classify(s), s), "no verified biseparable decomposition");
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  if (failures != 0) std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
