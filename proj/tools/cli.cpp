#include "cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include "graphsep/dense.hpp"
#include "graphsep/json_io.hpp"

namespace graphsep {

namespace {

struct ExitWith {
  int code;
  std::string msg;
};

int max_qubits() {
  if (const char* env = std::getenv("GRAPHSEP_MAX_QUBITS")) {
    int n = std::atoi(env);
    if (n >= 2 && n <= kMaxQubits) return n;
  }
  return 6;
}

void check_size(const Graph& g) {
  if (g.num_qubits() > max_qubits())
    throw ExitWith{65, "graph has " + std::to_string(g.num_qubits()) +
                           " qubits; limit is " + std::to_string(max_qubits()) +
                           " (GRAPHSEP_MAX_QUBITS)\n"};
}

Json load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ExitWith{64, "cannot read " + path + "\n"};
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw ExitWith{64, "malformed JSON in " + path + ": " + e.what() + "\n"};
  }
}

void write_document(const std::string& path, const Json& doc) {
  std::ofstream out(path);
  if (!out) throw ExitWith{70, "cannot write " + path + "\n"};
  out << doc.dump(2) << "\n";
}

struct Inputs {
  std::string builtin, state_file, graph_file, noise;
};

GraphDiagonalState resolve_state(const Inputs& in) {
  if (!in.state_file.empty()) {
    Json doc = load_document(in.state_file);
    GraphDiagonalState s;
    try {
      s = state_from_json(doc);
    } catch (const std::invalid_argument& e) {
      throw ExitWith{64, std::string("bad state document: ") + e.what() + "\n"};
    }
    check_size(s.graph);
    try {
      s.check_valid(true);
    } catch (const std::invalid_argument& e) {
      throw ExitWith{65, std::string("invalid state: ") + e.what() + "\n"};
    }
    return s;
  }
  Graph g = [&] {
    if (!in.graph_file.empty()) {
      Json doc = load_document(in.graph_file);
      try {
        return graph_from_json(doc);
      } catch (const std::invalid_argument& e) {
        throw ExitWith{64, std::string("bad graph document: ") + e.what() + "\n"};
      }
    }
    try {
      return builtin_graph(in.builtin);
    } catch (const std::exception& e) {
      throw ExitWith{70, std::string(e.what()) + "\n"};
    }
  }();
  check_size(g);
  Rational p = 1;
  if (!in.noise.empty()) {
    try {
      p = parse_rational(in.noise);
    } catch (const std::invalid_argument& e) {
      throw ExitWith{70, std::string(e.what()) + "\n"};
    }
  }
  try {
    return white_noise(g, p);
  } catch (const std::invalid_argument& e) {
    throw ExitWith{65, std::string(e.what()) + "\n"};
  }
}

int verdict_code(VerdictKind k) {
  switch (k) {
    case VerdictKind::Biseparable: return 0;
    case VerdictKind::Gme: return 1;
    case VerdictKind::Inconclusive: return 2;
  }
  return 70;
}

/// Dense partial-transpose diagnostics: compares the exact transfer image with
/// <Gamma_j| rho^{T_M} |Gamma_j> computed in floating point for every cut.
Json oracle_report(const GraphDiagonalState& s) {
  DenseOperator rho = state_to_dense(s);
  int dim = s.dim();
  std::vector<std::vector<double>> basis;
  for (int k = 0; k < dim; ++k) basis.push_back(graph_state_vector(s.graph, k));
  double worst = 0;
  Json cuts = Json::array();
  for (const Bipartition& m : all_bipartitions(s.num_qubits())) {
    DenseOperator pt = partial_transpose(rho, m);
    RationalVec exact = cached_transfer(s.graph, m).apply(s.weights);
    double dev = 0;
    for (int j = 0; j < dim; ++j) {
      double val = 0;
      for (int r = 0; r < dim; ++r) {
        double acc = 0;
        for (int c = 0; c < dim; ++c) acc += pt.at(r, c).real() * basis[j][c];
        val += basis[j][r] * acc;
      }
      dev = std::max(dev, std::abs(val - exact[j].get_d()));
    }
    worst = std::max(worst, dev);
    cuts.push_back(Json{{"cut", m.str()},
                        {"max_deviation", dev},
                        {"min_eigenvalue", min_eigenvalue(pt)}});
  }
  return Json{{"cuts", cuts}, {"max_deviation", worst}};
}

/// Simplest rational in the closed interval [a, b] by Stern-Brocot descent.
Rational simplest_between(const Rational& a, const Rational& b) {
  if (a > b) throw std::logic_error("empty interval");
  mpz_class fa;
  mpz_fdiv_q(fa.get_mpz_t(), a.get_num_mpz_t(), a.get_den_mpz_t());
  Rational floor_a(fa);
  if (floor_a == a) return a;
  if (floor_a + 1 <= b) return floor_a + 1;
  return floor_a + 1 / simplest_between(1 / (b - floor_a), 1 / (a - floor_a));
}

Json threshold_report(const std::string& family, bool with_float) {
  Json out{{"family", family}};
  if (family == "C6") {
    out["bounds"] = Json::array({to_string(rational(11, 43)), to_string(rational(51, 179))});
    return out;
  }
  auto gme_at = [&](const Rational& p) {
    return classify_white_noise(family, p).kind == VerdictKind::Gme;
  };
  Rational lo = 0, hi = 1;
  if (gme_at(lo) || !gme_at(hi)) throw ExitWith{70, "family has no interior threshold\n"};
  for (int it = 0; it < 40; ++it) {
    Rational mid = (lo + hi) / 2;
    (gme_at(mid) ? hi : lo) = mid;
  }
  Rational p_star = simplest_between(lo, hi);
  if (gme_at(p_star) || !gme_at(hi))
    throw ExitWith{70, "threshold search failed to stabilize\n"};
  out["threshold"] = to_string(p_star);
  Json sweep = Json::array();
  for (int k = 0; k <= 20; ++k) {
    Rational p = rational(k, 20);
    Json row{{"p", to_string(p)},
             {"verdict", gme_at(p) ? "GME" : "BISEPARABLE"}};
    if (with_float) row["p_float"] = p.get_d();
    sweep.push_back(row);
  }
  out["sweep"] = sweep;
  return out;
}

/// Plain-text export of the mixture feasibility program in LP format.
std::string lp_export(const GraphDiagonalState& s, const std::vector<Bipartition>& parts) {
  std::ostringstream os;
  int dim = s.dim();
  os << "\\ PPT-mixture feasibility: sum over cuts of x_cut = lambda,\n"
     << "\\ each x_cut entrywise nonnegative with T_cut x_cut >= 0.\n"
     << "Minimize\n obj: 0\nSubject To\n";
  auto var = [&](std::size_t r, int j) { return "x_" + std::to_string(r) + "_" + std::to_string(j); };
  for (int j = 0; j < dim; ++j) {
    os << " eq_" << j << ":";
    for (std::size_t r = 0; r < parts.size(); ++r) os << " + " << var(r, j);
    os << " = " << to_string(s.weights[j]) << "\n";
  }
  for (std::size_t r = 0; r < parts.size(); ++r) {
    const TransferMatrix& t = cached_transfer(s.graph, parts[r]);
    for (int u = 0; u < dim; ++u) {
      os << " pt_" << r << "_" << u << ":";
      for (int j = 0; j < dim; ++j) {
        const Rational& c = t.entry(u, j);
        if (c == 0) continue;
        os << (c > 0 ? " + " : " - ") << to_string(abs(c)) << " " << var(r, j);
      }
      os << " >= 0\n";
    }
  }
  os << "Bounds\n";
  for (std::size_t r = 0; r < parts.size(); ++r)
    for (int j = 0; j < dim; ++j) os << " " << var(r, j) << " >= 0\n";
  os << "End\n";
  return os.str();
}

int run_parsed(const CLI::App& app, const Inputs& inputs, CliResult& res,
               const std::string& witness_name, const std::string& emit_witness,
               const std::string& emit_decomposition, const std::string& emit_lp,
               bool restrict_1bp, bool oracle, bool use_float) {
  auto emit = [&](const Json& doc) { res.out = doc.dump(2) + "\n"; };

  if (app.got_subcommand("graph")) {
    GraphDiagonalState s = resolve_state(inputs);
    const Graph& g = s.graph;
    Json parts = Json::array();
    for (const Bipartition& m : all_bipartitions(g.num_qubits()))
      parts.push_back(Json{{"cut", m.str()}, {"rank", cut_rank(g, m)}});
    Json doc{{"graph", graph_to_json(g)},
             {"connected", g.is_connected()},
             {"star", g.is_star()},
             {"partitions", parts}};
    emit(doc);
    return 0;
  }

  if (app.got_subcommand("threshold")) {
    emit(threshold_report(inputs.builtin, use_float));
    return 0;
  }

  if (app.got_subcommand("witness")) {
    DiagonalWitness w = [&] {
      try {
        return named_witness(witness_name);
      } catch (const std::invalid_argument& e) {
        throw ExitWith{70, std::string(e.what()) + "\n"};
      }
    }();
    WitnessReport rep = validate_witness(w);
    Json doc{{"witness", witness_to_json(w)}, {"valid", rep.valid}};
    if (!rep.valid) doc["violation"] = rep.violation;
    int code = 0;
    if (!inputs.state_file.empty() || !inputs.builtin.empty()) {
      GraphDiagonalState s = resolve_state(inputs);
      Rational value = [&] {
        try {
          return evaluate(w, s);
        } catch (const std::invalid_argument& e) {
          throw ExitWith{65, std::string(e.what()) + "\n"};
        }
      }();
      doc["value"] = to_string(value);
      if (use_float) doc["value_float"] = value.get_d();
      code = (rep.valid && value < 0) ? 1 : 0;
    }
    emit(doc);
    return code;
  }

  if (app.got_subcommand("pptmix")) {
    GraphDiagonalState s = resolve_state(inputs);
    std::vector<Bipartition> parts =
        restrict_1bp ? one_bp_partitions(s.graph) : all_bipartitions(s.num_qubits());
    if (parts.empty()) throw ExitWith{65, "no admissible cuts for this graph\n"};
    if (!emit_lp.empty()) {
      std::ofstream out(emit_lp);
      if (!out) throw ExitWith{70, "cannot write " + emit_lp + "\n"};
      out << lp_export(s, parts);
    }
    LpCertificate cert = is_ppt_mixture(s, parts);
    std::string why;
    bool ok = verify_lp_certificate(s, parts, cert, &why);
    Json doc{{"certificate", lp_certificate_to_json(cert, s.graph)}, {"verified", ok}};
    if (!ok) doc["verification_error"] = why;
    if (oracle) doc["oracle"] = oracle_report(s);
    emit(doc);
    if (!ok) return 65;
    return cert.feasible ? 0 : 1;
  }

  // classify / decompose
  GraphDiagonalState s = resolve_state(inputs);
  Verdict v = [&] {
    try {
      bool family_route = inputs.state_file.empty() && inputs.graph_file.empty() &&
                          !restrict_1bp &&
                          (inputs.builtin == "C6" || family_threshold(inputs.builtin));
      if (family_route) {
        Rational p = inputs.noise.empty() ? Rational(1) : parse_rational(inputs.noise);
        return classify_white_noise(inputs.builtin, p);
      }
      return classify(s, restrict_1bp);
    } catch (const std::invalid_argument& e) {
      throw ExitWith{65, std::string(e.what()) + "\n"};
    }
  }();

  Json doc = verdict_to_json(v, s);
  if (v.witness) {
    WitnessReport rep = validate_witness(*v.witness);
    doc["witness_valid"] = rep.valid;
    if (!rep.valid) throw ExitWith{65, "emitted witness failed validation: " + rep.violation + "\n"};
  }
  if (v.decomposition) {
    VerifyReport rep = verify_decomposition(*v.decomposition, s);
    doc["decomposition_valid"] = rep.ok;
    if (!rep.ok) throw ExitWith{65, "emitted decomposition failed verification: " + rep.detail + "\n"};
  }
  if (oracle) doc["oracle"] = oracle_report(s);
  if (!emit_witness.empty()) {
    if (!v.witness) throw ExitWith{70, "no witness to emit for this verdict\n"};
    write_document(emit_witness, witness_to_json(*v.witness));
  }
  if (!emit_decomposition.empty()) {
    if (!v.decomposition) throw ExitWith{70, "no decomposition to emit for this verdict\n"};
    write_document(emit_decomposition, decomposition_to_json(*v.decomposition, s.graph));
  }
  if (app.got_subcommand("decompose") && v.kind != VerdictKind::Biseparable)
    res.err += "state is not biseparable; no decomposition available\n";
  emit(doc);
  return verdict_code(v.kind);
}

}  // namespace

CliResult run_cli(const std::vector<std::string>& args) {
  CliResult res;
  CLI::App app{"graphsep: biseparability vs. genuine multipartite entanglement "
               "for graph-diagonal states, with machine-checkable certificates"};
  app.require_subcommand(1);

  Inputs inputs;
  std::string witness_name, emit_witness, emit_decomposition, emit_lp;
  bool restrict_1bp = false, oracle = false, use_float = false, use_exact = false;

  auto add_input_flags = [&](CLI::App* cmd, bool with_state = true) {
    cmd->add_option("--builtin", inputs.builtin, "named graph: C4..C6, R5, Y5, Y6, GHZ2..GHZ8");
    if (with_state) cmd->add_option("--state", inputs.state_file, "state JSON file");
    cmd->add_option("--graph", inputs.graph_file, "graph JSON file");
    cmd->add_option("--white-noise", inputs.noise, "purity parameter p (rational or decimal)");
    cmd->add_flag("--exact", use_exact, "exact arithmetic (default)");
    cmd->add_flag("--float", use_float, "add floating-point renderings to reports");
  };

  CLI::App* c_classify = app.add_subcommand("classify", "decide GME vs. biseparable");
  add_input_flags(c_classify);
  c_classify->add_flag("--restrict-1bp", restrict_1bp,
                       "restrict the mixture search to one-Bell-pair cuts");
  c_classify->add_flag("--oracle", oracle, "append dense cross-check diagnostics");
  c_classify->add_option("--emit-witness", emit_witness, "write the witness JSON here");
  c_classify->add_option("--emit-decomposition", emit_decomposition,
                         "write the decomposition JSON here");

  CLI::App* c_threshold = app.add_subcommand("threshold", "exact white-noise threshold");
  c_threshold->add_option("--builtin", inputs.builtin, "family name")->required();
  c_threshold->add_flag("--float", use_float, "add floating-point renderings");

  CLI::App* c_decompose = app.add_subcommand("decompose", "emit a biseparable decomposition");
  add_input_flags(c_decompose);
  c_decompose->add_option("--emit-decomposition", emit_decomposition,
                          "write the decomposition JSON here");
  c_decompose->add_flag("--restrict-1bp", restrict_1bp,
                        "restrict the mixture search to one-Bell-pair cuts");

  CLI::App* c_witness = app.add_subcommand("witness", "emit or evaluate a named witness");
  c_witness->add_option("--name", witness_name, "w1, w2, y5, c5, r5, ghz3..ghz8")->required();
  add_input_flags(c_witness);

  CLI::App* c_pptmix = app.add_subcommand("pptmix", "solve the PPT-mixture program");
  add_input_flags(c_pptmix);
  c_pptmix->add_flag("--restrict-1bp", restrict_1bp, "one-Bell-pair cuts only");
  c_pptmix->add_flag("--oracle", oracle, "append dense cross-check diagnostics");
  c_pptmix->add_option("--emit-lp", emit_lp, "write the feasibility program in LP format");

  CLI::App* c_graph = app.add_subcommand("graph", "inspect a graph and its cuts");
  add_input_flags(c_graph, false);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    res.out = app.help();
    res.code = 0;
    return res;
  } catch (const CLI::ParseError& e) {
    res.err = std::string(e.what()) + "\n";
    res.code = 70;
    return res;
  }
  (void)use_exact;
  (void)c_decompose;
  (void)c_graph;

  try {
    res.code = run_parsed(app, inputs, res, witness_name, emit_witness, emit_decomposition,
                          emit_lp, restrict_1bp, oracle, use_float);
  } catch (const ExitWith& e) {
    res.err += e.msg;
    res.code = e.code;
  } catch (const std::exception& e) {
    res.err += std::string(e.what()) + "\n";
    res.code = 70;
  }
  return res;
}

}  // namespace graphsep
