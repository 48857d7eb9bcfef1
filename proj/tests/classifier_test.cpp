#include <doctest.h>

#include <random>

#include "graphsep/pptmix.hpp"
#include "graphsep/transfer.hpp"
#include "util.hpp"

using namespace graphsep;

TEST_CASE("separable-pair catalog for the four-qubit cluster basis") {
  // Labels differing in both end signs (bits for qubits 1 and 4) are the only
  // excluded pairs; everything else gets a certifying one-Bell-pair cut.
  int excluded = 0;
  for (BasisLabel d = 1; d < 16; ++d) {
    auto part = separable_pair_partition(0, d);
    if ((d & 0b0001u) && (d & 0b1000u)) {
      CHECK(!part);
      ++excluded;
    } else {
      REQUIRE(part);
      CHECK(cut_rank(path_graph(4), *part) == 1);
      // The certifying cut must keep the pair mixture PPT.
      RationalVec v(16, Rational(0));
      v[0] = rational(1, 2);
      v[d] = rational(1, 2);
      CHECK(cached_transfer(path_graph(4), *part).image_nonnegative(v));
    }
  }
  CHECK(excluded == 4);
  CHECK_THROWS_AS(separable_pair_partition(3, 3), std::invalid_argument);
}

TEST_CASE("bell mixture separability rule") {
  CHECK(bell_mixture_separable({rational(1, 4), rational(1, 4), rational(1, 4), rational(1, 4)}));
  CHECK(bell_mixture_separable({rational(1, 2), rational(1, 2), 0, 0}));
  CHECK(!bell_mixture_separable({rational(3, 5), rational(1, 5), rational(1, 5), 0}));
}

TEST_CASE("cluster classification at and above the white-noise threshold") {
  Graph g = path_graph(4);
  Verdict at = classify_c4(white_noise(g, rational(5, 13)));
  CHECK(at.kind == VerdictKind::Biseparable);
  REQUIRE(at.decomposition);
  CHECK(verify_decomposition(*at.decomposition, white_noise(g, rational(5, 13))).ok);

  GraphDiagonalState above = white_noise(g, rational(5, 13) + rational(1, 1000000));
  Verdict v = classify_c4(above);
  CHECK(v.kind == VerdictKind::Gme);
  REQUIRE(v.witness);
  CHECK(validate_witness(*v.witness).valid);
  CHECK(evaluate(*v.witness, above) < 0);
}

TEST_CASE("random cluster-diagonal states: both verdicts come certified") {
  std::mt19937_64 rng(42);
  Graph g = path_graph(4);
  int bisep = 0, gme = 0;
  for (int trial = 0; trial < 200; ++trial) {
    GraphDiagonalState s = testutil::random_state(g, rng);
    Verdict v = classify_c4(s);
    if (v.kind == VerdictKind::Biseparable) {
      ++bisep;
      REQUIRE(v.decomposition);
      VerifyReport rep = verify_decomposition(*v.decomposition, s);
      INFO(rep.detail);
      CHECK(rep.ok);
    } else {
      ++gme;
      REQUIRE(v.witness);
      CHECK(validate_witness(*v.witness).valid);
      CHECK(evaluate(*v.witness, s) < 0);
    }
  }
  CHECK(bisep > 0);
  CHECK(gme > 0);
}

TEST_CASE("GHZ-diagonal criterion: largest weight against one half") {
  Graph g = star_graph(5);
  GraphDiagonalState at = white_noise(g, rational(15, 31));
  CHECK(at.weights[0] == rational(1, 2));
  Verdict v = ghz_diagonal_check(at);
  CHECK(v.kind == VerdictKind::Biseparable);
  REQUIRE(v.decomposition);
  CHECK(verify_decomposition(*v.decomposition, at).ok);

  GraphDiagonalState above = white_noise(g, rational(1, 2));
  Verdict w = ghz_diagonal_check(above);
  CHECK(w.kind == VerdictKind::Gme);
  REQUIRE(w.witness);
  CHECK(validate_witness(*w.witness).valid);
  CHECK(evaluate(*w.witness, above) < 0);
}

TEST_CASE("random GHZ-diagonal states match the max-weight rule") {
  std::mt19937_64 rng(5);
  Graph g = star_graph(4);
  for (int trial = 0; trial < 100; ++trial) {
    GraphDiagonalState s = testutil::random_state(g, rng);
    Rational biggest = 0;
    for (const Rational& x : s.weights) biggest = std::max(biggest, x);
    Verdict v = ghz_diagonal_check(s);
    CHECK((v.kind == VerdictKind::Gme) == (biggest > rational(1, 2)));
    if (v.decomposition) CHECK(verify_decomposition(*v.decomposition, s).ok);
  }
}

TEST_CASE("family thresholds") {
  CHECK(family_threshold("C4") == rational(5, 13));
  CHECK(family_threshold("Y5") == rational(9, 25));
  CHECK(family_threshold("C5") == rational(9, 25));
  CHECK(family_threshold("R5") == rational(7, 19));
  CHECK(family_threshold("GHZ4") == rational(7, 15));
  CHECK(family_threshold("GHZ8") == rational(127, 255));
  CHECK(!family_threshold("C6"));
}

TEST_CASE("white-noise families certify exactly at their thresholds") {
  for (const char* family : {"C4", "Y5", "C5", "R5", "GHZ4", "GHZ5"}) {
    INFO(family);
    Rational p = *family_threshold(family);
    Graph g = builtin_graph(family);
    Verdict at = classify_white_noise(family, p);
    CHECK(at.kind == VerdictKind::Biseparable);
    REQUIRE(at.decomposition);
    CHECK(verify_decomposition(*at.decomposition, white_noise(g, p)).ok);
    CHECK(at.threshold == p);

    Rational above = p + rational(1, 1000000);
    Verdict v = classify_white_noise(family, above);
    CHECK(v.kind == VerdictKind::Gme);
    REQUIRE(v.witness);
    CHECK(validate_witness(*v.witness).valid);
    CHECK(evaluate(*v.witness, white_noise(g, above)) < 0);

    // Strictly below threshold: mixing with extra uniform noise stays certified.
    Verdict below = classify_white_noise(family, p / 2);
    CHECK(below.kind == VerdictKind::Biseparable);
    REQUIRE(below.decomposition);
    CHECK(verify_decomposition(*below.decomposition, white_noise(g, p / 2)).ok);
  }
}

TEST_CASE("six-qubit cluster bounds") {
  C6Bounds b = c6_bounds();
  CHECK(b.lower == rational(11, 43));
  CHECK(b.upper == rational(51, 179));
  GraphDiagonalState s = white_noise(path_graph(6), b.lower);
  VerifyReport rep = verify_decomposition(b.at_lower, s);
  INFO(rep.detail);
  CHECK(rep.ok);

  Verdict between = classify_white_noise("C6", rational(27, 100));
  CHECK(between.kind == VerdictKind::Inconclusive);
}

TEST_CASE("smolin state structure") {
  GraphDiagonalState s = smolin_state();
  CHECK(s.num_qubits() == 4);
  CHECK(s.is_normalized());
  int nonzero = 0;
  for (const Rational& x : s.weights)
    if (x != 0) {
      CHECK(x == rational(1, 4));
      ++nonzero;
    }
  CHECK(nonzero == 4);
  // PPT across both cross cuts relative to the pairing 1-2 | 3-4.
  for (std::uint32_t mask : {0b0101u, 0b1001u})
    CHECK(cached_transfer(s.graph, Bipartition(4, mask)).image_nonnegative(s.weights));
}

TEST_CASE("counterexample: PPT-entangled cut, still biseparable") {
  GraphDiagonalState s = counterexample_state();
  CHECK(cached_transfer(s.graph, Bipartition(4, 0b0110)).image_nonnegative(s.weights));
  Verdict v = classify(s);
  CHECK(v.kind == VerdictKind::Biseparable);
  REQUIRE(v.decomposition);
  CHECK(verify_decomposition(*v.decomposition, s).ok);
}

TEST_CASE("verdicts are invariant under local sign flips") {
  std::mt19937_64 rng(99);
  Graph g = path_graph(4);
  for (int trial = 0; trial < 30; ++trial) {
    GraphDiagonalState s = testutil::random_state(g, rng);
    VerdictKind base = classify_c4(s).kind;
    for (BasisLabel t : {0b0001u, 0b1010u, 0b1111u})
      CHECK(classify_c4(flip_signs(s, t)).kind == base);
  }
}

TEST_CASE("classification carries over local-complementation orbits") {
  // The four-cycle is locally equivalent to the four-qubit linear cluster
  // (complement at 1, 2, 1 turns the square into a path), so its white-noise
  // threshold matches the cluster's 5/13.
  Graph ring4 = ring_graph(4);
  GraphDiagonalState hot = white_noise(ring4, rational(7, 15));
  Verdict v = classify(hot);
  CHECK(v.kind == VerdictKind::Gme);
  REQUIRE(v.witness);
  CHECK(v.witness->graph == ring4);
  CHECK(validate_witness(*v.witness).valid);
  CHECK(evaluate(*v.witness, hot) < 0);

  GraphDiagonalState mild = white_noise(ring4, rational(5, 13));
  Verdict w = classify(mild);
  CHECK(w.kind == VerdictKind::Biseparable);
  REQUIRE(w.decomposition);
  CHECK(verify_decomposition(*w.decomposition, mild).ok);
}

TEST_CASE("decomposition verifier rejects tampering") {
  GraphDiagonalState s = white_noise(path_graph(4), rational(5, 13));
  Decomposition d = decompose_c4(s);
  VerifyReport ok = verify_decomposition(d, s);
  REQUIRE(ok.ok);

  Decomposition broken = d;
  broken.components[0].weight *= rational(9, 10);
  CHECK(!verify_decomposition(broken, s).ok);

  broken = d;
  broken.components.pop_back();
  CHECK(!verify_decomposition(broken, s).ok);

  broken = d;
  broken.components[0].part = Bipartition(4, 0b0110);  // not a one-Bell-pair cut
  CHECK(!verify_decomposition(broken, s).ok);
}

TEST_CASE("classify dispatch covers stars, clusters, Y graphs and rings") {
  CHECK(classify(white_noise(star_graph(6), rational(1, 3))).kind == VerdictKind::Biseparable);
  CHECK(classify(white_noise(path_graph(4), rational(2, 5))).kind == VerdictKind::Gme);
  CHECK(classify(white_noise(y_graph(6), rational(1, 4))).kind == VerdictKind::Biseparable);
  CHECK(classify(white_noise(ring_graph(5), rational(2, 5))).kind == VerdictKind::Gme);
  CHECK_THROWS_AS(classify(white_noise(Graph(1), rational(1, 2))), std::invalid_argument);
  // Edgeless graphs are product states: the mixture program is trivially feasible.
  CHECK(classify(white_noise(Graph(3), rational(1, 2))).kind == VerdictKind::Biseparable);
}

TEST_CASE("restricted classification still certifies soundly") {
  GraphDiagonalState s = white_noise(ring_graph(5), rational(1, 5));
  Verdict v = classify(s, /*restrict_1bp=*/true);
  if (v.kind == VerdictKind::Biseparable) {
    REQUIRE(v.decomposition);
    CHECK(verify_decomposition(*v.decomposition, s).ok);
  } else {
    CHECK(v.kind == VerdictKind::Inconclusive);
  }
}

TEST_CASE("certificate kind names round trip") {
  for (CertificateKind k : {CertificateKind::Pair, CertificateKind::BellMixture,
                            CertificateKind::GhzMixture, CertificateKind::Smolin,
                            CertificateKind::PptRank4, CertificateKind::PptCut})
    CHECK(certificate_kind_from_name(certificate_kind_name(k)) == k);
  CHECK_THROWS_AS(certificate_kind_from_name("bogus"), std::invalid_argument);
}
