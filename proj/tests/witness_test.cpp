#include <doctest.h>

#include "graphsep/witness.hpp"

using namespace graphsep;

namespace {

Rational white_noise_value(const DiagonalWitness& w, const Rational& p) {
  return evaluate(w, white_noise(w.graph, p));
}

}  // namespace

TEST_CASE("named witnesses validate") {
  for (const char* name : {"w1", "w2", "y5", "c5", "r5", "ghz3", "ghz4", "ghz5"}) {
    DiagonalWitness w = named_witness(name);
    WitnessReport rep = validate_witness(w);
    INFO(name, ": ", rep.violation);
    CHECK(rep.valid);
  }
  CHECK_THROWS_AS(named_witness("nope"), std::invalid_argument);
}

TEST_CASE("coefficient sums match the frozen values") {
  CHECK(vec_sum(named_witness("w1").coeffs) == 5);
  CHECK(vec_sum(named_witness("w2").coeffs) == 6);
  CHECK(vec_sum(named_witness("y5").coeffs) == 9);
  CHECK(vec_sum(named_witness("c5").coeffs) == 9);
  CHECK(vec_sum(named_witness("r5").coeffs) == 56);
  CHECK(vec_sum(named_witness("ghz4").coeffs) == 7);
}

TEST_CASE("white-noise detection thresholds are exact roots") {
  struct Case {
    const char* name;
    Rational threshold;
  };
  const Case cases[] = {{"w1", rational(5, 13)},
                        {"y5", rational(9, 25)},
                        {"c5", rational(9, 25)},
                        {"r5", rational(7, 19)},
                        {"ghz4", rational(7, 15)},
                        {"ghz5", rational(15, 31)}};
  for (const Case& c : cases) {
    DiagonalWitness w = named_witness(c.name);
    INFO(c.name);
    CHECK(white_noise_value(w, c.threshold) == 0);
    CHECK(white_noise_value(w, c.threshold * rational(99, 100)) > 0);
    CHECK(white_noise_value(w, c.threshold + (1 - c.threshold) / 100) < 0);
  }
}

TEST_CASE("sign flips preserve validity and permute evaluations") {
  DiagonalWitness w = named_witness("w1");
  DiagonalWitness f = flip_witness(w, 0b1010u);
  CHECK(validate_witness(f).valid);
  GraphDiagonalState s = white_noise(w.graph, rational(1, 2));
  s.weights[4] += s.weights[9];
  s.weights[9] = 0;
  CHECK(evaluate(f, s) == evaluate(w, flip_signs(s, 0b1010u)));
}

TEST_CASE("witness constructors enforce their graph and label domains") {
  CHECK_THROWS_AS(w1_witness(star_graph(4)), std::invalid_argument);
  CHECK_THROWS_AS(w2_witness(path_graph(4), 0, 0b0010u), std::invalid_argument);
  CHECK_THROWS_AS(ghz_witness(path_graph(4)), std::invalid_argument);
  CHECK_NOTHROW(w2_witness(path_graph(4), 0, 0b1001u));
}

TEST_CASE("evaluate rejects graph mismatches") {
  CHECK_THROWS_AS(evaluate(named_witness("y5"), white_noise(path_graph(5), rational(1, 2))),
                  std::invalid_argument);
}

TEST_CASE("w2 center placement via sign flips matches direct construction") {
  DiagonalWitness direct = w2_witness(path_graph(4), 0b0010u, 0b1011u);
  DiagonalWitness flipped = flip_witness(w2_witness(path_graph(4), 0, 0b1001u), 0b0010u);
  CHECK(direct.coeffs == flipped.coeffs);
}
