#include <doctest.h>

#include "graphsep/state.hpp"

using namespace graphsep;

TEST_CASE("label string round trip, qubit 1 first") {
  CHECK(parse_label("-++-") == 0b1001u);
  CHECK(label_str(0b1001u, 4) == "-++-");
  for (BasisLabel k = 0; k < 32; ++k) CHECK(parse_label(label_str(k, 5)) == k);
  CHECK_THROWS_AS(parse_label("+*+"), std::invalid_argument);
}

TEST_CASE("white noise weights") {
  GraphDiagonalState s = white_noise(path_graph(4), rational(5, 13));
  CHECK(s.weights[0] == rational(5, 13) + rational(8, 13) / 16);
  for (int k = 1; k < 16; ++k) CHECK(s.weights[k] == rational(1, 26));
  CHECK(s.is_normalized());
  CHECK_NOTHROW(s.check_valid());
  CHECK_THROWS_AS(white_noise(path_graph(4), rational(14, 13)), std::invalid_argument);
}

TEST_CASE("state validity checks") {
  Graph g = path_graph(4);
  RationalVec w(16, Rational(0));
  w[0] = rational(1, 2);
  CHECK_THROWS_AS(GraphDiagonalState(g, w).check_valid(true), std::invalid_argument);
  CHECK_NOTHROW(GraphDiagonalState(g, w).check_valid(false));
  w[1] = rational(-1, 2);
  CHECK_THROWS_AS(GraphDiagonalState(g, w).check_valid(false), std::invalid_argument);
}

TEST_CASE("flip_signs is a weight permutation and an involution") {
  GraphDiagonalState s = white_noise(path_graph(4), rational(1, 3));
  s.weights[3] += s.weights[5];
  s.weights[5] = 0;
  GraphDiagonalState f = flip_signs(s, 0b0110u);
  CHECK(f.weights[3 ^ 0b0110] == s.weights[3]);
  CHECK(flip_signs(f, 0b0110u) == s);
  CHECK(vec_sum(f.weights) == vec_sum(s.weights));
}

TEST_CASE("translate requires a graph automorphism") {
  GraphDiagonalState ring = point_mass(ring_graph(5), parse_label("-++++"));
  GraphDiagonalState shifted = translate(ring, 1);
  CHECK(shifted.weights[parse_label("+-+++")] == 1);
  CHECK_THROWS_AS(translate(point_mass(path_graph(5), 0), 1), std::invalid_argument);
}

TEST_CASE("character parity") {
  CHECK(character(0b101u, 0b001u) == -1);
  CHECK(character(0b101u, 0b101u) == 1);
  CHECK(character(0, 0b111u) == 1);
}

TEST_CASE("basis projector expansion coefficients") {
  Graph g = path_graph(4);
  auto terms = basis_projector(g, 0b0101u);
  CHECK(terms.size() == 16);
  for (const auto& [coeff, p] : terms) {
    CHECK((coeff == rational(1, 16) || coeff == rational(-1, 16)));
    CHECK(p.n == 4);
  }
  // The identity term always enters with +1/16.
  CHECK(terms[0].first == rational(1, 16));
  CHECK(terms[0].second.is_identity());
}

TEST_CASE("uniform state and point mass") {
  CHECK(uniform_state(path_graph(4)).weights[7] == rational(1, 16));
  GraphDiagonalState p = point_mass(path_graph(4), 3);
  CHECK(p.weights[3] == 1);
  CHECK(vec_sum(p.weights) == 1);
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("5/13") == rational(5, 13));
  CHECK(parse_rational("7") == 7);
  CHECK(parse_rational("0.25") == rational(1, 4));
  CHECK(parse_rational("0.3600001") == rational(3600001, 10000000));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
}
