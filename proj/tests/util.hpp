#pragma once

#include <random>

#include "graphsep/state.hpp"

namespace graphsep::testutil {

/// Random normalized weight vector with exact small-denominator entries:
/// integer masses out of `granularity` cells, occasionally sparse.
inline GraphDiagonalState random_state(const Graph& g, std::mt19937_64& rng,
                                       int granularity = 64) {
  int dim = g.dim();
  std::uniform_int_distribution<int> cell(0, dim - 1);
  std::bernoulli_distribution sparse(0.3);
  RationalVec w(dim, Rational(0));
  if (sparse(rng)) {
    std::uniform_int_distribution<int> count(1, std::max(2, dim / 4));
    int picks = count(rng);
    std::vector<int> support;
    for (int i = 0; i < picks; ++i) support.push_back(cell(rng));
    std::uniform_int_distribution<int> which(0, picks - 1);
    for (int i = 0; i < granularity; ++i) w[support[which(rng)]] += Rational(1, granularity);
  } else {
    for (int i = 0; i < granularity; ++i) w[cell(rng)] += Rational(1, granularity);
  }
  return GraphDiagonalState(g, std::move(w));
}

}  // namespace graphsep::testutil
