#include <doctest.h>

#include "graphsep/graph.hpp"
#include "graphsep/pauli.hpp"

using namespace graphsep;

TEST_CASE("stabilizer generators commute and square to the identity") {
  for (const Graph& g : {path_graph(4), path_graph(5), ring_graph(5), y_graph(5), star_graph(4)}) {
    int n = g.num_qubits();
    for (int i = 1; i <= n; ++i) {
      PauliString gi = stabilizer_generator(g, i);
      CHECK(gi.phase_exp % 4 == 0);
      CHECK(pauli_multiply(gi, gi).is_identity());
      for (int j = i + 1; j <= n; ++j)
        CHECK(pauli_commutator_sign(gi, stabilizer_generator(g, j)) == 1);
    }
  }
}

TEST_CASE("stabilizer generator letters: X at the vertex, Z on neighbours") {
  Graph g = path_graph(4);
  PauliString g2 = stabilizer_generator(g, 2);
  CHECK(g2.letter(1) == 'Z');
  CHECK(g2.letter(2) == 'X');
  CHECK(g2.letter(3) == 'Z');
  CHECK(g2.letter(4) == 'I');
  CHECK(g2.str() == "+ZXZ1");
}

TEST_CASE("group elements carry real phases only") {
  Graph g = ring_graph(5);
  for (std::uint32_t s = 0; s < 32; ++s) {
    PauliString e = group_element(g, s);
    CHECK(e.phase_exp % 2 == 0);  // +-1, never +-i
  }
}

TEST_CASE("group element matches the explicit generator product") {
  Graph g = path_graph(4);
  for (std::uint32_t s = 0; s < 16; ++s) {
    PauliString expected = pauli_identity(4);
    for (int i = 1; i <= 4; ++i)
      if ((s >> (i - 1)) & 1u) expected = pauli_multiply(expected, stabilizer_generator(g, i));
    CHECK(group_element(g, s) == expected);
  }
}

TEST_CASE("pauli multiplication phase bookkeeping: XZ = -ZX") {
  PauliString x{1, 1, 0, 0}, z{1, 0, 1, 0};
  PauliString xz = pauli_multiply(x, z);
  PauliString zx = pauli_multiply(z, x);
  CHECK(xz.x_mask == zx.x_mask);
  CHECK(xz.z_mask == zx.z_mask);
  CHECK((xz.phase_exp - zx.phase_exp) % 4 == 2);
  CHECK(pauli_commutator_sign(x, z) == -1);
}
