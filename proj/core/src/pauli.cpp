#include "graphsep/pauli.hpp"

#include <bit>
#include <stdexcept>

namespace graphsep {

std::string PauliString::str() const {
  static const char* signs[4] = {"+", "+i", "-", "-i"};
  std::string out = signs[((phase_exp % 4) + 4) % 4];
  for (int i = 1; i <= n; ++i) {
    char c = letter(i);
    out += (c == 'I') ? '1' : c;
  }
  return out;
}

PauliString pauli_identity(int n) { return PauliString{n, 0, 0, 0}; }

PauliString pauli_multiply(const PauliString& a, const PauliString& b) {
  if (a.n != b.n) throw std::invalid_argument("pauli_multiply: size mismatch");
  // Work in the symplectic form i^e X^x Z^z. A stored string contributes one
  // factor of i per Y letter (Y = iXZ); commuting Z^za past X^xb costs (-1)
  // per overlapping qubit.
  int e = a.phase_exp + std::popcount(a.y_mask()) + b.phase_exp + std::popcount(b.y_mask());
  e += 2 * std::popcount(a.z_mask & b.x_mask);
  std::uint32_t x = a.x_mask ^ b.x_mask;
  std::uint32_t z = a.z_mask ^ b.z_mask;
  e -= std::popcount(x & z);  // fold the product's own Y letters back out
  return PauliString{a.n, x, z, ((e % 4) + 4) % 4};
}

int pauli_commutator_sign(const PauliString& a, const PauliString& b) {
  int anti = std::popcount(a.x_mask & b.z_mask) + std::popcount(a.z_mask & b.x_mask);
  return (anti % 2 == 0) ? 1 : -1;
}

}  // namespace graphsep
