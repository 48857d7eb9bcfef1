#pragma once

#include <cstdint>
#include <string>

namespace graphsep {

/// N-qubit Pauli string: phase * tensor product of {I, X, Y, Z} letters,
/// with the convention Y = i X Z. Qubit i (1-based) lives at bit i-1.
/// The phase is a fourth root of unity stored as a power of i.
struct PauliString {
  int n = 0;
  std::uint32_t x_mask = 0;
  std::uint32_t z_mask = 0;
  int phase_exp = 0;  // operator = i^phase_exp * prod letters

  bool operator==(const PauliString& other) const = default;

  /// Letter on qubit i (1-based): 'I', 'X', 'Y' or 'Z'.
  char letter(int i) const {
    bool x = (x_mask >> (i - 1)) & 1u;
    bool z = (z_mask >> (i - 1)) & 1u;
    if (x && z) return 'Y';
    if (x) return 'X';
    if (z) return 'Z';
    return 'I';
  }

  bool is_identity() const { return x_mask == 0 && z_mask == 0 && phase_exp % 4 == 0; }

  /// Mask of qubits carrying a Y letter.
  std::uint32_t y_mask() const { return x_mask & z_mask; }

  /// e.g. "+XZ1Y" (identity rendered as '1', matching the usual stabilizer notation).
  std::string str() const;
};

PauliString pauli_identity(int n);

/// Product a*b with exact phase bookkeeping.
PauliString pauli_multiply(const PauliString& a, const PauliString& b);

/// +1 if a and b commute, -1 if they anticommute.
int pauli_commutator_sign(const PauliString& a, const PauliString& b);

}  // namespace graphsep
