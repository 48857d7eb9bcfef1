#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "graphsep/witness.hpp"

namespace graphsep {

/// How a decomposition component is certified separable across `part`:
///   Pair        - equal mixture of two basis labels from the separable-pair
///                 catalog, positive partial transpose across a one-Bell-pair cut.
///   BellMixture - Bell-diagonal block (four labels on a middle-qubit coset)
///                 with every weight at most the sum of the other three.
///   GhzMixture  - equal mixture of two GHZ-basis labels (star graph).
///   Smolin      - Smolin-state pattern: four equal labels, PPT across a
///                 two-qubit cut, rank four.
///   PptRank4    - PPT across a two-qubit cut with rank at most four, which
///                 forces separability on the 4 x d cut.
///   PptCut      - PPT across a cut carrying a single Bell pair, where PPT
///                 is equivalent to separability.
enum class CertificateKind { Pair, BellMixture, GhzMixture, Smolin, PptRank4, PptCut };

std::string certificate_kind_name(CertificateKind k);
CertificateKind certificate_kind_from_name(const std::string& name);

struct Component {
  Rational weight;           // positive; sum of weights = 1 for a full decomposition
  GraphDiagonalState state;  // normalized component
  CertificateKind kind;
  Bipartition part;
};

/// Exact convex decomposition of a state into certified biseparable pieces.
struct Decomposition {
  std::vector<Component> components;
};

enum class VerdictKind { Gme, Biseparable, Inconclusive };

struct Verdict {
  VerdictKind kind = VerdictKind::Inconclusive;
  std::optional<DiagonalWitness> witness;  // Gme: evaluates < 0 and validates
  Rational evaluation = 0;                 // Gme: the negative expectation value
  std::optional<Decomposition> decomposition;  // Biseparable
  std::string reason;                          // Inconclusive
  std::optional<Rational> threshold;           // known exact family threshold
};

/// Separable-pair rule for the four-qubit cluster basis: the equal mixture of
/// two labels is biseparable unless they differ in both end signs (qubits 1
/// and 4). Returns the certifying one-Bell-pair partition, or nullopt for the
/// excluded patterns.
std::optional<Bipartition> separable_pair_partition(BasisLabel k1, BasisLabel k2);

/// A Bell-diagonal mixture is separable iff each weight is at most the sum of
/// the other three.
bool bell_mixture_separable(const std::array<Rational, 4>& weights);

/// Homogeneous biseparability conditions for a (possibly unnormalized)
/// cluster-basis weight vector: for every label, twice its weight is at most
/// the total weight of all labels it can pair with; and for every
/// end-flipped label pair, twice their joint weight is at most the total.
/// Returns nullopt when all conditions hold, otherwise a violating witness.
std::optional<DiagonalWitness> c4_condition_violation(const RationalVec& weights);

/// Complete decision for four-qubit cluster-diagonal states: a violated
/// condition yields a Gme verdict with its witness; otherwise the explicit
/// biseparable decomposition is constructed.
Verdict classify_c4(const GraphDiagonalState& s);

/// Constructive biseparable decomposition for a cluster-diagonal state
/// satisfying all conditions; throws if a condition is violated.
Decomposition decompose_c4(const GraphDiagonalState& s);

struct VerifyReport {
  bool ok = false;
  std::string detail;
};

/// Exact reassembly check plus per-component certificate verification.
VerifyReport verify_decomposition(const Decomposition& d, const GraphDiagonalState& s);

/// GHZ-diagonal criterion (star graphs, any size): genuinely multipartite
/// entangled iff the largest weight exceeds 1/2; otherwise an explicit
/// pair decomposition is built.
Verdict ghz_diagonal_check(const GraphDiagonalState& s);

/// White-noise families with known exact thresholds: "C4" (5/13),
/// "Y5" (9/25), "C5" (9/25), "R5" (7/19), "GHZ3".."GHZ8".
Verdict classify_white_noise(const std::string& family, const Rational& p);

/// Exact white-noise threshold for a named family; nullopt for families with
/// only bounds (C6).
std::optional<Rational> family_threshold(const std::string& family);

/// Four-qubit Smolin state: equal mixture of the four matched Bell-pair
/// labels on the two-edge graph 1-2, 3-4; separable across the cross cuts
/// 13|24 and 14|23 while globally entangled.
GraphDiagonalState smolin_state();

struct C6Bounds {
  Rational lower, upper;      // biseparable up to lower; entangled above upper
  Decomposition at_lower;     // verified decomposition of the lower-bound state
};

/// Six-qubit linear-cluster white-noise bounds (11/43, 51/179) with an
/// explicit biseparable decomposition at the lower bound.
C6Bounds c6_bounds();

/// Full dispatch: GHZ-class graphs use the max-weight criterion, four-qubit
/// cluster-class graphs the complete cluster decision, Y-shaped graphs the
/// one-Bell-pair LP, and everything else the PPT-mixture LP (where a feasible
/// answer restricted to one-Bell-pair cuts still certifies biseparability).
Verdict classify(const GraphDiagonalState& s, bool restrict_1bp = false);

/// Four-qubit cluster-diagonal state that is PPT across the two-Bell-pair cut
/// AD|BC yet entangled across it; still biseparable. Uniform mixture of six
/// basis labels.
GraphDiagonalState counterexample_state();

}  // namespace graphsep
