#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toric/covers.hpp"
#include "toric/layers.hpp"

namespace toric {

/// Betti numbers of the complement, b_0..b_d.
struct PoincarePolynomial {
  std::vector<Int> coeffs;

  const Int& betti(int k) const {
    static const Int zero(0);
    return k < int(coeffs.size()) ? coeffs[k] : zero;
  }
};

/// P(t) = (-t)^d q(-(t+1)/t), expanded exactly. q constant-first, degree <= d.
/// Throws if any coefficient comes out negative (not an arrangement
/// characteristic polynomial).
PoincarePolynomial poincare(const std::vector<Int>& q, int d);

/// Evidence that the complement cohomology is not generated in degree 1.
struct NonGenerationWitness {
  enum class Kind { BettiInequality, DeckOrbit };
  Kind kind = Kind::BettiInequality;

  // BettiInequality: b2 > b1(b1-1)/2
  Int b1, b2;

  // DeckOrbit: a nonsingleton deck orbit of 0-dimensional layers of the
  // lifted arrangement, all lifted hypersurfaces setwise invariant
  std::optional<CoverMatrix> cover;
  std::vector<Layer> orbit;

  std::string justification;
};

/// One-sided test: witness iff b2 > C(b1, 2); absence proves nothing.
std::optional<NonGenerationWitness> betti_witness(const PoincarePolynomial& p);

/// Lifts arr through m, verifies each lifted hypersurface is setwise
/// invariant under the deck group, and looks for a deck orbit of size >= 2
/// on the 0-dimensional layers. Requires arr central, essential, primitive.
std::optional<NonGenerationWitness> orbit_witness(const ToricArrangement& arr,
                                                  const CoverMatrix& m);

/// No-broken-circuit index sets for an ordered list of characters:
/// independent A such that no i < min(A) makes A + {i} dependent.
/// Sorted by size, then lexicographically.
std::vector<std::vector<int>> nbc_sets(const std::vector<IntVec>& characters);

/// (A, B) with w a connected component of the A-intersection, A and B
/// disjoint, A + B independent. sign = parity of the shuffle of (A, B)
/// into ascending order.
struct AdaptedPair {
  std::vector<int> a;
  std::vector<int> b;
  int sign = 1;

  int degree() const { return int(a.size() + b.size()); }
};

std::vector<AdaptedPair> adapted_pairs(const ToricArrangement& arr, const Layer& w);

}  // namespace toric
