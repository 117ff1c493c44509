#pragma once

#include <optional>
#include <vector>

#include "toric/arrangement.hpp"
#include "toric/layers.hpp"
#include "toric/normal_forms.hpp"

namespace toric {

/// Nonsingular integer matrix defining a finite cover of the torus; the
/// cover degree is |det|. Characters pull back by chi -> m*chi, torsion
/// points push forward through the transpose.
struct CoverMatrix {
  IntMatrix m;

  explicit CoverMatrix(IntMatrix mat);
  int rank() const { return m.rows(); }
  Int degree() const { return abs(m.det()); }

  bool operator==(const CoverMatrix& other) const { return m == other.m; }
};

/// Deck transformations as torsion points of the covering torus.
struct DeckGroup {
  std::vector<TorsionVector> elements;  // closed under addition mod 1, contains 0

  int order() const { return int(elements.size()); }
  bool contains(const TorsionVector& u) const;
};

DeckGroup deck_group(const CoverMatrix& m);

/// Translate a layer by a deck element; throws if u is not in g.
Layer deck_translate(const Layer& l, const TorsionVector& u, const DeckGroup& g);

/// Orbit partition of `layers` under translation by g; orbits listed by
/// first appearance, members ascending.
std::vector<std::vector<int>> orbits_on(const std::vector<Layer>& layers, const DeckGroup& g);

/// Central lift: characters m*chi_i (possibly imprimitive), offsets 0.
ToricArrangement lift_central(const ToricArrangement& arr, const CoverMatrix& m);

/// Component-resolved lift: each (chi, r) becomes content(m*chi) primitive
/// hypersurfaces (m*chi / a, (r + k)/a). Always primitive.
ToricArrangement lift(const ToricArrangement& arr, const CoverMatrix& m);

/// Line of P(F_p^d), normalized so the first nonzero coordinate is 1.
struct ProjPoint {
  unsigned p = 0;
  std::vector<unsigned> coords;

  bool operator==(const ProjPoint& other) const = default;
  bool operator<(const ProjPoint& other) const { return coords < other.coords; }
};

ProjPoint projectivize(const IntVec& chi, unsigned p);

/// Distinct lines spanned by the characters mod p, sorted.
std::vector<ProjPoint> phi_p(const ToricArrangement& arr, unsigned p);

/// (p^d - 1)/(p - 1), the number of lines of F_p^d.
Int line_count(unsigned p, int d);

bool is_phi_p_surjective(const ToricArrangement& arr, unsigned p);

/// Lexicographically smallest line outside the image of phi_p, if any.
std::optional<ProjPoint> missed_line(const ToricArrangement& arr, unsigned p);

/// Degree-p cover whose central lift stays primitive: diag(p,1,...,1) * U
/// with U*v = e1 for a missed line v. Absent iff phi_p is surjective.
std::optional<CoverMatrix> build_p_cover(const ToricArrangement& arr, unsigned p);

/// All primes with phi_p surjective. Finite and complete: only p with
/// line_count(p, d) <= n can be surjective. Requires a primitive
/// arrangement of rank >= 2 (or empty).
std::vector<unsigned> exceptional_primes(const ToricArrangement& arr);

/// All d x d row-HNF matrices of the given determinant: one representative
/// per sublattice of that index, in a fixed deterministic order.
std::vector<CoverMatrix> sublattice_covers(int d, const Int& determinant);

bool is_prime(unsigned p);

}  // namespace toric
