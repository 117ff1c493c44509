#pragma once

#include <optional>

#include "toric/int_matrix.hpp"

namespace toric {

/// Row-style Hermite form: h = u * input, u unimodular, pivots positive,
/// entries above each pivot reduced into [0, pivot). Zero rows sink below
/// the echelon. h has the same shape as the input.
struct HermiteForm {
  IntMatrix h;
  IntMatrix u;
};

/// u * input * v = s, with s diagonal, nonnegative, each entry dividing the next.
struct SmithForm {
  IntMatrix u;
  IntMatrix s;
  IntMatrix v;
  IntMatrix v_inv;

  std::vector<Int> divisors() const;
};

HermiteForm hnf(const IntMatrix& m);

/// hnf with zero rows dropped; rows form a basis of the row lattice.
IntMatrix hnf_basis(const IntMatrix& m);

SmithForm snf(const IntMatrix& m);

/// Basis (in HNF) of the saturation of the row lattice: all integer vectors
/// in the rational row span. Idempotent.
IntMatrix saturate(const IntMatrix& basis);

/// Unimodular U with U*v = e1. Requires content(v) = 1.
IntMatrix complete_to_unimodular(const IntVec& v);

/// All u in (Q/Z)^d with m*u integral; |result| = |det m|. Requires det != 0.
/// Deterministic canonical order.
std::vector<TorsionVector> torsion_kernel(const IntMatrix& m);

/// Integer coefficients a with a*G = v for a row-HNF basis G of full row
/// rank, or nullopt if v is not in the row lattice.
std::optional<IntVec> solve_in_hnf_basis(const IntMatrix& g, const IntVec& v);

}  // namespace toric
