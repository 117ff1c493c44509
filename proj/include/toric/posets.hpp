#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toric/int_matrix.hpp"

namespace toric::posets {

/// Finite poset on {0..size-1} given by its full order relation.
struct FinitePoset {
  int size = 0;
  std::vector<std::vector<char>> leq;  // leq[i][j] <=> i <= j
  std::vector<std::string> labels;

  bool less(int i, int j) const { return i != j && leq[i][j]; }
};

FinitePoset make_poset(int size, std::vector<std::vector<char>> leq,
                       std::vector<std::string> labels = {});

bool is_partial_order(const FinitePoset& p);

/// Index of the unique minimum, or -1.
int bottom(const FinitePoset& p);
std::vector<int> atoms(const FinitePoset& p);
std::vector<int> maximal_elements(const FinitePoset& p);
/// cover[i][j] <=> i is covered by j.
std::vector<std::vector<char>> cover_relation(const FinitePoset& p);
/// Longest chain below each element (0 for minimal elements).
std::vector<int> heights(const FinitePoset& p);
/// Longest chain length in p.
int length(const FinitePoset& p);
/// All maximal chains share the same length.
bool is_pure(const FinitePoset& p);
bool is_lattice(const FinitePoset& p);

Int mobius(const FinitePoset& p, int x, int y);
/// mu(bottom, x) for all x; requires a unique bottom.
std::vector<Int> mobius_from_bottom(const FinitePoset& p);

/// Minimal upper bounds of x and y (possibly empty), ascending.
std::vector<int> min_upper_bounds(const FinitePoset& p, int x, int y);
std::vector<int> max_lower_bounds(const FinitePoset& p, int x, int y);

/// Down-closure of a set of elements.
std::vector<int> down_closure(const FinitePoset& p, const std::vector<int>& gens);
bool is_order_ideal(const FinitePoset& p, const std::vector<int>& ideal);

/// Subposet induced on `elements` (sorted ascending); element i of the
/// result corresponds to elements[i] of p.
FinitePoset restrict(const FinitePoset& p, const std::vector<int>& elements);

/// Pure, join-closed order ideal whose outside atom pairs join above one
/// of the ideal's atoms. `ideal` must be an order ideal containing the
/// bottom (throws otherwise).
bool is_M_ideal(const FinitePoset& p, const std::vector<int>& ideal);
/// M-ideal with unique joins against every outside atom.
bool is_TM_ideal(const FinitePoset& p, const std::vector<int>& ideal);

struct SupersolvabilityCertificate {
  /// chain[i] = I_{i+1} as sorted element indices; chain.back() is the
  /// whole poset. Each ideal is an M-ideal of the next one in the chain.
  std::vector<std::vector<int>> chain;
  std::vector<bool> ideal_is_m;
  std::vector<bool> ideal_is_tm;
  bool strict = false;
};

/// Chain search; requires a pure poset with a unique bottom (throws
/// std::invalid_argument otherwise). dims, when given, must be consistent
/// with element heights (dims[i] = length(p) - height(i)).
std::optional<SupersolvabilityCertificate> supersolvable(
    const FinitePoset& p, const std::vector<int>& dims = {});
std::optional<SupersolvabilityCertificate> strictly_supersolvable(
    const FinitePoset& p, const std::vector<int>& dims = {});

/// Re-checks a certificate level by level, recomputing every flag.
bool validate_certificate(const FinitePoset& p, const SupersolvabilityCertificate& cert,
                          bool require_strict);

/// Pi_n: set partitions of {1..n} ordered by refinement. Size Bell(n).
FinitePoset partition_lattice(int n);

/// Order-preserving bijection p -> q (both directions), or nullopt.
std::optional<std::vector<int>> isomorphic(const FinitePoset& p, const FinitePoset& q);

}  // namespace toric::posets
