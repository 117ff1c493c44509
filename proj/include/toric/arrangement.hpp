#pragma once

#include <string>
#include <vector>

#include "toric/int_matrix.hpp"

namespace toric {

/// Level set of a character: chi(t) = e^{2 pi i offset}.
struct Hypersurface {
  IntVec character;
  Rat offset;  // in [0, 1)

  bool operator==(const Hypersurface& other) const {
    return character == other.character && offset == other.offset;
  }
};

/// Ordered family of hypersurfaces in (C*)^rank. The order is part of the
/// identity: it fixes the ground order for no-broken-circuit sets.
struct ToricArrangement {
  int rank = 0;
  std::vector<Hypersurface> hypersurfaces;

  int size() const { return int(hypersurfaces.size()); }
  const IntVec& character(int i) const { return hypersurfaces[i].character; }
  const Rat& offset(int i) const { return hypersurfaces[i].offset; }
  /// Characters as rows of an n x rank matrix.
  IntMatrix character_matrix() const;
};

/// Every invariant violation, one message per problem; empty means valid.
std::vector<std::string> validate(const ToricArrangement& arr);

/// Central type-A arrangement in rank n: characters e_i - e_j for i < j,
/// ordered lexicographically by (i, j).
ToricArrangement braid(int n);

bool is_central(const ToricArrangement& arr);
bool is_primitive(const ToricArrangement& arr);
bool is_essential(const ToricArrangement& arr);

struct Essentialization {
  ToricArrangement arrangement;  // rank = rank of the character span
  IntMatrix basis;               // HNF basis of the saturated span, rows in old coordinates
};

/// Rewrite a central arrangement in an HNF basis of the saturation of its
/// character span. The layer poset is unchanged up to isomorphism.
Essentialization essentialize(const ToricArrangement& arr);

}  // namespace toric
