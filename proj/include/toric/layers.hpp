#pragma once

#include <vector>

#include "toric/arrangement.hpp"
#include "toric/normal_forms.hpp"
#include "toric/posets.hpp"

namespace toric {

/// A coset of a subtorus in canonical form: gamma is the row-HNF basis of
/// the saturated lattice of characters vanishing on the direction, psi the
/// torsion values on those rows. Equal layers have identical fields.
struct Layer {
  IntMatrix gamma;  // k x d, saturated row-HNF, full row rank
  RatVec psi;       // k values in [0, 1)
  int ambient_rank = 0;

  int codim() const { return gamma.rows(); }
  int dim() const { return ambient_rank - gamma.rows(); }

  bool operator==(const Layer& other) const {
    return ambient_rank == other.ambient_rank && gamma == other.gamma && psi == other.psi;
  }
};

int cmp(const Layer& a, const Layer& b);

Layer ambient_layer(int rank);

/// Translate a layer by a torus point: psi shifts by the values of gamma's
/// rows at u.
Layer translate(const Layer& l, const TorsionVector& u);

/// Connected components of the solution set of `rows[i] . x = targets[i]
/// (mod 1)`, each in canonical form; empty when inconsistent.
std::vector<Layer> solve_torsion_system(const std::vector<IntVec>& rows, const RatVec& targets,
                                        int rank);

/// Components of the intersection over hypersurface subset s (indices into
/// arr). s empty yields the ambient layer.
std::vector<Layer> components(const ToricArrangement& arr, const std::vector<int>& s);

/// l1 <= l2 iff l1 contains l2 (reverse inclusion).
bool layer_leq(const Layer& l1, const Layer& l2);

/// True iff the layer lies inside hypersurface (chi, offset).
bool layer_in_hypersurface(const Layer& l, const IntVec& chi, const Rat& offset);

struct LayerPoset {
  int ambient_rank = 0;
  std::vector<Layer> layers;  // canonical order; index 0 = ambient torus
  std::vector<std::vector<char>> leq;
  std::vector<Int> mobius;  // mu(bottom, -) per layer

  int size() const { return int(layers.size()); }
  int dim(int i) const { return layers[i].dim(); }
};

LayerPoset layer_poset(const ToricArrangement& arr);

/// Same poset computed by closing atoms under intersection instead of
/// enumerating all index subsets; must agree with layer_poset exactly.
LayerPoset layer_poset_by_atom_joins(const ToricArrangement& arr);

posets::FinitePoset to_finite_poset(const LayerPoset& lp);

/// Characteristic polynomial sum_W mu(0,W) t^{dim W}, constant term first.
std::vector<Int> char_poly(const LayerPoset& lp);

std::vector<Layer> zero_dim_layers(const LayerPoset& lp);

/// Indices of hypersurfaces containing the layer, in arrangement order;
/// the ground set of the localized linear arrangement.
std::vector<int> localize(const ToricArrangement& arr, const Layer& l);

/// True iff l occurs as a layer of arr.
bool is_layer_of(const ToricArrangement& arr, const Layer& l);

}  // namespace toric
