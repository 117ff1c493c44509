#include "toric/layers.hpp"

#include <algorithm>
#include <stdexcept>

namespace toric {

int cmp(const Layer& a, const Layer& b) {
  if (a.ambient_rank != b.ambient_rank) return a.ambient_rank < b.ambient_rank ? -1 : 1;
  if (a.codim() != b.codim()) return a.codim() < b.codim() ? -1 : 1;
  int c = cmp(a.gamma, b.gamma);
  if (c != 0) return c;
  return cmp(a.psi, b.psi);
}

Layer ambient_layer(int rank) { return Layer{IntMatrix(0, rank), {}, rank}; }

Layer translate(const Layer& l, const TorsionVector& u) {
  if (int(u.size()) != l.ambient_rank) throw std::invalid_argument("translation point rank mismatch");
  Layer out = l;
  for (int i = 0; i < l.codim(); ++i) out.psi[i] = mod1(l.psi[i] + dot(l.gamma.row(i), u));
  return out;
}

std::vector<Layer> solve_torsion_system(const std::vector<IntVec>& rows, const RatVec& targets,
                                        int rank) {
  int m = int(rows.size());
  if (m == 0) return {ambient_layer(rank)};
  IntMatrix e = IntMatrix::from_rows(rows);
  IntMatrix g = saturate(e);
  int k = g.rows();
  if (k == 0) {
    // all-zero equations: consistent iff every target is integral
    for (const Rat& t : targets)
      if (mod1(t) != 0) return {};
    return {ambient_layer(rank)};
  }
  IntMatrix a(m, k);
  for (int i = 0; i < m; ++i) {
    auto coeffs = solve_in_hnf_basis(g, rows[i]);
    if (!coeffs) throw std::logic_error("equation row escapes its saturation");
    for (int j = 0; j < k; ++j) a.at(i, j) = (*coeffs)[j];
  }
  SmithForm f = snf(a);
  // c = u * targets
  RatVec c(m, Rat(0));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (f.u.at(i, j) != 0) c[i] += Rat(f.u.at(i, j)) * targets[j];
  std::vector<Int> div = f.divisors();  // length k, all nonzero (a has full column rank)
  for (int i = k; i < m; ++i)
    if (mod1(c[i]) != 0) return {};
  std::vector<Layer> out;
  std::vector<Int> idx(k, 0);
  while (true) {
    RatVec z(k);
    for (int i = 0; i < k; ++i) z[i] = (c[i] + Rat(idx[i])) / Rat(div[i]);
    RatVec psi(k, Rat(0));
    for (int r = 0; r < k; ++r) {
      for (int i = 0; i < k; ++i)
        if (f.v.at(r, i) != 0) psi[r] += Rat(f.v.at(r, i)) * z[i];
      psi[r] = mod1(psi[r]);
    }
    out.push_back(Layer{g, std::move(psi), rank});
    int pos = k - 1;
    while (pos >= 0 && idx[pos] + 1 == div[pos]) idx[pos--] = 0;
    if (pos < 0) break;
    idx[pos] += 1;
  }
  std::sort(out.begin(), out.end(), [](const Layer& x, const Layer& y) { return cmp(x, y) < 0; });
  return out;
}

std::vector<Layer> components(const ToricArrangement& arr, const std::vector<int>& s) {
  std::vector<IntVec> rows;
  RatVec targets;
  for (int i : s) {
    rows.push_back(arr.character(i));
    targets.push_back(arr.offset(i));
  }
  return solve_torsion_system(rows, targets, arr.rank);
}

bool layer_leq(const Layer& l1, const Layer& l2) {
  if (l1.ambient_rank != l2.ambient_rank) throw std::invalid_argument("ambient rank mismatch");
  for (int i = 0; i < l1.codim(); ++i) {
    auto coeffs = solve_in_hnf_basis(l2.gamma, l1.gamma.row(i));
    if (!coeffs) return false;
    if (mod1(dot(*coeffs, l2.psi)) != mod1(l1.psi[i])) return false;
  }
  return true;
}

bool layer_in_hypersurface(const Layer& l, const IntVec& chi, const Rat& offset) {
  auto coeffs = solve_in_hnf_basis(l.gamma, chi);
  if (!coeffs) return false;
  return mod1(dot(*coeffs, l.psi)) == mod1(offset);
}

namespace {

LayerPoset finish_poset(int rank, std::vector<Layer> layers) {
  std::sort(layers.begin(), layers.end(),
            [](const Layer& x, const Layer& y) { return cmp(x, y) < 0; });
  layers.erase(std::unique(layers.begin(), layers.end()), layers.end());
  LayerPoset lp;
  lp.ambient_rank = rank;
  lp.layers = std::move(layers);
  int n = lp.size();
  lp.leq.assign(n, std::vector<char>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) lp.leq[i][j] = layer_leq(lp.layers[i], lp.layers[j]) ? 1 : 0;
  lp.mobius = posets::mobius_from_bottom(to_finite_poset(lp));
  return lp;
}

}  // namespace

LayerPoset layer_poset(const ToricArrangement& arr) {
  auto errors = validate(arr);
  if (!errors.empty()) throw std::invalid_argument("invalid arrangement: " + errors.front());
  int n = arr.size();
  std::vector<Layer> all;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) s.push_back(i);
    for (Layer& l : components(arr, s)) all.push_back(std::move(l));
  }
  return finish_poset(arr.rank, std::move(all));
}

LayerPoset layer_poset_by_atom_joins(const ToricArrangement& arr) {
  auto errors = validate(arr);
  if (!errors.empty()) throw std::invalid_argument("invalid arrangement: " + errors.front());
  std::vector<Layer> all{ambient_layer(arr.rank)};
  std::vector<Layer> frontier = all;
  while (!frontier.empty()) {
    std::vector<Layer> next;
    for (const Layer& l : frontier) {
      for (int i = 0; i < arr.size(); ++i) {
        if (layer_in_hypersurface(l, arr.character(i), arr.offset(i))) continue;
        std::vector<IntVec> rows = l.gamma.row_list();
        RatVec targets = l.psi;
        rows.push_back(arr.character(i));
        targets.push_back(arr.offset(i));
        for (Layer& piece : solve_torsion_system(rows, targets, arr.rank)) {
          bool seen = std::find(all.begin(), all.end(), piece) != all.end() ||
                      std::find(next.begin(), next.end(), piece) != next.end();
          if (!seen) next.push_back(std::move(piece));
        }
      }
    }
    for (Layer& l : next) all.push_back(l);
    frontier = std::move(next);
  }
  return finish_poset(arr.rank, std::move(all));
}

posets::FinitePoset to_finite_poset(const LayerPoset& lp) {
  std::vector<std::string> labels(lp.size());
  for (int i = 0; i < lp.size(); ++i)
    labels[i] = "L" + std::to_string(i) + "(dim " + std::to_string(lp.dim(i)) + ")";
  return posets::FinitePoset{lp.size(), lp.leq, std::move(labels)};
}

std::vector<Int> char_poly(const LayerPoset& lp) {
  std::vector<Int> q(lp.ambient_rank + 1, Int(0));
  for (int i = 0; i < lp.size(); ++i) q[lp.dim(i)] += lp.mobius[i];
  return q;
}

std::vector<Layer> zero_dim_layers(const LayerPoset& lp) {
  std::vector<Layer> out;
  for (const Layer& l : lp.layers)
    if (l.dim() == 0) out.push_back(l);
  return out;
}

std::vector<int> localize(const ToricArrangement& arr, const Layer& l) {
  std::vector<int> out;
  for (int i = 0; i < arr.size(); ++i)
    if (layer_in_hypersurface(l, arr.character(i), arr.offset(i))) out.push_back(i);
  return out;
}

bool is_layer_of(const ToricArrangement& arr, const Layer& l) {
  if (l.ambient_rank != arr.rank) return false;
  auto comps = components(arr, localize(arr, l));
  return std::find(comps.begin(), comps.end(), l) != comps.end();
}

}  // namespace toric
