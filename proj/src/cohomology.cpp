#include "toric/cohomology.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace toric {

PoincarePolynomial poincare(const std::vector<Int>& q, int d) {
  if (int(q.size()) > d + 1) {
    for (size_t k = d + 1; k < q.size(); ++k)
      if (q[k] != 0) throw std::invalid_argument("characteristic polynomial degree exceeds d");
  }
  // (-t)^d q(-(t+1)/t) = sum_k q_k (-1)^{d+k} (t+1)^k t^{d-k}
  std::vector<Int> out(d + 1, Int(0));
  for (int k = 0; k < int(q.size()) && k <= d; ++k) {
    if (q[k] == 0) continue;
    Int sign = ((d + k) % 2 == 0) ? 1 : -1;
    Int binom = 1;
    for (int j = 0; j <= k; ++j) {
      out[d - k + j] += sign * q[k] * binom;
      binom = binom * (k - j) / (j + 1);
    }
  }
  for (const Int& c : out)
    if (c < 0)
      throw std::domain_error("Poincare polynomial has a negative coefficient; input is not an "
                              "arrangement characteristic polynomial");
  return PoincarePolynomial{std::move(out)};
}

std::optional<NonGenerationWitness> betti_witness(const PoincarePolynomial& p) {
  const Int& b1 = p.betti(1);
  const Int& b2 = p.betti(2);
  Int bound = b1 * (b1 - 1) / 2;
  if (b2 <= bound) return std::nullopt;
  NonGenerationWitness w;
  w.kind = NonGenerationWitness::Kind::BettiInequality;
  w.b1 = b1;
  w.b2 = b2;
  w.justification = "b2 = " + b2.get_str() + " exceeds C(b1, 2) = " + bound.get_str() +
                    " for b1 = " + b1.get_str() +
                    "; degree-1 classes cannot span degree 2";
  return w;
}

std::optional<NonGenerationWitness> orbit_witness(const ToricArrangement& arr,
                                                  const CoverMatrix& m) {
  if (!is_central(arr)) throw std::invalid_argument("orbit_witness requires a central arrangement");
  if (!is_essential(arr))
    throw std::invalid_argument("orbit_witness requires an essential arrangement");
  if (!is_primitive(arr))
    throw std::invalid_argument("orbit_witness requires a primitive arrangement");
  ToricArrangement lifted = lift(arr, m);
  DeckGroup deck = deck_group(m);
  // setwise invariance: translating any component of the lift of H_i must
  // land on a component of the same H_i
  int at = 0;
  for (int i = 0; i < arr.size(); ++i) {
    Int a = content(m.m.mul(arr.character(i)));
    std::vector<Rat> offsets;
    for (Int k = 0; k < a; ++k) offsets.push_back(lifted.offset(at + int(k.get_si())));
    const IntVec& chi_u = lifted.character(at);
    for (const TorsionVector& u : deck.elements)
      for (const Rat& r : offsets) {
        Rat shifted = mod1(r + dot(chi_u, u));
        if (std::find(offsets.begin(), offsets.end(), shifted) == offsets.end())
          throw std::invalid_argument("lifted hypersurface not deck-invariant");
      }
    at += int(a.get_si());
  }
  LayerPoset lp = layer_poset(lifted);
  std::vector<Layer> points = zero_dim_layers(lp);
  for (const auto& orbit : orbits_on(points, deck)) {
    if (orbit.size() < 2) continue;
    NonGenerationWitness w;
    w.kind = NonGenerationWitness::Kind::DeckOrbit;
    w.cover = m;
    for (int idx : orbit) w.orbit.push_back(points[idx]);
    w.justification = "deck orbit of " + std::to_string(orbit.size()) +
                      " zero-dimensional layers under a deck group of order " +
                      std::to_string(deck.order()) + "; all lifted hypersurfaces setwise invariant";
    return w;
  }
  return std::nullopt;
}

namespace {

int rank_of(const std::vector<IntVec>& chars, const std::vector<int>& idx) {
  if (idx.empty()) return 0;
  std::vector<IntVec> rows;
  for (int i : idx) rows.push_back(chars[i]);
  return IntMatrix::from_rows(rows).rank();
}

bool is_independent(const std::vector<IntVec>& chars, const std::vector<int>& idx) {
  return rank_of(chars, idx) == int(idx.size());
}

}  // namespace

std::vector<std::vector<int>> nbc_sets(const std::vector<IntVec>& characters) {
  int n = int(characters.size());
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    // cur is independent; nbc iff no i below min(cur) makes it dependent
    bool nbc = true;
    for (int i = 0; nbc && !cur.empty() && i < cur.front(); ++i) {
      std::vector<int> ext = cur;
      ext.insert(ext.begin(), i);
      if (!is_independent(characters, ext)) nbc = false;
    }
    if (nbc) out.push_back(cur);
    for (int i = start; i < n; ++i) {
      cur.push_back(i);
      if (is_independent(characters, cur)) self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

std::vector<AdaptedPair> adapted_pairs(const ToricArrangement& arr, const Layer& w) {
  if (!is_layer_of(arr, w)) throw std::invalid_argument("w is not a layer of the arrangement");
  std::vector<IntVec> chars;
  for (const auto& h : arr.hypersurfaces) chars.push_back(h.character);
  std::vector<int> loc = localize(arr, w);
  int n = arr.size();
  std::vector<AdaptedPair> out;
  for (unsigned mask = 0; mask < (1u << loc.size()); ++mask) {
    std::vector<int> a;
    for (size_t i = 0; i < loc.size(); ++i)
      if (mask & (1u << i)) a.push_back(loc[i]);
    auto comps = components(arr, a);
    if (std::find(comps.begin(), comps.end(), w) == comps.end()) continue;
    // extend by disjoint B with A + B independent
    std::vector<char> in_a(n, 0);
    for (int i : a) in_a[i] = 1;
    std::vector<int> b;
    auto rec = [&](auto&& self, int start) -> void {
      std::vector<int> all = a;
      all.insert(all.end(), b.begin(), b.end());
      std::sort(all.begin(), all.end());
      if (!is_independent(chars, all)) return;
      int inversions = 0;
      for (int x : a)
        for (int y : b)
          if (y < x) ++inversions;
      out.push_back(AdaptedPair{a, b, inversions % 2 == 0 ? 1 : -1});
      for (int i = start; i < n; ++i) {
        if (in_a[i]) continue;
        b.push_back(i);
        self(self, i + 1);
        b.pop_back();
      }
    };
    rec(rec, 0);
  }
  std::sort(out.begin(), out.end(), [](const AdaptedPair& x, const AdaptedPair& y) {
    if (x.a != y.a) return x.a < y.a;
    return x.b < y.b;
  });
  return out;
}

}  // namespace toric
