#include "toric/posets.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace toric::posets {

FinitePoset make_poset(int size, std::vector<std::vector<char>> leq,
                       std::vector<std::string> labels) {
  FinitePoset p{size, std::move(leq), std::move(labels)};
  if (p.labels.empty()) {
    p.labels.resize(size);
    for (int i = 0; i < size; ++i) p.labels[i] = "e" + std::to_string(i);
  }
  if (!is_partial_order(p)) throw std::invalid_argument("relation is not a partial order");
  return p;
}

bool is_partial_order(const FinitePoset& p) {
  int n = p.size;
  if (int(p.leq.size()) != n) return false;
  for (const auto& row : p.leq)
    if (int(row.size()) != n) return false;
  for (int i = 0; i < n; ++i)
    if (!p.leq[i][i]) return false;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i != j && p.leq[i][j] && p.leq[j][i]) return false;
      if (!p.leq[i][j]) continue;
      for (int k = 0; k < n; ++k)
        if (p.leq[j][k] && !p.leq[i][k]) return false;
    }
  return true;
}

int bottom(const FinitePoset& p) {
  int b = -1;
  for (int i = 0; i < p.size; ++i) {
    bool min = true;
    for (int j = 0; j < p.size && min; ++j)
      if (p.less(j, i)) min = false;
    if (min) {
      if (b >= 0) return -1;
      b = i;
    }
  }
  return b;
}

std::vector<int> atoms(const FinitePoset& p) {
  int b = bottom(p);
  if (b < 0) throw std::invalid_argument("poset has no unique bottom");
  auto cov = cover_relation(p);
  std::vector<int> out;
  for (int i = 0; i < p.size; ++i)
    if (cov[b][i]) out.push_back(i);
  return out;
}

std::vector<int> maximal_elements(const FinitePoset& p) {
  std::vector<int> out;
  for (int i = 0; i < p.size; ++i) {
    bool max = true;
    for (int j = 0; j < p.size && max; ++j)
      if (p.less(i, j)) max = false;
    if (max) out.push_back(i);
  }
  return out;
}

std::vector<std::vector<char>> cover_relation(const FinitePoset& p) {
  int n = p.size;
  std::vector<std::vector<char>> cov(n, std::vector<char>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!p.less(i, j)) continue;
      bool covers = true;
      for (int k = 0; k < n && covers; ++k)
        if (p.less(i, k) && p.less(k, j)) covers = false;
      cov[i][j] = covers;
    }
  return cov;
}

std::vector<int> heights(const FinitePoset& p) {
  int n = p.size;
  std::vector<int> h(n, 0);
  // order by down-set size gives a linear extension
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> downsize(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (p.less(j, i)) ++downsize[i];
  std::sort(order.begin(), order.end(), [&](int a, int b) { return downsize[a] < downsize[b]; });
  for (int i : order)
    for (int j = 0; j < n; ++j)
      if (p.less(j, i)) h[i] = std::max(h[i], h[j] + 1);
  return h;
}

int length(const FinitePoset& p) {
  auto h = heights(p);
  return h.empty() ? 0 : *std::max_element(h.begin(), h.end());
}

bool is_pure(const FinitePoset& p) {
  auto h = heights(p);
  int len = h.empty() ? 0 : *std::max_element(h.begin(), h.end());
  auto cov = cover_relation(p);
  for (int i = 0; i < p.size; ++i)
    for (int j = 0; j < p.size; ++j)
      if (cov[i][j] && h[j] != h[i] + 1) return false;
  for (int m : maximal_elements(p))
    if (h[m] != len) return false;
  return true;
}

bool is_lattice(const FinitePoset& p) {
  for (int i = 0; i < p.size; ++i)
    for (int j = i; j < p.size; ++j)
      if (min_upper_bounds(p, i, j).size() != 1 || max_lower_bounds(p, i, j).size() != 1)
        return false;
  return true;
}

Int mobius(const FinitePoset& p, int x, int y) {
  if (!p.leq[x][y]) throw std::invalid_argument("mobius requires x <= y");
  // interval elements sorted by down-set size inside the interval
  std::vector<int> iv;
  for (int z = 0; z < p.size; ++z)
    if (p.leq[x][z] && p.leq[z][y]) iv.push_back(z);
  std::map<int, Int> mu;
  std::vector<int> down_count(p.size, 0);
  for (int z : iv)
    for (int w : iv)
      if (p.leq[w][z]) ++down_count[z];
  std::sort(iv.begin(), iv.end(),
            [&](int a, int b) { return down_count[a] < down_count[b]; });
  for (int z : iv) {
    if (z == x) {
      mu[z] = 1;
      continue;
    }
    Int s = 0;
    for (int w : iv)
      if (p.leq[w][z] && w != z) s += mu[w];
    mu[z] = -s;
  }
  return mu[y];
}

std::vector<Int> mobius_from_bottom(const FinitePoset& p) {
  int b = bottom(p);
  if (b < 0) throw std::invalid_argument("poset has no unique bottom");
  auto h = heights(p);
  std::vector<int> order(p.size);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int c) { return h[a] < h[c]; });
  std::vector<Int> mu(p.size, 0);
  for (int z : order) {
    if (z == b) {
      mu[z] = 1;
      continue;
    }
    Int s = 0;
    for (int w = 0; w < p.size; ++w)
      if (p.leq[w][z] && w != z) s += mu[w];
    mu[z] = -s;
  }
  return mu;
}

std::vector<int> min_upper_bounds(const FinitePoset& p, int x, int y) {
  std::vector<int> ub;
  for (int z = 0; z < p.size; ++z)
    if (p.leq[x][z] && p.leq[y][z]) ub.push_back(z);
  std::vector<int> out;
  for (int z : ub) {
    bool minimal = true;
    for (int w : ub)
      if (w != z && p.leq[w][z]) { minimal = false; break; }
    if (minimal) out.push_back(z);
  }
  return out;
}

std::vector<int> max_lower_bounds(const FinitePoset& p, int x, int y) {
  std::vector<int> lb;
  for (int z = 0; z < p.size; ++z)
    if (p.leq[z][x] && p.leq[z][y]) lb.push_back(z);
  std::vector<int> out;
  for (int z : lb) {
    bool maximal = true;
    for (int w : lb)
      if (w != z && p.leq[z][w]) { maximal = false; break; }
    if (maximal) out.push_back(z);
  }
  return out;
}

std::vector<int> down_closure(const FinitePoset& p, const std::vector<int>& gens) {
  std::vector<char> in(p.size, 0);
  for (int g : gens)
    for (int z = 0; z < p.size; ++z)
      if (p.leq[z][g]) in[z] = 1;
  std::vector<int> out;
  for (int z = 0; z < p.size; ++z)
    if (in[z]) out.push_back(z);
  return out;
}

bool is_order_ideal(const FinitePoset& p, const std::vector<int>& ideal) {
  std::vector<char> in(p.size, 0);
  for (int i : ideal) in[i] = 1;
  for (int i : ideal)
    for (int z = 0; z < p.size; ++z)
      if (p.leq[z][i] && !in[z]) return false;
  return true;
}

FinitePoset restrict(const FinitePoset& p, const std::vector<int>& elements) {
  int m = int(elements.size());
  std::vector<std::vector<char>> leq(m, std::vector<char>(m));
  std::vector<std::string> labels(m);
  for (int i = 0; i < m; ++i) {
    labels[i] = p.labels[elements[i]];
    for (int j = 0; j < m; ++j) leq[i][j] = p.leq[elements[i]][elements[j]];
  }
  return FinitePoset{m, std::move(leq), std::move(labels)};
}

namespace {

struct IdealView {
  std::vector<char> in;
  std::vector<int> elems;
};

IdealView ideal_view(const FinitePoset& p, const std::vector<int>& ideal) {
  IdealView v{std::vector<char>(p.size, 0), ideal};
  std::sort(v.elems.begin(), v.elems.end());
  for (int i : v.elems) v.in[i] = 1;
  int b = bottom(p);
  if (b < 0 || !v.in[b] || !is_order_ideal(p, v.elems))
    throw std::invalid_argument("not an order ideal containing the bottom");
  return v;
}

}  // namespace

bool is_M_ideal(const FinitePoset& p, const std::vector<int>& ideal) {
  IdealView v = ideal_view(p, ideal);
  if (!is_pure(restrict(p, v.elems))) return false;
  for (size_t a = 0; a < v.elems.size(); ++a)
    for (size_t b = a; b < v.elems.size(); ++b)
      for (int z : min_upper_bounds(p, v.elems[a], v.elems[b]))
        if (!v.in[z]) return false;
  std::vector<int> at = atoms(p);
  std::vector<int> inside, outside;
  for (int x : at) (v.in[x] ? inside : outside).push_back(x);
  for (size_t a = 0; a < outside.size(); ++a)
    for (size_t b = a + 1; b < outside.size(); ++b)
      for (int z : min_upper_bounds(p, outside[a], outside[b])) {
        bool dominated = false;
        for (int a3 : inside)
          if (p.less(a3, z)) { dominated = true; break; }
        if (!dominated) return false;
      }
  return true;
}

bool is_TM_ideal(const FinitePoset& p, const std::vector<int>& ideal) {
  if (!is_M_ideal(p, ideal)) return false;
  IdealView v = ideal_view(p, ideal);
  std::vector<int> outside;
  for (int x : atoms(p))
    if (!v.in[x]) outside.push_back(x);
  for (int y : v.elems)
    for (int a : outside)
      if (min_upper_bounds(p, y, a).size() != 1) return false;
  return true;
}

namespace {

// All M-ideals (TM when strict) of length len(p)-1, as sorted index sets.
std::vector<std::vector<int>> level_candidates(const FinitePoset& p, bool strict) {
  auto h = heights(p);
  int len = length(p);
  std::vector<int> top;
  for (int i = 0; i < p.size; ++i)
    if (h[i] == len - 1) top.push_back(i);
  int m = int(top.size());
  std::vector<std::vector<char>> compat(m, std::vector<char>(m, 0));
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      compat[a][b] = compat[b][a] =
          min_upper_bounds(p, top[a], top[b]).empty() ? 1 : 0;
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto emit = [&]() {
    std::vector<int> gens;
    for (int i : cur) gens.push_back(top[i]);
    std::vector<int> ideal = down_closure(p, gens);
    FinitePoset sub = restrict(p, ideal);
    if (length(sub) != len - 1 || !is_pure(sub)) return;
    if (strict ? is_TM_ideal(p, ideal) : is_M_ideal(p, ideal)) out.push_back(std::move(ideal));
  };
  // antichains of top-height elements with pairwise empty joins
  auto rec = [&](auto&& self, int start) -> void {
    for (int i = start; i < m; ++i) {
      bool ok = true;
      for (int j : cur)
        if (!compat[j][i]) { ok = false; break; }
      if (!ok) continue;
      cur.push_back(i);
      emit();
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

// Chain search, top-down. `current` holds sorted global indices of I_{i+1}.
// Stops at length 1: the step {0} in I_1 satisfies the (T)M conditions
// automatically (two atoms of a length-1 ideal have no upper bound in it).
bool chain_search(const FinitePoset& root, const std::vector<int>& current,
                  std::vector<std::vector<int>>& chain, bool strict) {
  FinitePoset sub = restrict(root, current);
  if (length(sub) <= 1) return true;
  for (const auto& local_ideal : level_candidates(sub, strict)) {
    std::vector<int> global;
    for (int i : local_ideal) global.push_back(current[i]);
    chain.push_back(global);
    if (chain_search(root, global, chain, strict)) return true;
    chain.pop_back();
  }
  return false;
}

std::optional<SupersolvabilityCertificate> chain_certificate(const FinitePoset& p,
                                                             const std::vector<int>& dims,
                                                             bool strict) {
  if (bottom(p) < 0) throw std::invalid_argument("supersolvable requires a unique bottom");
  if (!is_pure(p)) throw std::invalid_argument("supersolvable requires a pure poset");
  if (!dims.empty()) {
    auto h = heights(p);
    int len = length(p);
    for (int i = 0; i < p.size; ++i)
      if (dims[i] != len - h[i])
        throw std::invalid_argument("dims inconsistent with element heights");
  }
  std::vector<int> all(p.size);
  std::iota(all.begin(), all.end(), 0);
  if (length(p) == 0) {
    SupersolvabilityCertificate cert;
    cert.strict = true;
    return cert;
  }
  std::vector<std::vector<int>> chain{all};
  if (!chain_search(p, all, chain, strict)) return std::nullopt;
  std::reverse(chain.begin(), chain.end());  // chain[0] = I_1, chain.back() = P
  SupersolvabilityCertificate cert;
  cert.chain = chain;
  for (size_t i = 0; i < chain.size(); ++i) {
    const std::vector<int>& ambient = (i + 1 < chain.size()) ? chain[i + 1] : all;
    FinitePoset sub = restrict(p, ambient);
    std::vector<int> local;
    for (int g : chain[i])
      local.push_back(int(std::lower_bound(ambient.begin(), ambient.end(), g) - ambient.begin()));
    cert.ideal_is_m.push_back(is_M_ideal(sub, local));
    cert.ideal_is_tm.push_back(is_TM_ideal(sub, local));
  }
  cert.strict = std::all_of(cert.ideal_is_tm.begin(), cert.ideal_is_tm.end(),
                            [](bool b) { return b; });
  return cert;
}

}  // namespace

std::optional<SupersolvabilityCertificate> supersolvable(const FinitePoset& p,
                                                         const std::vector<int>& dims) {
  return chain_certificate(p, dims, false);
}

std::optional<SupersolvabilityCertificate> strictly_supersolvable(const FinitePoset& p,
                                                                  const std::vector<int>& dims) {
  return chain_certificate(p, dims, true);
}

bool validate_certificate(const FinitePoset& p, const SupersolvabilityCertificate& cert,
                          bool require_strict) {
  int d = length(p);
  if (d == 0) return cert.chain.empty();
  if (int(cert.chain.size()) != d) return false;
  std::vector<int> all(p.size);
  std::iota(all.begin(), all.end(), 0);
  if (cert.chain.back() != all) return false;
  for (int i = 0; i + 1 < d; ++i) {
    // nested
    for (int g : cert.chain[i])
      if (!std::binary_search(cert.chain[i + 1].begin(), cert.chain[i + 1].end(), g))
        return false;
  }
  for (int i = 0; i < d; ++i) {
    const std::vector<int>& ambient = (i + 1 < d) ? cert.chain[i + 1] : all;
    FinitePoset sub = restrict(p, ambient);
    std::vector<int> local;
    for (int g : cert.chain[i])
      local.push_back(int(std::lower_bound(ambient.begin(), ambient.end(), g) - ambient.begin()));
    if (length(restrict(sub, local)) != i + 1) return false;
    if (!(require_strict ? is_TM_ideal(sub, local) : is_M_ideal(sub, local))) return false;
  }
  return true;
}

FinitePoset partition_lattice(int n) {
  if (n < 1) throw std::invalid_argument("partition_lattice requires n >= 1");
  // restricted growth strings
  std::vector<std::vector<int>> parts;
  std::vector<int> a(n, 0);
  auto rec = [&](auto&& self, int i, int maxb) -> void {
    if (i == n) {
      parts.push_back(a);
      return;
    }
    for (int b = 0; b <= maxb + 1; ++b) {
      a[i] = b;
      self(self, i + 1, std::max(maxb, b));
    }
  };
  rec(rec, 1, 0);
  int m = int(parts.size());
  std::vector<std::vector<char>> leq(m, std::vector<char>(m, 0));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      // i <= j iff partition i refines partition j
      bool refines = true;
      for (int x = 0; x < n && refines; ++x)
        for (int y = x + 1; y < n && refines; ++y)
          if (parts[i][x] == parts[i][y] && parts[j][x] != parts[j][y]) refines = false;
      leq[i][j] = refines;
    }
  std::vector<std::string> labels(m);
  for (int i = 0; i < m; ++i) {
    int nb = *std::max_element(parts[i].begin(), parts[i].end()) + 1;
    std::string s;
    for (int b = 0; b < nb; ++b) {
      if (b) s += '|';
      for (int x = 0; x < n; ++x)
        if (parts[i][x] == b) s += std::to_string(x + 1);
    }
    labels[i] = s;
  }
  return make_poset(m, std::move(leq), std::move(labels));
}

namespace {

// deterministic color refinement on the cover digraph
std::vector<int> stable_colors(const FinitePoset& p) {
  int n = p.size;
  auto h = heights(p);
  auto cov = cover_relation(p);
  std::vector<Int> mu(n, 0);
  if (bottom(p) >= 0) mu = mobius_from_bottom(p);
  std::vector<std::string> key(n);
  std::vector<int> color(n, 0);
  for (int i = 0; i < n; ++i) {
    int up = 0, down = 0, upset = 0, downset = 0;
    for (int j = 0; j < n; ++j) {
      up += cov[i][j];
      down += cov[j][i];
      upset += p.less(i, j);
      downset += p.less(j, i);
    }
    key[i] = std::to_string(h[i]) + "," + std::to_string(up) + "," + std::to_string(down) + "," +
             std::to_string(upset) + "," + std::to_string(downset) + "," + mu[i].get_str();
  }
  for (int round = 0; round <= n; ++round) {
    // rank keys lexicographically so color ids are comparable across posets
    std::map<std::string, int> dict;
    for (int i = 0; i < n; ++i) dict[key[i]] = 0;
    int next_id = 0;
    for (auto& [k, v] : dict) v = next_id++;
    std::vector<int> next(n);
    for (int i = 0; i < n; ++i) next[i] = dict[key[i]];
    if (next == color && round > 0) break;
    color = next;
    for (int i = 0; i < n; ++i) {
      std::vector<int> upc, downc;
      for (int j = 0; j < n; ++j) {
        if (cov[i][j]) upc.push_back(color[j]);
        if (cov[j][i]) downc.push_back(color[j]);
      }
      std::sort(upc.begin(), upc.end());
      std::sort(downc.begin(), downc.end());
      key[i] = std::to_string(color[i]) + "|";
      for (int c : upc) key[i] += std::to_string(c) + ",";
      key[i] += "|";
      for (int c : downc) key[i] += std::to_string(c) + ",";
    }
  }
  return color;
}

bool iso_backtrack(const FinitePoset& p, const FinitePoset& q, const std::vector<int>& order,
                   const std::vector<int>& cp, const std::vector<int>& cq, size_t pos,
                   std::vector<int>& map, std::vector<char>& used) {
  if (pos == order.size()) return true;
  int i = order[pos];
  for (int j = 0; j < q.size; ++j) {
    if (used[j] || cp[i] != cq[j]) continue;
    bool ok = true;
    for (size_t k = 0; k < pos && ok; ++k) {
      int i2 = order[k], j2 = map[i2];
      if (p.leq[i][i2] != q.leq[j][j2] || p.leq[i2][i] != q.leq[j2][j]) ok = false;
    }
    if (!ok) continue;
    map[i] = j;
    used[j] = 1;
    if (iso_backtrack(p, q, order, cp, cq, pos + 1, map, used)) return true;
    used[j] = 0;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> isomorphic(const FinitePoset& p, const FinitePoset& q) {
  if (p.size != q.size) return std::nullopt;
  std::vector<int> cp = stable_colors(p), cq = stable_colors(q);
  std::vector<int> sp = cp, sq = cq;
  std::sort(sp.begin(), sp.end());
  std::sort(sq.begin(), sq.end());
  if (sp != sq) return std::nullopt;
  // assign rare colors first
  std::vector<int> count(p.size + 1, 0);
  for (int c : cp) ++count[c];
  std::vector<int> order(p.size);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (count[cp[a]] != count[cp[b]]) return count[cp[a]] < count[cp[b]];
    return a < b;
  });
  std::vector<int> map(p.size, -1);
  std::vector<char> used(q.size, 0);
  if (iso_backtrack(p, q, order, cp, cq, 0, map, used)) return map;
  return std::nullopt;
}

}  // namespace toric::posets
