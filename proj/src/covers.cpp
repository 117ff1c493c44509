#include "toric/covers.hpp"

#include <algorithm>
#include <stdexcept>

namespace toric {

CoverMatrix::CoverMatrix(IntMatrix mat) : m(std::move(mat)) {
  if (m.rows() != m.cols()) throw std::invalid_argument("cover matrix must be square");
  if (m.det() == 0) throw std::invalid_argument("cover matrix must be nonsingular");
}

bool DeckGroup::contains(const TorsionVector& u) const {
  return std::find(elements.begin(), elements.end(), u) != elements.end();
}

DeckGroup deck_group(const CoverMatrix& m) { return DeckGroup{torsion_kernel(m.m.transpose())}; }

Layer deck_translate(const Layer& l, const TorsionVector& u, const DeckGroup& g) {
  if (!g.contains(u)) throw std::invalid_argument("translation is not a deck element");
  return translate(l, u);
}

std::vector<std::vector<int>> orbits_on(const std::vector<Layer>& layers, const DeckGroup& g) {
  std::vector<std::vector<int>> orbits;
  std::vector<char> seen(layers.size(), 0);
  for (size_t i = 0; i < layers.size(); ++i) {
    if (seen[i]) continue;
    std::vector<int> orbit;
    for (const TorsionVector& u : g.elements) {
      Layer t = translate(layers[i], u);
      for (size_t j = 0; j < layers.size(); ++j)
        if (!seen[j] && layers[j] == t) {
          seen[j] = 1;
          orbit.push_back(int(j));
        }
    }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

ToricArrangement lift_central(const ToricArrangement& arr, const CoverMatrix& m) {
  if (!is_central(arr)) throw std::invalid_argument("lift_central requires a central arrangement");
  if (m.rank() != arr.rank) throw std::invalid_argument("cover rank mismatch");
  ToricArrangement out;
  out.rank = arr.rank;
  for (const auto& h : arr.hypersurfaces) out.hypersurfaces.push_back({m.m.mul(h.character), Rat(0)});
  return out;
}

ToricArrangement lift(const ToricArrangement& arr, const CoverMatrix& m) {
  if (m.rank() != arr.rank) throw std::invalid_argument("cover rank mismatch");
  ToricArrangement out;
  out.rank = arr.rank;
  for (const auto& h : arr.hypersurfaces) {
    IntVec chi_hat = m.m.mul(h.character);
    Int a = content(chi_hat);
    IntVec chi_u = div_exact(chi_hat, a);
    for (Int k = 0; k < a; ++k) {
      Rat offset = (h.offset + Rat(k)) / Rat(a);
      offset.canonicalize();
      out.hypersurfaces.push_back({chi_u, mod1(offset)});
    }
  }
  return out;
}

ProjPoint projectivize(const IntVec& chi, unsigned p) {
  ProjPoint pt;
  pt.p = p;
  pt.coords.resize(chi.size());
  for (size_t i = 0; i < chi.size(); ++i) {
    Int r;
    mpz_fdiv_r_ui(r.get_mpz_t(), chi[i].get_mpz_t(), p);
    pt.coords[i] = unsigned(r.get_ui());
  }
  unsigned lead = 0;
  size_t lead_at = chi.size();
  for (size_t i = 0; i < pt.coords.size(); ++i)
    if (pt.coords[i] != 0) { lead = pt.coords[i]; lead_at = i; break; }
  if (lead_at == chi.size())
    throw std::logic_error("character vanishes mod p; input not primitive");
  // scale by lead^{-1} mod p
  unsigned inv = 1;
  for (unsigned e = p - 2; e > 0; e >>= 1) {  // fermat inverse
    if (e & 1) inv = (inv * lead) % p;
    lead = (lead * lead) % p;
  }
  for (unsigned& c : pt.coords) c = (c * inv) % p;
  return pt;
}

std::vector<ProjPoint> phi_p(const ToricArrangement& arr, unsigned p) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  if (!is_primitive(arr)) throw std::invalid_argument("phi_p requires a primitive arrangement");
  std::vector<ProjPoint> image;
  for (const auto& h : arr.hypersurfaces) image.push_back(projectivize(h.character, p));
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  return image;
}

Int line_count(unsigned p, int d) {
  Int total = 0, pk = 1;
  for (int i = 0; i < d; ++i) {
    total += pk;
    pk *= p;
  }
  return total;
}

bool is_phi_p_surjective(const ToricArrangement& arr, unsigned p) {
  return Int(phi_p(arr, p).size()) == line_count(p, arr.rank);
}

namespace {

std::vector<ProjPoint> all_lines(unsigned p, int d) {
  std::vector<ProjPoint> out;
  for (int lead = 0; lead < d; ++lead) {
    std::vector<unsigned> coords(d, 0);
    coords[lead] = 1;
    int tail = d - lead - 1;
    std::vector<unsigned> t(tail, 0);
    while (true) {
      for (int i = 0; i < tail; ++i) coords[lead + 1 + i] = t[i];
      out.push_back(ProjPoint{p, coords});
      int pos = tail - 1;
      while (pos >= 0 && t[pos] + 1 == p) t[pos--] = 0;
      if (pos < 0) break;
      t[pos] += 1;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::optional<ProjPoint> missed_line(const ToricArrangement& arr, unsigned p) {
  std::vector<ProjPoint> image = phi_p(arr, p);
  for (const ProjPoint& line : all_lines(p, arr.rank))
    if (!std::binary_search(image.begin(), image.end(), line)) return line;
  return std::nullopt;
}

std::optional<CoverMatrix> build_p_cover(const ToricArrangement& arr, unsigned p) {
  if (!is_primitive(arr)) throw std::invalid_argument("build_p_cover requires a primitive arrangement");
  if (!is_essential(arr)) throw std::invalid_argument("build_p_cover requires an essential arrangement");
  auto line = missed_line(arr, p);
  if (!line) return std::nullopt;
  IntVec v(line->coords.size());
  for (size_t i = 0; i < v.size(); ++i) v[i] = line->coords[i];
  IntMatrix u = complete_to_unimodular(v);
  IntMatrix m = u;
  for (int j = 0; j < m.cols(); ++j) m.at(0, j) *= p;
  CoverMatrix cover(std::move(m));
  for (const auto& h : arr.hypersurfaces)
    if (content(cover.m.mul(h.character)) != 1)
      throw std::logic_error("degree-p cover produced an imprimitive lift");
  return cover;
}

std::vector<unsigned> exceptional_primes(const ToricArrangement& arr) {
  if (!is_primitive(arr)) throw std::invalid_argument("exceptional_primes requires a primitive arrangement");
  if (arr.size() == 0) return {};
  if (arr.rank < 2)
    throw std::domain_error("rank < 2: every prime has phi_p surjective, no finite set exists");
  std::vector<unsigned> out;
  for (unsigned p = 2; line_count(p, arr.rank) <= arr.size(); ++p) {
    if (!is_prime(p)) continue;
    if (is_phi_p_surjective(arr, p)) out.push_back(p);
  }
  return out;
}

namespace {

void enumerate_hnf(int d, const Int& det, int row, IntMatrix& work,
                   std::vector<CoverMatrix>& out) {
  if (row == d) {
    out.push_back(CoverMatrix(work));
    return;
  }
  // ascending divisors of the remaining determinant for the diagonal
  std::vector<Int> divisors;
  for (Int q = 1; q * q <= det; ++q) {
    if (det % q != 0) continue;
    divisors.push_back(q);
    if (q * q != det) divisors.push_back(det / q);
  }
  std::sort(divisors.begin(), divisors.end());
  for (const Int& q : divisors) {
    work.at(row, row) = q;
    Int rest = det / q;
    // off-diagonal entries above later pivots are chosen when those pivots
    // are fixed; entries in this row right of the diagonal stay free and
    // get reduced modulo the later pivot, so enumerate them afterwards.
    std::vector<Int> idx(row, 0);
    while (true) {
      for (int i = 0; i < row; ++i) work.at(i, row) = idx[i];
      enumerate_hnf(d, rest, row + 1, work, out);
      int pos = row - 1;
      while (pos >= 0 && idx[pos] + 1 == q) idx[pos--] = 0;
      if (pos < 0) break;
      idx[pos] += 1;
    }
    for (int i = 0; i < row; ++i) work.at(i, row) = 0;
  }
  work.at(row, row) = 0;
}

}  // namespace

std::vector<CoverMatrix> sublattice_covers(int d, const Int& determinant) {
  if (determinant < 1) throw std::invalid_argument("determinant must be >= 1");
  if (d < 1) throw std::invalid_argument("dimension must be >= 1");
  std::vector<CoverMatrix> out;
  IntMatrix work(d, d);
  enumerate_hnf(d, determinant, 0, work, out);
  return out;
}

bool is_prime(unsigned p) {
  if (p < 2) return false;
  for (unsigned q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

}  // namespace toric
