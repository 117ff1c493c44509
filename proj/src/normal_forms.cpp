#include "toric/normal_forms.hpp"

#include <algorithm>

namespace toric {

std::vector<Int> SmithForm::divisors() const {
  int n = std::min(s.rows(), s.cols());
  std::vector<Int> d(n);
  for (int i = 0; i < n; ++i) d[i] = s.at(i, i);
  return d;
}

HermiteForm hnf(const IntMatrix& m) {
  IntMatrix h = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  int pivot_row = 0;
  for (int c = 0; c < h.cols() && pivot_row < h.rows(); ++c) {
    // gcd cascade: leave a single nonzero entry in rows >= pivot_row
    while (true) {
      int best = -1;
      for (int i = pivot_row; i < h.rows(); ++i) {
        if (h.at(i, c) == 0) continue;
        if (best < 0 || ::cmp(abs(h.at(i, c)), abs(h.at(best, c))) < 0) best = i;
      }
      if (best < 0) break;
      h.swap_rows(pivot_row, best);
      u.swap_rows(pivot_row, best);
      bool clean = true;
      for (int i = pivot_row + 1; i < h.rows(); ++i) {
        if (h.at(i, c) == 0) continue;
        Int q;
        mpz_tdiv_q(q.get_mpz_t(), h.at(i, c).get_mpz_t(), h.at(pivot_row, c).get_mpz_t());
        h.add_row_multiple(i, pivot_row, -q);
        u.add_row_multiple(i, pivot_row, -q);
        if (h.at(i, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (h.at(pivot_row, c) == 0) continue;
    if (h.at(pivot_row, c) < 0) {
      h.negate_row(pivot_row);
      u.negate_row(pivot_row);
    }
    for (int i = 0; i < pivot_row; ++i) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), h.at(i, c).get_mpz_t(), h.at(pivot_row, c).get_mpz_t());
      if (q != 0) {
        h.add_row_multiple(i, pivot_row, -q);
        u.add_row_multiple(i, pivot_row, -q);
      }
    }
    ++pivot_row;
  }
  return {h, u};
}

IntMatrix hnf_basis(const IntMatrix& m) {
  IntMatrix h = hnf(m).h;
  int k = 0;
  for (int i = 0; i < h.rows(); ++i) {
    bool zero = true;
    for (int j = 0; j < h.cols(); ++j)
      if (h.at(i, j) != 0) { zero = false; break; }
    if (!zero) ++k;
  }
  IntMatrix b(k, h.cols());
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < h.cols(); ++j) b.at(i, j) = h.at(i, j);
  return b;
}

namespace {

struct SnfState {
  IntMatrix s, u, v, v_inv;

  void swap_cols(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < s.rows(); ++r) std::swap(s.at(r, i), s.at(r, j));
    for (int r = 0; r < v.rows(); ++r) std::swap(v.at(r, i), v.at(r, j));
    v_inv.swap_rows(i, j);
  }
  // col(j) += q * col(i)
  void add_col_multiple(int j, int i, const Int& q) {
    for (int r = 0; r < s.rows(); ++r) s.at(r, j) += q * s.at(r, i);
    for (int r = 0; r < v.rows(); ++r) v.at(r, j) += q * v.at(r, i);
    v_inv.add_row_multiple(i, j, -q);
  }
  void negate_col(int j) {
    for (int r = 0; r < s.rows(); ++r) s.at(r, j) = -s.at(r, j);
    for (int r = 0; r < v.rows(); ++r) v.at(r, j) = -v.at(r, j);
    v_inv.negate_row(j);
  }
};

}  // namespace

SmithForm snf(const IntMatrix& m) {
  SnfState st{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols()),
              IntMatrix::identity(m.cols())};
  IntMatrix& s = st.s;
  int n = std::min(m.rows(), m.cols());
  for (int k = 0; k < n; ++k) {
    while (true) {
      int pi = -1, pj = -1;
      for (int i = k; i < s.rows(); ++i)
        for (int j = k; j < s.cols(); ++j) {
          if (s.at(i, j) == 0) continue;
          if (pi < 0 || ::cmp(abs(s.at(i, j)), abs(s.at(pi, pj))) < 0) { pi = i; pj = j; }
        }
      if (pi < 0) { k = n; break; }  // remaining submatrix is zero
      s.swap_rows(k, pi);
      st.u.swap_rows(k, pi);
      st.swap_cols(k, pj);
      if (s.at(k, k) < 0) {
        s.negate_row(k);
        st.u.negate_row(k);
      }
      bool clean = true;
      for (int i = k + 1; i < s.rows(); ++i) {
        if (s.at(i, k) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), s.at(i, k).get_mpz_t(), s.at(k, k).get_mpz_t());
        s.add_row_multiple(i, k, -q);
        st.u.add_row_multiple(i, k, -q);
        if (s.at(i, k) != 0) clean = false;
      }
      for (int j = k + 1; j < s.cols(); ++j) {
        if (s.at(k, j) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), s.at(k, j).get_mpz_t(), s.at(k, k).get_mpz_t());
        st.add_col_multiple(j, k, -q);
        if (s.at(k, j) != 0) clean = false;
      }
      if (!clean) continue;
      // enforce that the pivot divides the remaining submatrix
      bool fixed = false;
      for (int i = k + 1; i < s.rows() && !fixed; ++i)
        for (int j = k + 1; j < s.cols() && !fixed; ++j)
          if (s.at(i, j) % s.at(k, k) != 0) {
            s.add_row_multiple(k, i, 1);
            st.u.add_row_multiple(k, i, 1);
            fixed = true;
          }
      if (!fixed) break;
    }
    if (k >= n) break;
  }
  return {st.u, st.s, st.v, st.v_inv};
}

IntMatrix saturate(const IntMatrix& basis) {
  if (basis.rows() == 0) return IntMatrix(0, basis.cols());
  SmithForm f = snf(basis);
  int rank = 0;
  for (const Int& d : f.divisors())
    if (d != 0) ++rank;
  IntMatrix gens(rank, basis.cols());
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < basis.cols(); ++j) gens.at(i, j) = f.v_inv.at(i, j);
  return hnf_basis(gens);
}

IntMatrix complete_to_unimodular(const IntVec& v) {
  if (content(v) != 1) throw std::invalid_argument("complete_to_unimodular requires a primitive vector");
  int d = int(v.size());
  IntMatrix u = IntMatrix::identity(d);
  IntVec w = v;
  for (int i = 1; i < d; ++i) {
    if (w[i] == 0) continue;
    Int g, p, q;
    mpz_gcdext(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t(), w[0].get_mpz_t(), w[i].get_mpz_t());
    Int a = w[0] / g, b = w[i] / g;
    for (int j = 0; j < d; ++j) {
      Int r0 = p * u.at(0, j) + q * u.at(i, j);
      Int ri = -b * u.at(0, j) + a * u.at(i, j);
      u.at(0, j) = r0;
      u.at(i, j) = ri;
    }
    w[0] = g;
    w[i] = 0;
  }
  if (w[0] < 0) u.negate_row(0);
  return u;
}

std::vector<TorsionVector> torsion_kernel(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("torsion_kernel requires a square matrix");
  int d = m.rows();
  SmithForm f = snf(m);
  std::vector<Int> div = f.divisors();
  for (const Int& x : div)
    if (x == 0) throw std::invalid_argument("torsion_kernel requires a nonsingular matrix");
  std::vector<TorsionVector> out;
  std::vector<Int> idx(d, 0);
  while (true) {
    TorsionVector x(d, Rat(0));
    for (int i = 0; i < d; ++i) {
      if (idx[i] == 0) continue;
      Rat z(idx[i], div[i]);
      z.canonicalize();
      for (int r = 0; r < d; ++r) x[r] += Rat(f.v.at(r, i)) * z;
    }
    for (int r = 0; r < d; ++r) x[r] = mod1(x[r]);
    out.push_back(std::move(x));
    int pos = d - 1;
    while (pos >= 0 && idx[pos] + 1 == div[pos]) idx[pos--] = 0;
    if (pos < 0) break;
    idx[pos] += 1;
  }
  std::sort(out.begin(), out.end(), [](const TorsionVector& a, const TorsionVector& b) {
    return cmp(a, b) < 0;
  });
  return out;
}

std::optional<IntVec> solve_in_hnf_basis(const IntMatrix& g, const IntVec& v) {
  int k = g.rows(), d = g.cols();
  if (int(v.size()) != d) throw std::invalid_argument("vector length mismatch");
  IntVec a(k, Int(0));
  IntVec rest = v;
  for (int i = 0; i < k; ++i) {
    int piv = -1;
    for (int j = 0; j < d; ++j)
      if (g.at(i, j) != 0) { piv = j; break; }
    if (piv < 0) return std::nullopt;  // zero row in a supposed basis
    if (rest[piv] % g.at(i, piv) != 0) return std::nullopt;
    a[i] = rest[piv] / g.at(i, piv);
    if (a[i] != 0)
      for (int j = 0; j < d; ++j) rest[j] -= a[i] * g.at(i, j);
  }
  for (int j = 0; j < d; ++j)
    if (rest[j] != 0) return std::nullopt;
  return a;
}

}  // namespace toric
