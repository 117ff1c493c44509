#include "toric/int_matrix.hpp"

#include <sstream>

namespace toric {

Rat mod1(const Rat& x) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  Rat r = x - Rat(q);
  r.canonicalize();
  return r;
}

Rat parse_offset(const std::string& s, std::vector<std::string>* errors) {
  auto fail = [&](const std::string& msg) -> Rat {
    if (errors) errors->push_back(msg);
    return Rat(0);
  };
  auto slash = s.find('/');
  try {
    Int num(slash == std::string::npos ? s : s.substr(0, slash));
    Int den = slash == std::string::npos ? Int(1) : Int(s.substr(slash + 1));
    if (den <= 0) return fail("offset '" + s + "' has nonpositive denominator");
    Int g;
    mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (den > 1 && g != 1) return fail("offset '" + s + "' is not reduced");
    if (num < 0 || num >= den) return fail("offset '" + s + "' is not in [0, 1)");
    Rat r(num, den);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    return fail("offset '" + s + "' is not a fraction");
  }
}

std::string rat_to_string(const Rat& x) {
  std::ostringstream os;
  os << x.get_num();
  if (x.get_den() != 1) os << '/' << x.get_den();
  return os.str();
}

int cmp(const Rat& a, const Rat& b) {
  int c = ::cmp(a, b);
  return c < 0 ? -1 : c > 0 ? 1 : 0;
}

int cmp(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (size_t i = 0; i < a.size(); ++i) {
    int c = ::cmp(a[i], b[i]);
    if (c != 0) return c < 0 ? -1 : 1;
  }
  return 0;
}

int cmp(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (size_t i = 0; i < a.size(); ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c;
  }
  return 0;
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVec>& rows) {
  int r = int(rows.size());
  int c = r == 0 ? 0 : int(rows[0].size());
  IntMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (int(rows[i].size()) != c) throw std::invalid_argument("ragged row list");
    for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

IntVec IntMatrix::row(int i) const {
  IntVec v(cols_);
  for (int j = 0; j < cols_; ++j) v[j] = at(i, j);
  return v;
}

std::vector<IntVec> IntMatrix::row_list() const {
  std::vector<IntVec> rows(rows_);
  for (int i = 0; i < rows_; ++i) rows[i] = row(i);
  return rows;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

IntMatrix IntMatrix::mul(const IntMatrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("matrix product shape mismatch");
  IntMatrix p(rows_, other.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Int& x = at(i, k);
      if (x == 0) continue;
      for (int j = 0; j < other.cols_; ++j) p.at(i, j) += x * other.at(k, j);
    }
  return p;
}

IntVec IntMatrix::mul(const IntVec& v) const {
  if (int(v.size()) != cols_) throw std::invalid_argument("matrix-vector shape mismatch");
  IntVec w(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) w[i] += at(i, j) * v[j];
  return w;
}

// Bareiss fraction-free elimination; exact over Z.
Int IntMatrix::det() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant of non-square matrix");
  int n = rows_;
  if (n == 0) return 1;
  IntMatrix m = *this;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m.at(k, k) == 0) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i)
        if (m.at(i, k) != 0) { piv = i; break; }
      if (piv < 0) return 0;
      m.swap_rows(k, piv);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Int num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        mpz_divexact(m.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      m.at(i, k) = 0;
    }
    prev = m.at(k, k);
  }
  return sign > 0 ? m.at(n - 1, n - 1) : Int(-m.at(n - 1, n - 1));
}

int IntMatrix::rank() const {
  IntMatrix m = *this;
  int r = 0;
  for (int c = 0; c < cols_ && r < rows_; ++c) {
    int piv = -1;
    for (int i = r; i < rows_; ++i)
      if (m.at(i, c) != 0) { piv = i; break; }
    if (piv < 0) continue;
    m.swap_rows(r, piv);
    for (int i = r + 1; i < rows_; ++i) {
      if (m.at(i, c) == 0) continue;
      // integer row combination kills the pivot column without fractions
      Int g;
      mpz_gcd(g.get_mpz_t(), m.at(r, c).get_mpz_t(), m.at(i, c).get_mpz_t());
      Int a = m.at(r, c) / g, b = m.at(i, c) / g;
      for (int j = c; j < cols_; ++j) m.at(i, j) = a * m.at(i, j) - b * m.at(r, j);
    }
    ++r;
  }
  return r;
}

void IntMatrix::negate_row(int i) {
  for (int j = 0; j < cols_; ++j) at(i, j) = -at(i, j);
}

void IntMatrix::swap_rows(int i, int j) {
  if (i == j) return;
  for (int c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void IntMatrix::add_row_multiple(int i, int j, const Int& c) {
  for (int k = 0; k < cols_; ++k) at(i, k) += c * at(j, k);
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < rows_; ++i) {
    os << (i ? "; " : "");
    for (int j = 0; j < cols_; ++j) os << (j ? "," : "") << at(i, j);
  }
  os << ']';
  return os.str();
}

int cmp(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows()) return a.rows() < b.rows() ? -1 : 1;
  if (a.cols() != b.cols()) return a.cols() < b.cols() ? -1 : 1;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      int c = ::cmp(a.at(i, j), b.at(i, j));
      if (c != 0) return c < 0 ? -1 : 1;
    }
  return 0;
}

Int content(const IntVec& v) {
  Int g = 0;
  for (const Int& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

IntVec scale(const IntVec& v, const Int& c) {
  IntVec w(v.size());
  for (size_t i = 0; i < v.size(); ++i) w[i] = c * v[i];
  return w;
}

IntVec div_exact(const IntVec& v, const Int& c) {
  IntVec w(v.size());
  for (size_t i = 0; i < v.size(); ++i)
    mpz_divexact(w[i].get_mpz_t(), v[i].get_mpz_t(), c.get_mpz_t());
  return w;
}

Rat dot(const IntVec& v, const RatVec& w) {
  Rat s(0);
  for (size_t i = 0; i < v.size(); ++i) s += Rat(v[i]) * w[i];
  return s;
}

Int dot(const IntVec& v, const IntVec& w) {
  Int s(0);
  for (size_t i = 0; i < v.size(); ++i) s += v[i] * w[i];
  return s;
}

}  // namespace toric
