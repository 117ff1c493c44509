#include <doctest.h>

#include <random>

#include "toric/normal_forms.hpp"

using namespace toric;

namespace {

IntMatrix mat(std::vector<std::vector<long>> rows) {
  std::vector<IntVec> r;
  for (auto& row : rows) {
    IntVec v;
    for (long x : row) v.emplace_back(x);
    r.push_back(std::move(v));
  }
  return IntMatrix::from_rows(r);
}

IntVec vec(std::vector<long> xs) {
  IntVec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

bool row_in_lattice(const IntMatrix& basis, const IntVec& v) {
  return solve_in_hnf_basis(hnf_basis(basis), v).has_value();
}

// same row lattice: mutual integer solvability of rows
bool same_lattice(const IntMatrix& a, const IntMatrix& b) {
  for (int i = 0; i < a.rows(); ++i)
    if (!row_in_lattice(b, a.row(i))) return false;
  for (int i = 0; i < b.rows(); ++i)
    if (!row_in_lattice(a, b.row(i))) return false;
  return true;
}

std::mt19937 rng(20251105);

IntMatrix random_matrix(int r, int c, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  IntMatrix m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m.at(i, j) = dist(rng);
  return m;
}

// independent oracle: enumerate all candidate denominators dividing |det|
std::vector<TorsionVector> torsion_kernel_bruteforce(const IntMatrix& m) {
  Int d = abs(m.det());
  REQUIRE(d != 0);
  long dd = d.get_si();
  int n = m.rows();
  std::vector<TorsionVector> out;
  std::vector<long> idx(n, 0);
  while (true) {
    TorsionVector u(n);
    for (int i = 0; i < n; ++i) {
      u[i] = Rat(idx[i], dd);
      u[i].canonicalize();
    }
    bool integral = true;
    for (int i = 0; i < n && integral; ++i) {
      Rat s(0);
      for (int j = 0; j < n; ++j) s += Rat(m.at(i, j)) * u[j];
      if (mod1(s) != 0) integral = false;
    }
    if (integral) out.push_back(u);
    int pos = n - 1;
    while (pos >= 0 && idx[pos] + 1 == dd) idx[pos--] = 0;
    if (pos < 0) break;
    idx[pos] += 1;
  }
  std::sort(out.begin(), out.end(),
            [](const TorsionVector& a, const TorsionVector& b) { return cmp(a, b) < 0; });
  return out;
}

}  // namespace

TEST_CASE("hnf canonical form") {
  SUBCASE("identity fixed") {
    auto f = hnf(IntMatrix::identity(2));
    CHECK(f.h == IntMatrix::identity(2));
    CHECK(f.u == IntMatrix::identity(2));
  }
  SUBCASE("pivot sign and reduction") {
    auto f = hnf(mat({{2, 1}, {0, -4}}));
    CHECK(f.h == mat({{2, 1}, {0, 4}}));
  }
  SUBCASE("zero rows retained") {
    auto f = hnf(mat({{0, 0}}));
    CHECK(f.h == mat({{0, 0}}));
  }
  SUBCASE("u is the applied transform and the row space is preserved") {
    for (int trial = 0; trial < 50; ++trial) {
      IntMatrix m = random_matrix(3, 4, -5, 5);
      auto f = hnf(m);
      CHECK(f.u.mul(m) == f.h);
      CHECK(abs(f.u.det()) == 1);
      CHECK(same_lattice(m, f.h));
    }
  }
}

TEST_CASE("snf divisibility and determinant") {
  SUBCASE("frozen small cases") {
    auto f = snf(mat({{2, 1}, {0, -4}}));
    CHECK(f.s.at(0, 0) == 1);
    CHECK(f.s.at(1, 1) == 8);
    auto g = snf(mat({{5, 0}, {0, 1}}));  // diag(p, 1) -> (1, p)
    CHECK(g.s.at(0, 0) == 1);
    CHECK(g.s.at(1, 1) == 5);
    auto z = snf(IntMatrix(2, 2));
    CHECK(z.s.at(0, 0) == 0);
    CHECK(z.s.at(1, 1) == 0);
  }
  SUBCASE("u m v = s, chain divides, product = |det|") {
    for (int trial = 0; trial < 60; ++trial) {
      int n = 2 + trial % 3;
      IntMatrix m = random_matrix(n, n, -6, 6);
      SmithForm f = snf(m);
      CHECK(f.u.mul(m).mul(f.v) == f.s);
      CHECK(abs(f.u.det()) == 1);
      CHECK(abs(f.v.det()) == 1);
      CHECK(f.v.mul(f.v_inv) == IntMatrix::identity(n));
      Int prod = 1;
      for (int i = 0; i < n; ++i) {
        CHECK(f.s.at(i, i) >= 0);
        if (i + 1 < n && f.s.at(i, i) != 0) CHECK(f.s.at(i + 1, i + 1) % f.s.at(i, i) == 0);
        prod *= f.s.at(i, i);
      }
      CHECK(prod == abs(m.det()));
    }
  }
}

TEST_CASE("content") {
  CHECK(content(vec({2, 0})) == 2);
  CHECK(content(vec({1, -4})) == 1);
  CHECK(content(vec({0, 0})) == 0);
}

TEST_CASE("saturate") {
  SUBCASE("index-2 line") { CHECK(saturate(mat({{2, 0}})) == mat({{1, 0}})); }
  SUBCASE("full lattice unchanged") {
    CHECK(saturate(mat({{1, 0}, {0, 1}})) == IntMatrix::identity(2));
  }
  SUBCASE("braid sublattice already saturated") {
    IntMatrix b = mat({{1, -1, 0}, {0, 1, -1}});
    IntMatrix s = saturate(b);
    CHECK(s.rows() == 2);
    CHECK(same_lattice(s, b));
  }
  SUBCASE("idempotent, contains input with index = divisor product") {
    for (int trial = 0; trial < 60; ++trial) {
      IntMatrix m = random_matrix(2, 3, -4, 4);
      IntMatrix s = saturate(m);
      CHECK(saturate(s) == s);
      for (int i = 0; i < m.rows(); ++i) CHECK(row_in_lattice(s, m.row(i)));
      // index of m inside s = product of nonzero elementary divisors of m
      Int index = 1;
      for (const Int& d : snf(m).divisors())
        if (d != 0) index *= d;
      if (s.rows() == 0) continue;
      // express rows of m in the basis of s and take the divisor product there
      IntMatrix coeffs(m.rows(), s.rows());
      for (int i = 0; i < m.rows(); ++i) {
        auto c = solve_in_hnf_basis(s, m.row(i));
        REQUIRE(c.has_value());
        for (int j = 0; j < s.rows(); ++j) coeffs.at(i, j) = (*c)[j];
      }
      Int index2 = 1;
      for (const Int& d : snf(coeffs).divisors())
        if (d != 0) index2 *= d;
      CHECK(index == index2);
    }
  }
}

TEST_CASE("complete_to_unimodular") {
  SUBCASE("identity on e1") { CHECK(complete_to_unimodular(vec({1, 0})) == IntMatrix::identity(2)); }
  SUBCASE("frozen example") { CHECK(complete_to_unimodular(vec({1, 2})) == mat({{1, 0}, {-2, 1}})); }
  SUBCASE("permutation-like") {
    IntMatrix u = complete_to_unimodular(vec({0, 1}));
    CHECK(u.mul(vec({0, 1})) == vec({1, 0}));
    CHECK(abs(u.det()) == 1);
  }
  SUBCASE("rejects non-primitive") {
    CHECK_THROWS_AS(complete_to_unimodular(vec({2, 4})), std::invalid_argument);
  }
  SUBCASE("random primitive vectors up to d = 6") {
    for (int trial = 0; trial < 100; ++trial) {
      int d = 2 + trial % 5;
      IntVec v;
      do {
        v = random_matrix(1, d, -9, 9).row(0);
      } while (content(v) != 1);
      IntMatrix u = complete_to_unimodular(v);
      IntVec e1(d, Int(0));
      e1[0] = 1;
      CHECK(u.mul(v) == e1);
      CHECK(abs(u.det()) == 1);
    }
  }
}

TEST_CASE("torsion_kernel") {
  SUBCASE("diag(p, 1)") {
    auto ker = torsion_kernel(mat({{5, 0}, {0, 1}}));
    CHECK(ker.size() == 5);
    CHECK(ker == torsion_kernel_bruteforce(mat({{5, 0}, {0, 1}})));
  }
  SUBCASE("identity") {
    auto ker = torsion_kernel(IntMatrix::identity(3));
    CHECK(ker.size() == 1);
    CHECK(ker[0] == TorsionVector(3, Rat(0)));
  }
  SUBCASE("transpose of [[2,1],[0,-4]] is cyclic of order 8") {
    IntMatrix m = mat({{2, 1}, {0, -4}}).transpose();
    auto ker = torsion_kernel(m);
    CHECK(ker.size() == 8);
    CHECK(ker == torsion_kernel_bruteforce(m));
    // cyclic: some element has order 8
    bool has_order_8 = false;
    for (const auto& u : ker) {
      TorsionVector acc(2, Rat(0));
      int order = 0;
      do {
        for (size_t i = 0; i < acc.size(); ++i) acc[i] = mod1(acc[i] + u[i]);
        ++order;
      } while (acc != TorsionVector(2, Rat(0)));
      if (order == 8) has_order_8 = true;
    }
    CHECK(has_order_8);
  }
  SUBCASE("singular input rejected") {
    CHECK_THROWS_AS(torsion_kernel(mat({{1, 1}, {1, 1}})), std::invalid_argument);
  }
  SUBCASE("cardinality = |det| and closure under addition, random") {
    int done = 0;
    while (done < 40) {
      int d = 2 + done % 2;
      IntMatrix m = random_matrix(d, d, -3, 3);
      Int det = m.det();
      if (det == 0 || abs(det) > 12) continue;
      ++done;
      auto ker = torsion_kernel(m);
      CHECK(Int(ker.size()) == abs(det));
      CHECK(ker == torsion_kernel_bruteforce(m));
      for (size_t a = 0; a < ker.size(); ++a)
        for (size_t b = a; b < ker.size(); ++b) {
          TorsionVector sum(d);
          for (int i = 0; i < d; ++i) sum[i] = mod1(ker[a][i] + ker[b][i]);
          CHECK(std::find(ker.begin(), ker.end(), sum) != ker.end());
        }
    }
  }
}
