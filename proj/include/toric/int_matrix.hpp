#pragma once

#include <gmpxx.h>

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace toric {

using Int = mpz_class;
using Rat = mpq_class;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

// A torsion point of (Q/Z)^d: every coordinate reduced into [0, 1).
using TorsionVector = RatVec;

/// Reduce a rational into [0, 1).
Rat mod1(const Rat& x);

/// Parse "p/q" or "p" into a rational (input must already be reduced
/// with 0 <= p/q < 1; violations are reported through `errors`).
Rat parse_offset(const std::string& s, std::vector<std::string>* errors = nullptr);

std::string rat_to_string(const Rat& x);

int cmp(const Rat& a, const Rat& b);
int cmp(const IntVec& a, const IntVec& b);
int cmp(const RatVec& a, const RatVec& b);

/// Dense matrix over Z with arbitrary-precision entries, row-major.
class IntMatrix {
public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
  }
  IntMatrix(int rows, int cols, std::vector<Int> entries)
      : rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (a_.size() != size_t(rows) * cols) throw std::invalid_argument("entry count mismatch");
  }
  static IntMatrix identity(int n);
  static IntMatrix from_rows(const std::vector<IntVec>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Int& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
  const Int& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

  IntVec row(int i) const;
  std::vector<IntVec> row_list() const;

  IntMatrix transpose() const;
  IntMatrix mul(const IntMatrix& other) const;
  IntVec mul(const IntVec& v) const;

  /// Exact determinant (fraction-free Gaussian elimination). Square only.
  Int det() const;
  /// Rank over Q.
  int rank() const;

  void negate_row(int i);
  void swap_rows(int i, int j);
  /// row(i) += c * row(j)
  void add_row_multiple(int i, int j, const Int& c);

  bool operator==(const IntMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && a_ == other.a_;
  }
  std::string to_string() const;

private:
  int rows_, cols_;
  std::vector<Int> a_;
};

int cmp(const IntMatrix& a, const IntMatrix& b);

Int content(const IntVec& v);
IntVec scale(const IntVec& v, const Int& c);
IntVec div_exact(const IntVec& v, const Int& c);
Rat dot(const IntVec& v, const RatVec& w);
Int dot(const IntVec& v, const IntVec& w);

}  // namespace toric
