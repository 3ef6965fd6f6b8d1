#pragma once

#include <string>
#include <vector>

#include "grassmor/hompoly.hpp"
#include "grassmor/rational.hpp"

namespace grassmor {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// A matrix of homogeneous polynomials with a degree ledger: entry (i, j)
/// always has degree row_degree(i) + col_degree(j). For the surjection v the
/// row degrees are a_i and the column degrees zero; for the injection u it is
/// the other way round. Zero entries carry their ledger degree too.
/// Indices are 0-based.
class PolyMatrix {
 public:
  PolyMatrix(std::vector<int> row_degrees, std::vector<int> col_degrees);

  /// Ledger with zero degree along rows (or columns) of the given length.
  static PolyMatrix with_row_degrees(std::vector<int> row_degrees, int cols);
  static PolyMatrix with_col_degrees(int rows, std::vector<int> col_degrees);

  int rows() const { return static_cast<int>(row_degrees_.size()); }
  int cols() const { return static_cast<int>(col_degrees_.size()); }
  const std::vector<int>& row_degrees() const { return row_degrees_; }
  const std::vector<int>& col_degrees() const { return col_degrees_; }
  int degree_at(int i, int j) const { return row_degrees_[i] + col_degrees_[j]; }

  const HomPoly& at(int i, int j) const { return entries_[index(i, j)]; }
  /// Throws DegreeMismatch unless p has the ledger degree of (i, j).
  void set(int i, int j, HomPoly p);
  /// Convenience for c * x^dx * y^dy; throws if dx or dy is negative.
  void set_monomial(int i, int j, const Rational& c, int dx, int dy);

  bool is_zero() const;
  PolyMatrix transposed() const;
  RationalMatrix evaluate(const Rational& x0, const Rational& y0) const;

  /// Rows of rendered entries, for text output.
  std::vector<std::vector<std::string>> rendered() const;

  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

 private:
  std::size_t index(int i, int j) const;

  std::vector<int> row_degrees_;
  std::vector<int> col_degrees_;
  std::vector<HomPoly> entries_;
};

/// Matrix product. The inner ledgers must be compatible:
/// lhs.col_degree(p) + rhs.row_degree(p) must be the same for every p.
PolyMatrix multiply(const PolyMatrix& lhs, const PolyMatrix& rhs);

PolyMatrix operator+(const PolyMatrix& lhs, const PolyMatrix& rhs);
PolyMatrix operator-(const PolyMatrix& lhs, const PolyMatrix& rhs);

/// Determinant of the square submatrix on the given rows and columns.
/// Submatrices here have at most a handful of nonzero permutations, so a
/// zero-skipping Laplace expansion is used.
HomPoly minor(const PolyMatrix& m, const std::vector<int>& rows, const std::vector<int>& cols);

}  // namespace grassmor
