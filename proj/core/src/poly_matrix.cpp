#include "grassmor/poly_matrix.hpp"

#include "grassmor/errors.hpp"

namespace grassmor {

PolyMatrix::PolyMatrix(std::vector<int> row_degrees, std::vector<int> col_degrees)
    : row_degrees_(std::move(row_degrees)), col_degrees_(std::move(col_degrees)) {
  entries_.reserve(row_degrees_.size() * col_degrees_.size());
  for (int rd : row_degrees_) {
    for (int cd : col_degrees_) {
      if (rd + cd < 0) throw DegreeMismatch("negative ledger degree");
      entries_.emplace_back(rd + cd);
    }
  }
}

PolyMatrix PolyMatrix::with_row_degrees(std::vector<int> row_degrees, int cols) {
  return PolyMatrix(std::move(row_degrees), std::vector<int>(static_cast<std::size_t>(cols), 0));
}

PolyMatrix PolyMatrix::with_col_degrees(int rows, std::vector<int> col_degrees) {
  return PolyMatrix(std::vector<int>(static_cast<std::size_t>(rows), 0), std::move(col_degrees));
}

std::size_t PolyMatrix::index(int i, int j) const {
  if (i < 0 || j < 0 || i >= rows() || j >= cols()) {
    throw ShapeMismatch("matrix index (" + std::to_string(i) + "," + std::to_string(j) +
                        ") out of range");
  }
  return static_cast<std::size_t>(i) * col_degrees_.size() + static_cast<std::size_t>(j);
}

void PolyMatrix::set(int i, int j, HomPoly p) {
  std::size_t k = index(i, j);
  if (p.degree() != degree_at(i, j)) {
    throw DegreeMismatch("entry (" + std::to_string(i) + "," + std::to_string(j) + ") has degree " +
                         std::to_string(p.degree()) + ", ledger says " +
                         std::to_string(degree_at(i, j)));
  }
  entries_[k] = std::move(p);
}

void PolyMatrix::set_monomial(int i, int j, const Rational& c, int dx, int dy) {
  set(i, j, HomPoly::monomial(c, dx, dy));
}

bool PolyMatrix::is_zero() const {
  for (const auto& e : entries_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

PolyMatrix PolyMatrix::transposed() const {
  PolyMatrix t(col_degrees_, row_degrees_);
  for (int i = 0; i < rows(); ++i) {
    for (int j = 0; j < cols(); ++j) t.entries_[t.index(j, i)] = at(i, j);
  }
  return t;
}

RationalMatrix PolyMatrix::evaluate(const Rational& x0, const Rational& y0) const {
  RationalMatrix out(static_cast<std::size_t>(rows()),
                     std::vector<Rational>(static_cast<std::size_t>(cols())));
  for (int i = 0; i < rows(); ++i) {
    for (int j = 0; j < cols(); ++j) out[i][j] = at(i, j).eval(x0, y0);
  }
  return out;
}

std::vector<std::vector<std::string>> PolyMatrix::rendered() const {
  std::vector<std::vector<std::string>> out(static_cast<std::size_t>(rows()));
  for (int i = 0; i < rows(); ++i) {
    for (int j = 0; j < cols(); ++j) out[i].push_back(at(i, j).to_string());
  }
  return out;
}

PolyMatrix multiply(const PolyMatrix& lhs, const PolyMatrix& rhs) {
  if (lhs.cols() != rhs.rows()) throw ShapeMismatch("inner dimensions differ");
  if (lhs.cols() == 0) throw ShapeMismatch("empty inner dimension");
  const int shift = lhs.col_degrees()[0] + rhs.row_degrees()[0];
  for (int p = 1; p < lhs.cols(); ++p) {
    if (lhs.col_degrees()[p] + rhs.row_degrees()[p] != shift) {
      throw DegreeMismatch("incompatible inner degree ledgers");
    }
  }
  std::vector<int> rd = lhs.row_degrees();
  for (int& d : rd) d += shift;
  PolyMatrix out(std::move(rd), rhs.col_degrees());
  for (int i = 0; i < lhs.rows(); ++i) {
    for (int j = 0; j < rhs.cols(); ++j) {
      HomPoly acc(out.degree_at(i, j));
      for (int p = 0; p < lhs.cols(); ++p) {
        const HomPoly& a = lhs.at(i, p);
        const HomPoly& b = rhs.at(p, j);
        if (a.is_zero() || b.is_zero()) continue;
        acc += a * b;
      }
      out.set(i, j, std::move(acc));
    }
  }
  return out;
}

namespace {

PolyMatrix combine(const PolyMatrix& lhs, const PolyMatrix& rhs, bool subtract) {
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
    throw ShapeMismatch("matrix shapes differ");
  }
  PolyMatrix out = lhs;
  for (int i = 0; i < lhs.rows(); ++i) {
    for (int j = 0; j < lhs.cols(); ++j) {
      out.set(i, j, subtract ? lhs.at(i, j) - rhs.at(i, j) : lhs.at(i, j) + rhs.at(i, j));
    }
  }
  return out;
}

HomPoly laplace(const PolyMatrix& m, const std::vector<int>& rows, std::vector<int>& cols,
                std::size_t depth, int degree) {
  if (depth == rows.size()) return HomPoly::monomial(1, 0, 0);
  HomPoly acc(degree);
  const int row = rows[depth];
  for (std::size_t c = depth; c < cols.size(); ++c) {
    const HomPoly& entry = m.at(row, cols[c]);
    if (!entry.is_zero()) {
      std::swap(cols[depth], cols[c]);
      HomPoly sub = laplace(m, rows, cols, depth + 1, degree - entry.degree());
      std::swap(cols[depth], cols[c]);
      if (!sub.is_zero()) {
        HomPoly term = entry * sub;
        // Moving column c to the front is a single transposition.
        if (c != depth) term = -term;
        acc += term;
      }
    }
  }
  return acc;
}

}  // namespace

PolyMatrix operator+(const PolyMatrix& lhs, const PolyMatrix& rhs) { return combine(lhs, rhs, false); }
PolyMatrix operator-(const PolyMatrix& lhs, const PolyMatrix& rhs) { return combine(lhs, rhs, true); }

HomPoly minor(const PolyMatrix& m, const std::vector<int>& rows, const std::vector<int>& cols) {
  if (rows.size() != cols.size() || rows.empty()) throw ShapeMismatch("minor must be square");
  int degree = 0;
  for (std::size_t k = 0; k < rows.size(); ++k) degree += m.degree_at(rows[k], cols[k]);
  std::vector<int> c = cols;
  return laplace(m, rows, c, 0, degree);
}

}  // namespace grassmor
