#include "grassmor/linalg.hpp"

#include <cstddef>

namespace grassmor {

namespace {

void divide_by_content(std::vector<Integer>& row) {
  Integer g = 0;
  for (const auto& x : row) {
    if (sgn(x) == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) return;
  }
  if (g <= 1) return;
  for (auto& x : row) {
    if (sgn(x) != 0) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  }
}

}  // namespace

long rank_fraction_free(IntegerMatrix m) {
  const std::size_t rows = m.size();
  if (rows == 0) return 0;
  const std::size_t cols = m.front().size();
  long rank = 0;
  std::size_t pivot_row = 0;
  Integer scaled;
  for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
    std::size_t found = rows;
    for (std::size_t i = pivot_row; i < rows; ++i) {
      if (sgn(m[i][col]) != 0) {
        found = i;
        break;
      }
    }
    if (found == rows) continue;
    std::swap(m[pivot_row], m[found]);
    const std::vector<Integer>& prow = m[pivot_row];
    const Integer pivot = prow[col];
    for (std::size_t i = pivot_row + 1; i < rows; ++i) {
      if (sgn(m[i][col]) == 0) continue;
      const Integer factor = m[i][col];
      for (std::size_t j = col; j < cols; ++j) {
        if (sgn(m[i][j]) == 0 && sgn(prow[j]) == 0) continue;
        scaled = pivot * m[i][j];
        scaled -= factor * prow[j];
        m[i][j] = scaled;
      }
      divide_by_content(m[i]);
    }
    ++pivot_row;
    ++rank;
  }
  return rank;
}

long rank(const RationalMatrix& m) {
  IntegerMatrix ints;
  ints.reserve(m.size());
  for (const auto& row : m) {
    Integer lcm = 1;
    for (const auto& q : row) {
      if (sgn(q) != 0) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
    }
    std::vector<Integer> out;
    out.reserve(row.size());
    for (const auto& q : row) {
      Rational scaled = q * lcm;
      out.push_back(scaled.get_num());
    }
    ints.push_back(std::move(out));
  }
  return rank_fraction_free(std::move(ints));
}

}  // namespace grassmor
