#include "grassmor/fillings.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "grassmor/errors.hpp"

namespace grassmor {

TangentSplitting::TangentSplitting(int r, int n, std::vector<int> parts)
    : r_(r), n_(n), parts_(std::move(parts)) {
  if (n < 4 || r < 2 || r > n - 2) throw InvalidInput("need n >= 4 and 2 <= r <= n - 2");
  if (static_cast<long>(parts_.size()) != static_cast<long>(r) * (n - r)) {
    throw InvalidInput("tangent splitting must have r(n - r) = " + std::to_string(r * (n - r)) +
                       " parts, got " + std::to_string(parts_.size()));
  }
  for (int p : parts_) {
    if (p < 0) throw InvalidInput("tangent splitting parts must be non-negative");
  }
  std::sort(parts_.begin(), parts_.end());
}

TangentSplitting TangentSplitting::of(const SplittingPair& p) {
  std::vector<int> parts;
  for (int a : p.sub.ascending()) {
    for (int b : p.quot.ascending()) parts.push_back(a + b);
  }
  return TangentSplitting(p.r, p.n, std::move(parts));
}

namespace {

void require_shape(const Grid& grid, int rows, int cols) {
  if (static_cast<int>(grid.size()) != rows) throw ShapeMismatch("grid has wrong row count");
  for (const auto& row : grid) {
    if (static_cast<int>(row.size()) != cols) throw ShapeMismatch("grid has wrong column count");
  }
}

}  // namespace

bool is_filling(const Grid& grid, const TangentSplitting& c) {
  const int rows = c.rows();
  const int cols = c.cols();
  require_shape(grid, rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      if (i + 1 < rows && grid[i][j] > grid[i + 1][j]) return false;
      if (j + 1 < cols && grid[i][j] > grid[i][j + 1]) return false;
    }
  }
  for (int i = 0; i + 1 < rows; ++i) {
    const int d = grid[i + 1][0] - grid[i][0];
    for (int j = 1; j < cols; ++j) {
      if (grid[i + 1][j] - grid[i][j] != d) return false;
    }
  }
  for (int j = 0; j + 1 < cols; ++j) {
    const int d = grid[0][j + 1] - grid[0][j];
    for (int i = 1; i < rows; ++i) {
      if (grid[i][j + 1] - grid[i][j] != d) return false;
    }
  }
  std::vector<int> flat;
  for (const auto& row : grid) flat.insert(flat.end(), row.begin(), row.end());
  std::sort(flat.begin(), flat.end());
  return std::equal(flat.begin(), flat.end(), c.parts().begin(), c.parts().end());
}

std::optional<DerivedSplittings> derive_splittings(const Grid& grid, int r, int n) {
  const int m = n - r;
  require_shape(grid, r, m);
  long total = 0;
  for (const auto& row : grid) total = std::accumulate(row.begin(), row.end(), total);
  if (total % n != 0) return std::nullopt;
  const long e = total / n;

  std::vector<int> a;
  for (int i = 0; i < r; ++i) {
    const long s = std::accumulate(grid[i].begin(), grid[i].end(), 0L) - e;
    if (s < 0 || s % m != 0) return std::nullopt;
    a.push_back(static_cast<int>(s / m));
  }
  std::vector<int> b;
  for (int j = 0; j < m; ++j) {
    long s = -e;
    for (int i = 0; i < r; ++i) s += grid[i][j];
    if (s < 0 || s % r != 0) return std::nullopt;
    b.push_back(static_cast<int>(s / r));
  }
  // The formulas only invert a_i + b_j when the grid has that form.
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < m; ++j) {
      if (a[i] + b[j] != grid[i][j]) return std::nullopt;
    }
  }
  return DerivedSplittings{SplittingType(std::move(a)), SplittingType(std::move(b)),
                           static_cast<int>(e)};
}

namespace {

using Counts = std::map<int, int>;

// Distinct sorted selections of `size` elements from the multiset `pool`.
void selections(const std::vector<std::pair<int, int>>& pool, std::size_t at, int size,
                std::vector<int>& prefix, std::vector<std::vector<int>>& out) {
  if (size == 0) {
    out.push_back(prefix);
    return;
  }
  if (at == pool.size()) return;
  const auto [value, count] = pool[at];
  for (int take = std::min(count, size); take >= 0; --take) {
    prefix.insert(prefix.end(), static_cast<std::size_t>(take), value);
    selections(pool, at + 1, size - take, prefix, out);
    prefix.resize(prefix.size() - static_cast<std::size_t>(take));
  }
}

std::optional<Grid> complete_from_first_row(const std::vector<int>& first_row, Counts pool,
                                            int rows) {
  std::vector<int> offsets;
  for (int x : first_row) offsets.push_back(x - first_row.front());
  Grid grid;
  for (int i = 0; i < rows; ++i) {
    while (!pool.empty() && pool.begin()->second == 0) pool.erase(pool.begin());
    if (pool.empty()) return std::nullopt;
    const int start = pool.begin()->first;
    std::vector<int> row;
    for (int off : offsets) {
      auto it = pool.find(start + off);
      if (it == pool.end() || it->second == 0) return std::nullopt;
      --it->second;
      row.push_back(start + off);
    }
    grid.push_back(std::move(row));
  }
  for (const auto& [value, count] : pool) {
    if (count != 0) return std::nullopt;
  }
  return grid;
}

}  // namespace

std::vector<Filling> enumerate_fillings(const TangentSplitting& c) {
  const auto parts = c.parts();
  Counts counts;
  for (int x : parts) ++counts[x];

  // grid(1,1) is always min(c); choose the rest of the first row.
  Counts rest = counts;
  --rest[parts.front()];
  std::vector<std::pair<int, int>> pool;
  for (const auto& [value, count] : rest) {
    if (count > 0) pool.emplace_back(value, count);
  }
  std::vector<std::vector<int>> tails;
  std::vector<int> prefix;
  selections(pool, 0, c.cols() - 1, prefix, tails);

  std::vector<Grid> grids;
  for (const auto& tail : tails) {
    std::vector<int> first_row{parts.front()};
    first_row.insert(first_row.end(), tail.begin(), tail.end());
    if (auto g = complete_from_first_row(first_row, counts, c.rows()); g && is_filling(*g, c)) {
      grids.push_back(std::move(*g));
    }
  }
  std::sort(grids.begin(), grids.end());
  grids.erase(std::unique(grids.begin(), grids.end()), grids.end());

  std::vector<Filling> out;
  for (auto& g : grids) {
    auto derived = derive_splittings(g, c.r(), c.n());
    out.push_back(Filling{std::move(g), std::move(derived)});
  }
  return out;
}

bool is_minimal(const Filling& f, std::span<const Filling> all) {
  if (!f.realizable()) throw InvalidInput("minimality is only defined for realizable fillings");
  const bool present = std::any_of(all.begin(), all.end(),
                                   [&](const Filling& g) { return g.grid == f.grid; });
  if (!present) throw InvalidInput("filling is not part of the given enumeration");

  const PolygonalLine fa = polygonal(f.derived->sub);
  const PolygonalLine fb = polygonal(f.derived->quot);
  for (const auto& g : all) {
    if (!g.realizable() || g.grid == f.grid) continue;
    const PolygonalLine ga = polygonal(g.derived->sub);
    const PolygonalLine gb = polygonal(g.derived->quot);
    if (dominates(ga, fa) && dominates(gb, fb) && (ga != fa || gb != fb)) return false;
  }
  return true;
}

long component_lower_bound(const TangentSplitting& c) {
  const auto all = enumerate_fillings(c);
  long count = 0;
  for (const auto& f : all) {
    if (f.realizable() && is_minimal(f, all)) ++count;
  }
  return count;
}

long filling_upper_bound(int r, int n) {
  const long top = static_cast<long>(r) * (n - r) - 2;
  const long k = n - r - 1;
  if (top < 0 || k < 0 || k > top) return 0;
  long result = 1;
  for (long i = 1; i <= k; ++i) result = result * (top - k + i) / i;
  return result;
}

bool balanced_tangent_check(const TangentSplitting& c) {
  if (c.parts().back() - c.parts().front() > 1) {
    throw InvalidInput("balanced_tangent_check needs a balanced tangent splitting");
  }
  for (const auto& f : enumerate_fillings(c)) {
    if (!f.realizable()) continue;
    if (!is_balanced(f.derived->sub) || !is_balanced(f.derived->quot)) return false;
  }
  return true;
}

}  // namespace grassmor
