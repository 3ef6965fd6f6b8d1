#include "grassmor/splitting.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "grassmor/errors.hpp"

namespace grassmor {

SplittingType::SplittingType(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw InvalidInput("splitting type must have positive rank");
  for (int p : parts_) {
    if (p < 0) throw InvalidInput("splitting type parts must be non-negative");
  }
  std::sort(parts_.begin(), parts_.end());
  degree_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

SplittingType SplittingType::parse(std::string_view text) {
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view tok = text.substr(pos, comma - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw InvalidInput("bad splitting type '" + std::string(text) + "'");
    }
    parts.push_back(value);
    pos = comma + 1;
  }
  return SplittingType(std::move(parts));
}

std::vector<int> SplittingType::descending() const {
  return {parts_.rbegin(), parts_.rend()};
}

std::string SplittingType::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ',';
    os << parts_[i];
  }
  return os.str();
}

SplittingPair SplittingPair::make(int n, int r, SplittingType sub, SplittingType quot) {
  if (n < 4) throw InvalidInput("n must be at least 4");
  if (r < 2 || r > n - 2) throw InvalidInput("r must satisfy 2 <= r <= n - 2");
  if (sub.rank() != r) throw InvalidInput("sub splitting type must have rank r");
  if (quot.rank() != n - r) throw InvalidInput("quot splitting type must have rank n - r");
  if (sub.degree() != quot.degree()) {
    throw InvalidInput("sub and quot degrees differ (" + std::to_string(sub.degree()) +
                       " vs " + std::to_string(quot.degree()) + ")");
  }
  if (sub.degree() <= 0) throw InvalidInput("degree e must be positive");
  return SplittingPair{n, r, std::move(sub), std::move(quot)};
}

SplittingPair SplittingPair::swapped() const { return SplittingPair{n, n - r, quot, sub}; }

std::string SplittingPair::key() const {
  return "n=" + std::to_string(n) + " r=" + std::to_string(r) + " a=" + sub.to_string() +
         " b=" + quot.to_string();
}

long ext1_self(const SplittingType& t) {
  long total = 0;
  for (int di : t.ascending()) {
    for (int dj : t.ascending()) total += std::max(di - dj - 1, 0);
  }
  return total;
}

long codim_intersection(const SplittingPair& p) { return ext1_self(p.sub) + ext1_self(p.quot); }

long dim_mor(int r, int n, int e) {
  if (n < 4 || r < 2 || r > n - 2 || e < 1) {
    throw InvalidInput("dim_mor needs n >= 4, 2 <= r <= n - 2, e >= 1");
  }
  return static_cast<long>(r) * (n - r) + static_cast<long>(n) * e;
}

PolygonalLine polygonal(const SplittingType& t) {
  PolygonalLine line;
  long sum = 0;
  for (int d : t.descending()) {
    sum += d;
    line.partial_sums.push_back(sum);
  }
  return line;
}

bool dominates(const PolygonalLine& p, const PolygonalLine& q) {
  if (p.partial_sums.size() != q.partial_sums.size()) {
    throw InvalidInput("polygonal lines have different lengths");
  }
  if (p.partial_sums.empty() || p.partial_sums.back() != q.partial_sums.back()) {
    throw InvalidInput("polygonal lines have different total degree");
  }
  for (std::size_t i = 0; i < p.partial_sums.size(); ++i) {
    if (p.partial_sums[i] < q.partial_sums[i]) return false;
  }
  return true;
}

bool closure_contains(const SplittingType& coarse, const SplittingType& fine) {
  if (coarse.rank() != fine.rank() || coarse.degree() != fine.degree()) {
    throw InvalidInput("closure_contains needs equal rank and degree");
  }
  return dominates(polygonal(fine), polygonal(coarse));
}

bool is_balanced(const SplittingType& t) { return t.max_part() - t.min_part() <= 1; }

namespace {

void extend(std::vector<int>& prefix, int remaining_rank, int remaining_degree, int min_part,
            std::vector<SplittingType>& out) {
  if (remaining_rank == 0) {
    if (remaining_degree == 0) out.emplace_back(prefix);
    return;
  }
  // Remaining parts are all >= min_part.
  for (int p = min_part; p * remaining_rank <= remaining_degree; ++p) {
    prefix.push_back(p);
    extend(prefix, remaining_rank - 1, remaining_degree - p, p, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<SplittingType> all_splitting_types(int rank, int degree) {
  if (rank < 1 || degree < 0) throw InvalidInput("rank must be positive, degree non-negative");
  std::vector<SplittingType> out;
  std::vector<int> prefix;
  extend(prefix, rank, degree, 0, out);
  return out;
}

}  // namespace grassmor
