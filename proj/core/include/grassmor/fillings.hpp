#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "grassmor/splitting.hpp"

namespace grassmor {

/// Splitting type c_1 <= ... <= c_{r(n-r)} of the restricted tangent bundle
/// of a morphism P^1 -> G(r, n).
class TangentSplitting {
 public:
  TangentSplitting(int r, int n, std::vector<int> parts);

  /// The multiset {a_i + b_j} of a splitting pair.
  static TangentSplitting of(const SplittingPair& p);

  int r() const { return r_; }
  int n() const { return n_; }
  int rows() const { return r_; }
  int cols() const { return n_ - r_; }
  std::span<const int> parts() const { return parts_; }

  friend bool operator==(const TangentSplitting&, const TangentSplitting&) = default;

 private:
  int r_;
  int n_;
  std::vector<int> parts_;
};

/// r x (n - r) integer matrix, row-major.
using Grid = std::vector<std::vector<int>>;

struct DerivedSplittings {
  SplittingType sub;   // a_1 <= ... <= a_r
  SplittingType quot;  // b_1 <= ... <= b_{n-r}
  int e = 0;
};

struct Filling {
  Grid grid;
  std::optional<DerivedSplittings> derived;

  bool realizable() const { return derived.has_value(); }
};

/// Monotone rows and columns, row differences independent of the column,
/// column differences independent of the row, and entry multiset equal to c.
/// Throws ShapeMismatch if grid is not r x (n - r).
bool is_filling(const Grid& grid, const TangentSplitting& c);

/// e = Σ/n, a_i = (row sum - e)/(n - r), b_j = (column sum - e)/r. nullopt
/// when any of these is fractional or negative.
std::optional<DerivedSplittings> derive_splittings(const Grid& grid, int r, int n);

/// All fillings, in lexicographic grid order.
std::vector<Filling> enumerate_fillings(const TangentSplitting& c);

/// f is minimal iff no other realizable filling in `all` dominates it in both
/// polygonal lines with at least one strict. Throws InvalidInput if f is not
/// realizable or not in `all`.
bool is_minimal(const Filling& f, std::span<const Filling> all);

/// Number of minimal realizable fillings.
long component_lower_bound(const TangentSplitting& c);

/// C(r(n-r) - 2, n - r - 1).
long filling_upper_bound(int r, int n);

/// For balanced c: every realizable filling derives balanced sub and quot.
/// Throws InvalidInput if c is not balanced.
bool balanced_tangent_check(const TangentSplitting& c);

}  // namespace grassmor
