#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace grassmor {

/// Splitting type of a bundle on P^1: a multiset of non-negative integers.
/// Stored in non-decreasing order; descending() gives the a_1 >= ... >= a_r
/// presentation used for the exact-sequence construction.
class SplittingType {
 public:
  explicit SplittingType(std::vector<int> parts);

  /// Parses "1,5" (any order, optional spaces).
  static SplittingType parse(std::string_view text);

  int rank() const { return static_cast<int>(parts_.size()); }
  int degree() const { return degree_; }

  std::span<const int> ascending() const { return parts_; }
  std::vector<int> descending() const;
  int min_part() const { return parts_.front(); }
  int max_part() const { return parts_.back(); }

  /// "1,5" in non-decreasing order.
  std::string to_string() const;

  friend bool operator==(const SplittingType&, const SplittingType&) = default;
  friend auto operator<=>(const SplittingType&, const SplittingType&) = default;

 private:
  std::vector<int> parts_;
  int degree_ = 0;
};

/// (a., b.) for a degree-e morphism P^1 -> G(r, n): sub is the splitting of
/// the dual restricted sub-bundle (rank r), quot that of the restricted
/// quotient bundle (rank n - r).
struct SplittingPair {
  int n = 0;
  int r = 0;
  SplittingType sub;
  SplittingType quot;

  /// Validates n >= 4, 2 <= r <= n - 2, ranks, and equal positive degree.
  static SplittingPair make(int n, int r, SplittingType sub, SplittingType quot);

  int e() const { return sub.degree(); }
  int corank() const { return n - r; }

  /// The pair for G(n - r, n) with the roles of sub and quot exchanged.
  SplittingPair swapped() const;

  /// "n=4 r=2 a=1,5 b=2,4"
  std::string key() const;
};

struct PolygonalLine {
  std::vector<long> partial_sums;
  friend bool operator==(const PolygonalLine&, const PolygonalLine&) = default;
};

/// sum over ordered pairs of max(d_i - d_j - 1, 0), i.e. dim Ext^1(E, E).
long ext1_self(const SplittingType& t);

/// Expected codimension of M(b.) ∩ M'(a.) in Mor_e.
long codim_intersection(const SplittingPair& p);

/// dim Mor_e(P^1, G(r, n)) = r(n - r) + n e.
long dim_mor(int r, int n, int e);

PolygonalLine polygonal(const SplittingType& t);

/// True iff every partial sum of p is >= the matching one of q. Lines must have
/// equal length and equal total; anything else throws InvalidInput.
bool dominates(const PolygonalLine& p, const PolygonalLine& q);

/// closure(M(coarse)) ⊇ M(fine) iff P(coarse) <= P(fine).
bool closure_contains(const SplittingType& coarse, const SplittingType& fine);

bool is_balanced(const SplittingType& t);

/// Every splitting type of the given rank and degree, in lexicographic order
/// of their ascending parts.
std::vector<SplittingType> all_splitting_types(int rank, int degree);

}  // namespace grassmor
