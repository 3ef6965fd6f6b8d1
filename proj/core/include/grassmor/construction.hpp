#pragma once

#include <string>
#include <vector>

#include "grassmor/poly_matrix.hpp"
#include "grassmor/splitting.hpp"

namespace grassmor {

/// Clamped partial sums A(j) = a_1 + ... + a_j (a non-increasing) and
/// B(i) = b_1 + ... + b_i (b non-decreasing). Indices outside [0, r] resp.
/// [0, n - r] clamp to the end values.
class PartialSums {
 public:
  explicit PartialSums(const SplittingPair& p);

  long A(int j) const;
  long B(int i) const;
  long s(int j, int i) const { return A(j) - B(i); }

  const std::vector<int>& a() const { return a_; }
  const std::vector<int>& b() const { return b_; }

 private:
  std::vector<int> a_;  // non-increasing
  std::vector<int> b_;  // non-decreasing
  std::vector<long> prefix_a_;
  std::vector<long> prefix_b_;
};

enum class OrderCase { a1_gt_b1, a1_le_b1 };

/// The interleaving of the A(j)'s and B(i)'s that the matrices are built from.
/// i_seq[l], j_seq[l] for l = 0, 1, ... until both saturate at n - r and r.
/// beta[i - 1] holds beta_i for i = 1 .. n - r.
struct InterleavingProfile {
  std::vector<int> i_seq;
  std::vector<int> j_seq;
  int alpha = 0;
  std::vector<int> beta;
  OrderCase order_case = OrderCase::a1_gt_b1;
};

enum class Provenance { general, baby, dualized };

std::string to_string(Provenance p);
std::string to_string(OrderCase c);

/// 0 -> K -u-> O^n -v-> E -> 0 with K = ⊕ O(-b_j), E = ⊕ O(a_i).
/// v is r x n with row ledger a (in construction order), u is n x (n - r) with
/// column ledger b. For dualized sequences the ledgers list a ascending and b
/// descending; read degrees from the ledgers, not from pair.
struct ExactSequence {
  SplittingPair pair;
  PolyMatrix u;
  PolyMatrix v;
  Provenance provenance = Provenance::general;
};

/// A(2r - n + l) >= B(l) for 0 <= l <= n - r. Requires n - r <= r.
bool check_order(const SplittingPair& p);

/// Requires n - r <= r.
InterleavingProfile interleaving_profile(const SplittingPair& p);

/// The monomial matrices for n - r <= r.
ExactSequence build_general(const SplittingPair& p);

/// The explicit 2 x 4 / 4 x 2 matrices for n = 4, r = 2.
ExactSequence build_baby(const SplittingPair& p);

/// build_general when n - r <= r, otherwise the transpose of the construction
/// for the swapped pair on G(n - r, n).
ExactSequence build(const SplittingPair& p);

/// The sequence for the swapped pair with u and v exchanged and transposed.
ExactSequence dualize(const ExactSequence& seq);

}  // namespace grassmor
