#pragma once

#include <optional>
#include <string>
#include <vector>

#include "grassmor/construction.hpp"
#include "grassmor/poly_matrix.hpp"

namespace grassmor {

/// Position in a Hom space basis: matrix entry (row, col) and the monomial
/// x^(d-k) y^k with k = y_exp.
struct BasisElement {
  int row = 0;
  int col = 0;
  int y_exp = 0;
};

/// Monomial basis of one Hom space between sums of line bundles, described by
/// the degree ledger of its matrices. Basis order: entries row-major, then
/// monomials by descending x-exponent.
class HomBasis {
 public:
  HomBasis(std::vector<int> row_degrees, std::vector<int> col_degrees);

  long dim() const { return static_cast<long>(elements_.size()); }
  const std::vector<BasisElement>& elements() const { return elements_; }
  long index_of(int row, int col, int y_exp) const;
  int degree_at(int row, int col) const { return row_degrees_[row] + col_degrees_[col]; }
  /// The zero matrix of this space's shape.
  PolyMatrix zero() const { return PolyMatrix(row_degrees_, col_degrees_); }
  /// The basis element as a matrix.
  PolyMatrix element_matrix(long index) const;

 private:
  std::vector<int> row_degrees_;
  std::vector<int> col_degrees_;
  std::vector<long> offsets_;
  std::vector<BasisElement> elements_;
};

/// Hom(K, O^n), Hom(O^n, E) and Hom(K, E) for an exact sequence.
struct HomSpaces {
  HomBasis hom_K_On;
  HomBasis hom_On_E;
  HomBasis hom_K_E;

  explicit HomSpaces(const ExactSequence& seq);
};

struct HomSpaceDims {
  long hom_K_On = 0;
  long hom_On_E = 0;
  long hom_K_E = 0;
};

/// n Σ(b_j + 1), n Σ(a_i + 1), Σ_{i,j}(a_i + b_j + 1).
HomSpaceDims closed_form_dims(const SplittingPair& p);

/// Matrix of (phi, psi) -> v∘phi + psi∘u. Columns: the Hom(K, O^n) basis
/// followed by the Hom(O^n, E) basis. Rows: the Hom(K, E) basis.
struct DPhiMatrix {
  HomSpaceDims dims;
  RationalMatrix entries;
};

DPhiMatrix assemble_dphi(const ExactSequence& seq);

enum class TransversalityMethod { rank_computation, balanced_shortcut };
std::string to_string(TransversalityMethod m);

struct TransversalityReport {
  HomSpaceDims dims;
  long rank = 0;
  bool surjective = false;
  TransversalityMethod method = TransversalityMethod::rank_computation;
  /// The constructive solver was run on every basis element of Hom(K, E).
  bool witness_checked = false;
  /// ... and each solution had zero residual. Meaningful only if witness_checked.
  bool witness_spans = false;
};

/// Exact rank of DPhi; surjective iff rank = dim Hom(K, E).
/// With check_witness, also runs the back-substitution oracle.
TransversalityReport is_surjective(const ExactSequence& seq, bool check_witness = false);

/// true when sub or quot is balanced; nullopt otherwise (no verdict).
std::optional<bool> balanced_shortcut(const SplittingPair& p);

/// Report built from the shortcut alone (no matrix), when it applies.
std::optional<TransversalityReport> shortcut_report(const SplittingPair& p);

struct SplitSolution {
  PolyMatrix R;  // n x (n - r), an element of Hom(K, O^n)
  PolyMatrix Q;  // r x n, an element of Hom(O^n, E)
};

/// Solves target = v∘R + Q∘u by eliminating P_{r,n-r}, ..., P_{r,1}, ...,
/// P_{1,1} in turn. Equation (i, j) is solved for R_{i,j} and the Q entry
/// multiplying the -y^{b_j} of column j of u; any other unknown it touches
/// that is still free is fixed to zero. Throws SolverConflict if a pivot
/// unknown was already fixed, InvalidInput if seq lacks the pivot structure
/// of the construction.
SplitSolution back_substitution_solve(const ExactSequence& seq, const PolyMatrix& target);

/// v∘R + Q∘u - target.
PolyMatrix residual(const ExactSequence& seq, const SplitSolution& sol, const PolyMatrix& target);

/// Constructive span check: every basis element of Hom(K, E)
/// is hit with zero residual. Solver errors count as failure.
bool witness_spans(const ExactSequence& seq);

}  // namespace grassmor
