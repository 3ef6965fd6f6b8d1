#include "grassmor/transversality.hpp"

#include "grassmor/errors.hpp"
#include "grassmor/linalg.hpp"

namespace grassmor {

HomBasis::HomBasis(std::vector<int> row_degrees, std::vector<int> col_degrees)
    : row_degrees_(std::move(row_degrees)), col_degrees_(std::move(col_degrees)) {
  long offset = 0;
  for (int i = 0; i < static_cast<int>(row_degrees_.size()); ++i) {
    for (int j = 0; j < static_cast<int>(col_degrees_.size()); ++j) {
      offsets_.push_back(offset);
      const int d = degree_at(i, j);
      for (int k = 0; k <= d; ++k) elements_.push_back({i, j, k});
      offset += d + 1;
    }
  }
}

long HomBasis::index_of(int row, int col, int y_exp) const {
  const std::size_t entry = static_cast<std::size_t>(row) * col_degrees_.size() +
                            static_cast<std::size_t>(col);
  if (y_exp < 0 || y_exp > degree_at(row, col)) {
    throw DegreeMismatch("monomial outside Hom space entry");
  }
  return offsets_.at(entry) + y_exp;
}

PolyMatrix HomBasis::element_matrix(long index) const {
  const BasisElement& el = elements_.at(static_cast<std::size_t>(index));
  PolyMatrix m = zero();
  m.set_monomial(el.row, el.col, 1, degree_at(el.row, el.col) - el.y_exp, el.y_exp);
  return m;
}

HomSpaces::HomSpaces(const ExactSequence& seq)
    : hom_K_On(std::vector<int>(static_cast<std::size_t>(seq.u.rows()), 0), seq.u.col_degrees()),
      hom_On_E(seq.v.row_degrees(), std::vector<int>(static_cast<std::size_t>(seq.v.cols()), 0)),
      hom_K_E(seq.v.row_degrees(), seq.u.col_degrees()) {}

HomSpaceDims closed_form_dims(const SplittingPair& p) {
  HomSpaceDims d;
  for (int b : p.quot.ascending()) d.hom_K_On += static_cast<long>(p.n) * (b + 1);
  for (int a : p.sub.ascending()) d.hom_On_E += static_cast<long>(p.n) * (a + 1);
  for (int a : p.sub.ascending()) {
    for (int b : p.quot.ascending()) d.hom_K_E += a + b + 1;
  }
  return d;
}

DPhiMatrix assemble_dphi(const ExactSequence& seq) {
  const HomSpaces spaces(seq);
  DPhiMatrix out;
  out.dims = {spaces.hom_K_On.dim(), spaces.hom_On_E.dim(), spaces.hom_K_E.dim()};
  const long cols = out.dims.hom_K_On + out.dims.hom_On_E;
  out.entries.assign(static_cast<std::size_t>(out.dims.hom_K_E),
                     std::vector<Rational>(static_cast<std::size_t>(cols)));

  const int r = seq.v.rows();
  const int m = seq.u.cols();
  // phi at (p, j) with monomial y^k: column j of v∘phi is v(:, p) * monomial.
  long col = 0;
  for (const auto& el : spaces.hom_K_On.elements()) {
    for (int i = 0; i < r; ++i) {
      for (const auto& t : seq.v.at(i, el.row).terms()) {
        const long row = spaces.hom_K_E.index_of(i, el.col, t.dy + el.y_exp);
        out.entries[row][col] += t.coeff;
      }
    }
    ++col;
  }
  // psi at (i, p) with monomial y^k: row i of psi∘u is monomial * u(p, :).
  for (const auto& el : spaces.hom_On_E.elements()) {
    for (int j = 0; j < m; ++j) {
      for (const auto& t : seq.u.at(el.col, j).terms()) {
        const long row = spaces.hom_K_E.index_of(el.row, j, t.dy + el.y_exp);
        out.entries[row][col] += t.coeff;
      }
    }
    ++col;
  }
  return out;
}

std::string to_string(TransversalityMethod m) {
  return m == TransversalityMethod::rank_computation ? "rank_computation" : "balanced_shortcut";
}

TransversalityReport is_surjective(const ExactSequence& seq, bool check_witness) {
  const DPhiMatrix dphi = assemble_dphi(seq);
  TransversalityReport rep;
  rep.dims = dphi.dims;
  rep.rank = rank(dphi.entries);
  rep.surjective = rep.rank == dphi.dims.hom_K_E;
  rep.method = TransversalityMethod::rank_computation;
  if (check_witness) {
    rep.witness_checked = true;
    rep.witness_spans = witness_spans(seq);
  }
  return rep;
}

std::optional<bool> balanced_shortcut(const SplittingPair& p) {
  if (is_balanced(p.sub) || is_balanced(p.quot)) return true;
  return std::nullopt;
}

std::optional<TransversalityReport> shortcut_report(const SplittingPair& p) {
  if (!balanced_shortcut(p)) return std::nullopt;
  TransversalityReport rep;
  rep.dims = closed_form_dims(p);
  rep.rank = rep.dims.hom_K_E;
  rep.surjective = true;
  rep.method = TransversalityMethod::balanced_shortcut;
  return rep;
}

namespace {

// Row of u holding the -y^{b_j} of column j in the undualized layout.
int q_pivot_row(int r, int j) { return j == 0 ? 0 : r + j; }

SplitSolution solve_undualized(const ExactSequence& seq, const PolyMatrix& target) {
  const PolyMatrix& u = seq.u;
  const PolyMatrix& v = seq.v;
  const int r = v.rows();
  const int n = v.cols();
  const int m = u.cols();
  if (target.rows() != r || target.cols() != m ||
      target.row_degrees() != v.row_degrees() || target.col_degrees() != u.col_degrees()) {
    throw ShapeMismatch("target is not an element of Hom(K, E)");
  }

  std::vector<Rational> v_pivot(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) {
    auto t = v.at(i, i).single_term();
    if (!t || t->dy != 0) throw InvalidInput("v(i,i) is not a pure power of x");
    v_pivot[i] = t->coeff;
  }
  std::vector<Rational> u_pivot(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) {
    auto t = u.at(q_pivot_row(r, j), j).single_term();
    if (!t || t->dx != 0) throw InvalidInput("u pivot entry is not a pure power of y");
    u_pivot[j] = t->coeff;
  }

  SplitSolution sol{HomBasis(std::vector<int>(static_cast<std::size_t>(n), 0), u.col_degrees()).zero(),
                    HomBasis(v.row_degrees(), std::vector<int>(static_cast<std::size_t>(n), 0)).zero()};
  std::vector<std::vector<bool>> r_fixed(static_cast<std::size_t>(n), std::vector<bool>(m, false));
  std::vector<std::vector<bool>> q_fixed(static_cast<std::size_t>(r), std::vector<bool>(n, false));

  for (int i = r - 1; i >= 0; --i) {
    for (int j = m - 1; j >= 0; --j) {
      const int qp = q_pivot_row(r, j);
      HomPoly rhs = target.at(i, j);
      for (int p = 0; p < n; ++p) {
        if (p == i || v.at(i, p).is_zero()) continue;
        r_fixed[p][j] = true;  // free unknowns are fixed at zero
        if (!sol.R.at(p, j).is_zero()) rhs -= v.at(i, p) * sol.R.at(p, j);
      }
      for (int p = 0; p < n; ++p) {
        if (p == qp || u.at(p, j).is_zero()) continue;
        q_fixed[i][p] = true;
        if (!sol.Q.at(i, p).is_zero()) rhs -= sol.Q.at(i, p) * u.at(p, j);
      }
      if (r_fixed[i][j] || q_fixed[i][qp]) {
        throw SolverConflict("pivot unknown already fixed at equation (" + std::to_string(i + 1) +
                             "," + std::to_string(j + 1) + ")");
      }
      auto [rs, qs] = solve_split(rhs, v.row_degrees()[i], u.col_degrees()[j]);
      sol.R.set(i, j, rs * Rational(1 / v_pivot[i]));
      sol.Q.set(i, qp, qs * Rational(1 / u_pivot[j]));
      r_fixed[i][j] = true;
      q_fixed[i][qp] = true;
    }
  }
  return sol;
}

}  // namespace

SplitSolution back_substitution_solve(const ExactSequence& seq, const PolyMatrix& target) {
  if (seq.provenance != Provenance::dualized) return solve_undualized(seq, target);
  // target = v R + Q u  <=>  target^T = u^T Q^T + R^T v^T.
  ExactSequence undual{seq.pair.swapped(), seq.v.transposed(), seq.u.transposed(),
                       Provenance::general};
  SplitSolution inner = solve_undualized(undual, target.transposed());
  return SplitSolution{inner.Q.transposed(), inner.R.transposed()};
}

PolyMatrix residual(const ExactSequence& seq, const SplitSolution& sol, const PolyMatrix& target) {
  return multiply(seq.v, sol.R) + multiply(sol.Q, seq.u) - target;
}

bool witness_spans(const ExactSequence& seq) {
  const HomSpaces spaces(seq);
  for (long k = 0; k < spaces.hom_K_E.dim(); ++k) {
    const PolyMatrix target = spaces.hom_K_E.element_matrix(k);
    try {
      const SplitSolution sol = back_substitution_solve(seq, target);
      if (!residual(seq, sol, target).is_zero()) return false;
    } catch (const SolverConflict&) {
      return false;
    } catch (const InvalidInput&) {
      return false;
    }
  }
  return true;
}

}  // namespace grassmor
