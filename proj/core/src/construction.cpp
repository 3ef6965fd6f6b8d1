#include "grassmor/construction.hpp"

#include <algorithm>

#include "grassmor/errors.hpp"

namespace grassmor {

namespace {

void require_corank_le_rank(const SplittingPair& p) {
  if (p.n - p.r > p.r) throw InvalidInput("construction needs n - r <= r; use build()");
}

int sign_of_power(int k) { return (k % 2 == 0) ? 1 : -1; }

}  // namespace

PartialSums::PartialSums(const SplittingPair& p)
    : a_(p.sub.descending()), b_(p.quot.ascending().begin(), p.quot.ascending().end()) {
  prefix_a_.assign(1, 0);
  for (int x : a_) prefix_a_.push_back(prefix_a_.back() + x);
  prefix_b_.assign(1, 0);
  for (int x : b_) prefix_b_.push_back(prefix_b_.back() + x);
}

long PartialSums::A(int j) const {
  j = std::clamp(j, 0, static_cast<int>(a_.size()));
  return prefix_a_[static_cast<std::size_t>(j)];
}

long PartialSums::B(int i) const {
  i = std::clamp(i, 0, static_cast<int>(b_.size()));
  return prefix_b_[static_cast<std::size_t>(i)];
}

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::general: return "general";
    case Provenance::baby: return "baby";
    case Provenance::dualized: return "dualized";
  }
  return "unknown";
}

std::string to_string(OrderCase c) {
  return c == OrderCase::a1_gt_b1 ? "a1_gt_b1" : "a1_le_b1";
}

bool check_order(const SplittingPair& p) {
  require_corank_le_rank(p);
  PartialSums ps(p);
  const int m = p.n - p.r;
  for (int l = 0; l <= m; ++l) {
    if (ps.A(2 * p.r - p.n + l) < ps.B(l)) return false;
  }
  return true;
}

InterleavingProfile interleaving_profile(const SplittingPair& p) {
  require_corank_le_rank(p);
  PartialSums ps(p);
  const int r = p.r;
  const int m = p.n - p.r;

  auto largest_j = [&](long bound) {
    int best = 0;
    for (int j = 0; j <= r; ++j) {
      if (ps.A(j) <= bound) best = j;
    }
    return best;
  };
  auto largest_i = [&](long bound) {
    int best = 0;
    for (int i = 0; i <= m; ++i) {
      if (ps.B(i) <= bound) best = i;
    }
    return best;
  };

  InterleavingProfile prof;
  prof.order_case = ps.a().front() > ps.b().front() ? OrderCase::a1_gt_b1 : OrderCase::a1_le_b1;
  prof.i_seq.push_back(0);
  prof.j_seq.push_back(largest_j(ps.B(1)));
  while (prof.i_seq.back() < m || prof.j_seq.back() < r) {
    if (prof.i_seq.size() > static_cast<std::size_t>(r + m + 2)) {
      throw std::logic_error("interleaving recursion did not saturate for " + p.key());
    }
    int il = largest_i(ps.A(prof.j_seq.back() + 1));
    int jl = largest_j(ps.B(il + 1));
    prof.i_seq.push_back(il);
    prof.j_seq.push_back(jl);
  }
  // Least l >= 0 with j_{l+1} = r. j_0 < r always, since B(1) < e.
  prof.alpha = 0;
  while (prof.j_seq[static_cast<std::size_t>(prof.alpha) + 1] < r) ++prof.alpha;

  prof.beta.assign(static_cast<std::size_t>(m), 0);
  if (prof.order_case == OrderCase::a1_le_b1) prof.beta[0] += prof.j_seq[0];
  for (int l = 1; l <= prof.alpha; ++l) {
    prof.beta[static_cast<std::size_t>(prof.i_seq[l])] += prof.j_seq[l] - prof.j_seq[l - 1];
  }
  prof.beta[static_cast<std::size_t>(m) - 1] += r - prof.j_seq[prof.alpha] - 1;
  return prof;
}

ExactSequence build_general(const SplittingPair& p) {
  require_corank_le_rank(p);
  const InterleavingProfile prof = interleaving_profile(p);
  PartialSums ps(p);
  const int r = p.r;
  const int m = p.n - p.r;
  const auto& a = ps.a();
  const auto& b = ps.b();
  const auto& iq = prof.i_seq;
  const auto& jq = prof.j_seq;
  const int alpha = prof.alpha;

  // Formulas below use 1-based (row, col); shift on the way into the matrix.
  PolyMatrix v = PolyMatrix::with_row_degrees(a, p.n);
  auto set_v = [&](int i, int q, int sign, long dx, long dy) {
    v.set_monomial(i - 1, q - 1, sign, static_cast<int>(dx), static_cast<int>(dy));
  };
  PolyMatrix u = PolyMatrix::with_col_degrees(p.n, b);
  auto set_u = [&](int q, int j, int sign, long dx, long dy) {
    if (!u.at(q - 1, j - 1).is_zero()) {
      throw std::logic_error("u entry (" + std::to_string(q) + "," + std::to_string(j) +
                             ") assigned twice for " + p.key());
    }
    u.set_monomial(q - 1, j - 1, sign, static_cast<int>(dx), static_cast<int>(dy));
  };

  // v: bidiagonal r x (r + 1) block.
  for (int i = 1; i <= r; ++i) {
    set_v(i, i, 1, a[i - 1], 0);
    set_v(i, i + 1, 1, 0, a[i - 1]);
  }
  // v: rows j_l + 1 of the r x (n - r - 1) block, columns r + 1 + q.
  for (int l = 0; l <= alpha; ++l) {
    const int row = jq[l] + 1;
    const int q_hi = (l < alpha) ? iq[l + 1] : m - 1;
    for (int q = iq[l] + 1; q <= q_hi; ++q) {
      set_v(row, r + 1 + q, 1, ps.A(row) - ps.B(q), ps.B(q) - ps.A(jq[l]));
    }
  }

  // u1: rows 1 .. j_0 + 1 of column 1.
  set_u(1, 1, -1, 0, b[0]);
  for (int c = 1; c <= jq[0]; ++c) {
    set_u(c + 1, 1, sign_of_power(c + 1), ps.A(c), ps.B(1) - ps.A(c));
  }
  // u2: column i_l + 1 on rows j_{l-1} + 2 .. j_l + 1.
  for (int l = 1; l <= alpha; ++l) {
    const int col = iq[l] + 1;
    for (int c = 1; c <= jq[l] - jq[l - 1]; ++c) {
      const int jj = jq[l - 1] + c;
      set_u(jj + 1, col, sign_of_power(c - 1), ps.A(jj) - ps.B(iq[l]), ps.B(iq[l] + 1) - ps.A(jj));
    }
  }
  // u2: column n - r on rows j_alpha + 2 .. r.
  for (int c = 1; c <= r - jq[alpha] - 1; ++c) {
    const int jj = jq[alpha] + c;
    set_u(jj + 1, m, sign_of_power(c - 1), ps.A(jj) - ps.B(m - 1), ps.B(m) - ps.A(jj));
  }
  // u3: diagonal, sub-diagonal and the corner (r + 1, n - r).
  for (int i = 2; i <= m; ++i) set_u(r + i, i, -1, 0, b[i - 1]);
  for (int i = 1; i <= m - 1; ++i) set_u(r + 1 + i, i, sign_of_power(prof.beta[i - 1]), b[i - 1], 0);
  set_u(r + 1, m, sign_of_power(prof.beta[m - 1]), b[m - 1], 0);

  return ExactSequence{p, std::move(u), std::move(v), Provenance::general};
}

ExactSequence build_baby(const SplittingPair& p) {
  if (p.n != 4 || p.r != 2) throw ShapeMismatch("build_baby needs n = 4, r = 2");
  PartialSums ps(p);
  const int a1 = ps.a()[0], a2 = ps.a()[1];
  const int b1 = ps.b()[0], b2 = ps.b()[1];
  if (a1 < b1) throw std::logic_error("a_1 < b_1 cannot happen for equal degrees");

  PolyMatrix v = PolyMatrix::with_row_degrees(ps.a(), 4);
  v.set_monomial(0, 0, 1, a1, 0);
  v.set_monomial(0, 1, 1, 0, a1);
  v.set_monomial(0, 3, 1, a1 - b1, b1);
  v.set_monomial(1, 1, 1, a2, 0);
  v.set_monomial(1, 2, 1, 0, a2);

  PolyMatrix u = PolyMatrix::with_col_degrees(4, ps.b());
  u.set_monomial(0, 0, -1, 0, b1);
  u.set_monomial(1, 1, 1, a1 - b1, a2);
  u.set_monomial(2, 1, -1, b2, 0);
  u.set_monomial(3, 0, 1, b1, 0);
  u.set_monomial(3, 1, -1, 0, b2);

  return ExactSequence{p, std::move(u), std::move(v), Provenance::baby};
}

ExactSequence dualize(const ExactSequence& seq) {
  return ExactSequence{seq.pair.swapped(), seq.v.transposed(), seq.u.transposed(),
                       Provenance::dualized};
}

ExactSequence build(const SplittingPair& p) {
  if (p.n - p.r <= p.r) return build_general(p);
  ExactSequence dual = build_general(p.swapped());
  ExactSequence out = dualize(dual);
  out.pair = p;
  return out;
}

}  // namespace grassmor
