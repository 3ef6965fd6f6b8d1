#include <gtest/gtest.h>

#include <random>

#include "grassmor/errors.hpp"
#include "grassmor/linalg.hpp"
#include "grassmor/transversality.hpp"
#include "support/oracles.hpp"

using namespace grassmor;

namespace {

SplittingPair P(int n, std::vector<int> a, std::vector<int> b) {
  const int r = static_cast<int>(a.size());
  return SplittingPair::make(n, r, SplittingType(std::move(a)), SplittingType(std::move(b)));
}

PolyMatrix random_element(const HomBasis& basis, std::mt19937& rng) {
  std::uniform_int_distribution<int> c(-3, 3);
  PolyMatrix m = basis.zero();
  for (long k = 0; k < basis.dim(); ++k) {
    const int coeff = c(rng);
    if (coeff == 0) continue;
    PolyMatrix e = basis.element_matrix(k);
    for (int i = 0; i < e.rows(); ++i) {
      for (int j = 0; j < e.cols(); ++j) {
        if (!e.at(i, j).is_zero()) m.set(i, j, m.at(i, j) + e.at(i, j) * Rational(coeff));
      }
    }
  }
  return m;
}

}  // namespace

TEST(HomBasisTest, OrderAndLookup) {
  const HomBasis b({1, 0}, {0, 2});
  // entries (0,0):deg1 -> 2, (0,1):deg3 -> 4, (1,0):deg0 -> 1, (1,1):deg2 -> 3
  EXPECT_EQ(b.dim(), 10);
  EXPECT_EQ(b.index_of(0, 1, 0), 2);
  EXPECT_EQ(b.index_of(1, 0, 0), 6);
  EXPECT_EQ(b.elements()[3].y_exp, 1);
  const PolyMatrix e = b.element_matrix(b.index_of(1, 1, 2));
  EXPECT_EQ(e.at(1, 1).to_string(), "y^2");
}

TEST(HomSpaceDimsTest, WorkedExample) {
  const ExactSequence seq = build(P(4, {5, 1}, {2, 4}));
  const DPhiMatrix d = assemble_dphi(seq);
  EXPECT_EQ(d.dims.hom_K_E, 28);
  EXPECT_EQ(d.dims.hom_K_On + d.dims.hom_On_E, 64);
  EXPECT_EQ(d.entries.size(), 28u);
  EXPECT_EQ(d.entries.front().size(), 64u);
}

TEST(HomSpaceDimsTest, SmallestDegree) {
  const DPhiMatrix d = assemble_dphi(build(P(4, {1, 0}, {0, 1})));
  // Σ(a_i + b_j + 1) = 2 + 3 + 1 + 2; n Σ(b_j + 1) + n Σ(a_i + 1) = 12 + 12.
  EXPECT_EQ(d.entries.size(), 8u);
  EXPECT_EQ(d.entries.front().size(), 24u);
}

TEST(HomSpaceDimsTest, ClosedFormsMatchBases) {
  for (int n = 4; n <= 7; ++n) {
    for (int r = 2; r <= n - 2; ++r) {
      for (int e = 1; e <= 4; ++e) {
        for (const auto& a : oracle::partitions(r, e)) {
          for (const auto& b : oracle::partitions(n - r, e)) {
            const SplittingPair p = P(n, a, b);
            const HomSpaces h(build(p));
            const HomSpaceDims d = closed_form_dims(p);
            EXPECT_EQ(h.hom_K_On.dim(), d.hom_K_On);
            EXPECT_EQ(h.hom_On_E.dim(), d.hom_On_E);
            EXPECT_EQ(h.hom_K_E.dim(), d.hom_K_E);
            EXPECT_EQ(d.hom_K_E, dim_mor(r, n, e));
          }
        }
      }
    }
  }
}

// Each column of DPhi is the coordinate vector of v∘phi or psi∘u for one
// basis element, computed here by plain matrix multiplication.
TEST(AssembleDPhi, ColumnsMatchDirectProducts) {
  for (const auto& p : {P(4, {5, 1}, {2, 4}), P(5, {3, 3}, {1, 2, 3})}) {
    const ExactSequence seq = build(p);
    const HomSpaces h(seq);
    const DPhiMatrix d = assemble_dphi(seq);
    for (long c = 0; c < h.hom_K_On.dim() + h.hom_On_E.dim(); ++c) {
      const PolyMatrix img = c < h.hom_K_On.dim()
                                 ? multiply(seq.v, h.hom_K_On.element_matrix(c))
                                 : multiply(h.hom_On_E.element_matrix(c - h.hom_K_On.dim()), seq.u);
      for (long row = 0; row < h.hom_K_E.dim(); ++row) {
        const BasisElement& be = h.hom_K_E.elements()[static_cast<std::size_t>(row)];
        EXPECT_EQ(d.entries[static_cast<std::size_t>(row)][static_cast<std::size_t>(c)],
                  img.at(be.row, be.col).coeff(be.y_exp));
      }
    }
  }
}

TEST(Rank, FractionFreeMatchesOracle) {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> c(-4, 4);
  std::uniform_int_distribution<int> z(0, 2);
  for (int trial = 0; trial < 60; ++trial) {
    const int rows = 1 + trial % 7;
    const int cols = 1 + (trial / 7) % 8;
    RationalMatrix m(static_cast<std::size_t>(rows), std::vector<Rational>(static_cast<std::size_t>(cols)));
    for (auto& row : m) {
      for (auto& x : row) x = z(rng) == 0 ? oracle::q(c(rng), 1 + z(rng)) : Rational(0);
    }
    if (rows > 2) m[2] = m[0];  // force dependencies
    for (auto& row : m) {
      for (auto& x : row) x.canonicalize();
    }
    EXPECT_EQ(rank(m), oracle::rank(m));
  }
}

TEST(IsSurjective, WorkedExample) {
  const TransversalityReport rep = is_surjective(build(P(4, {5, 1}, {2, 4})), true);
  EXPECT_EQ(rep.rank, 28);
  EXPECT_TRUE(rep.surjective);
  EXPECT_EQ(rep.method, TransversalityMethod::rank_computation);
  EXPECT_TRUE(rep.witness_checked);
  EXPECT_TRUE(rep.witness_spans);
}

TEST(IsSurjective, ZeroedUDropsRankByExt1OfQuotient) {
  for (const auto& p : {P(4, {5, 1}, {2, 4}), P(4, {3, 3}, {1, 5}), P(5, {4, 4}, {0, 1, 7}),
                        P(6, {2, 2, 1, 1}, {0, 6})}) {
    ExactSequence seq = build(p);
    seq.u = PolyMatrix(seq.u.row_degrees(), seq.u.col_degrees());
    const TransversalityReport rep = is_surjective(seq);
    EXPECT_EQ(rep.rank, rep.dims.hom_K_E - ext1_self(p.quot)) << p.key();
    EXPECT_FALSE(rep.surjective) << p.key();
  }
}

TEST(IsSurjective, RankMatchesOracleOnSmallCases) {
  for (const auto& p : {P(4, {1, 0}, {0, 1}), P(4, {2, 1}, {0, 3}), P(5, {2, 1}, {0, 1, 2})}) {
    const DPhiMatrix d = assemble_dphi(build(p));
    EXPECT_EQ(is_surjective(build(p)).rank, oracle::rank(d.entries));
  }
}

TEST(BalancedShortcut, Cases) {
  EXPECT_EQ(balanced_shortcut(P(4, {3, 3}, {1, 5})), std::optional<bool>(true));
  EXPECT_EQ(balanced_shortcut(P(4, {1, 5}, {2, 4})), std::nullopt);
  EXPECT_EQ(balanced_shortcut(P(5, {2, 2, 2}, {3, 3})), std::optional<bool>(true));
  const auto rep = shortcut_report(P(5, {2, 2, 2}, {3, 3}));
  ASSERT_TRUE(rep.has_value());
  EXPECT_TRUE(rep->surjective);
  EXPECT_EQ(rep->method, TransversalityMethod::balanced_shortcut);
  EXPECT_FALSE(shortcut_report(P(4, {1, 5}, {2, 4})).has_value());
}

TEST(BackSubstitution, ZeroTarget) {
  const ExactSequence seq = build(P(4, {5, 1}, {2, 4}));
  const HomSpaces h(seq);
  const SplitSolution sol = back_substitution_solve(seq, h.hom_K_E.zero());
  EXPECT_TRUE(sol.R.is_zero());
  EXPECT_TRUE(sol.Q.is_zero());
}

TEST(BackSubstitution, RoundTripOnRandomTargets) {
  std::mt19937 rng(7);
  for (const auto& p : {P(4, {5, 1}, {2, 4}), P(5, {3, 3}, {1, 2, 3}), P(7, {4, 2, 1, 0}, {1, 2, 4}),
                        P(8, {3, 2, 1, 0, 0}, {0, 1, 5})}) {
    const ExactSequence seq = build(p);
    const HomSpaces h(seq);
    for (int trial = 0; trial < 5; ++trial) {
      const PolyMatrix R0 = random_element(h.hom_K_On, rng);
      const PolyMatrix Q0 = random_element(h.hom_On_E, rng);
      const PolyMatrix target = multiply(seq.v, R0) + multiply(Q0, seq.u);
      const SplitSolution sol = back_substitution_solve(seq, target);
      EXPECT_TRUE(residual(seq, sol, target).is_zero()) << p.key();
    }
  }
}

TEST(BackSubstitution, EveryBasisElementSolvable) {
  const ExactSequence seq = build(P(4, {5, 1}, {2, 4}));
  const HomSpaces h(seq);
  ASSERT_EQ(h.hom_K_E.dim(), 28);
  for (long k = 0; k < h.hom_K_E.dim(); ++k) {
    const PolyMatrix t = h.hom_K_E.element_matrix(k);
    EXPECT_TRUE(residual(seq, back_substitution_solve(seq, t), t).is_zero()) << k;
  }
  EXPECT_TRUE(witness_spans(seq));
}

TEST(BackSubstitution, RejectsForeignSequences) {
  ExactSequence seq = build(P(4, {5, 1}, {2, 4}));
  seq.v.set(0, 0, HomPoly::zero(5));
  const HomSpaces h(seq);
  EXPECT_THROW(back_substitution_solve(seq, h.hom_K_E.element_matrix(0)), InvalidInput);
  EXPECT_FALSE(witness_spans(seq));
}
