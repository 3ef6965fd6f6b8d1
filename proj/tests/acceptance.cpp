// Acceptance harness: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "grassmor/exactness.hpp"
#include "grassmor/fillings.hpp"
#include "grassmor/splitting.hpp"
#include "grassmor/sweep.hpp"
#include "grassmor/transversality.hpp"
#include "support/oracles.hpp"

using namespace grassmor;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail << "first failure: " << what << "; ";
    pass = pass && ok;
  }
};

// The full sweep, shared by the first three criteria.
struct SweepRun {
  SweepSummary summary;
  std::vector<ExactSequence> sequences;
  double seconds = 0.0;
};

const SweepRun& sweep_run() {
  static const SweepRun run = [] {
    SweepRun s;
    const auto t0 = std::chrono::steady_clock::now();
    s.summary = run_sweep(SweepOptions{});
    s.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    for (const auto& r : s.summary.results) s.sequences.push_back(build(r.pair));
    return s;
  }();
  return run;
}

// p(1, t) takes the same nonzero value for deg + 1 distinct t iff p = c x^deg
// (symmetrically p(t, 1) for y^deg).
bool pure_power_by_points(const std::function<Rational(const Rational&, const Rational&)>& det,
                          int deg, bool in_x) {
  std::optional<Rational> value;
  for (int t = 0; t <= deg; ++t) {
    const Rational d = in_x ? det(1, t) : det(t, 1);
    if (d == 0) return false;
    if (value && *value != d) return false;
    value = d;
  }
  return true;
}

// v∘u vanishes at max-degree + 1 points of the chart x = 1 and at (0, 1).
bool compose_zero_by_points(const ExactSequence& seq) {
  int deg = 0;
  for (int a : seq.v.row_degrees()) {
    for (int b : seq.u.col_degrees()) deg = std::max(deg, a + b);
  }
  std::vector<std::pair<Rational, Rational>> pts{{0, 1}};
  for (int t = 0; t <= deg; ++t) pts.emplace_back(1, t);
  for (const auto& [x0, y0] : pts) {
    const auto prod = oracle::matmul(seq.v.evaluate(x0, y0), seq.u.evaluate(x0, y0));
    for (const auto& row : prod) {
      for (const auto& q : row) {
        if (q != 0) return false;
      }
    }
  }
  return true;
}

bool minors_by_points(const ExactSequence& seq) {
  const CertificateIndexSets ix = certificate_index_sets(seq);
  const int e = seq.pair.e();
  std::vector<int> v_rows(static_cast<std::size_t>(seq.v.rows()));
  std::iota(v_rows.begin(), v_rows.end(), 0);
  std::vector<int> u_cols(static_cast<std::size_t>(seq.u.cols()));
  std::iota(u_cols.begin(), u_cols.end(), 0);
  auto v_det = [&](const std::vector<int>& cols) {
    return [&, cols](const Rational& x0, const Rational& y0) {
      return oracle::det(oracle::submatrix(seq.v.evaluate(x0, y0), v_rows, cols));
    };
  };
  auto u_det = [&](const std::vector<int>& rows) {
    return [&, rows](const Rational& x0, const Rational& y0) {
      return oracle::det(oracle::submatrix(seq.u.evaluate(x0, y0), rows, u_cols));
    };
  };
  return pure_power_by_points(v_det(ix.v_first_cols), e, true) &&
         pure_power_by_points(v_det(ix.v_second_cols), e, false) &&
         pure_power_by_points(u_det(ix.u_first_rows), e, true) &&
         pure_power_by_points(u_det(ix.u_second_rows), e, false);
}

void criterion_1(Outcome& o) {
  const SweepRun& s = sweep_run();
  std::size_t expected = 0;
  for (int n = 4; n <= 8; ++n) {
    for (int r = 2; r <= n - 2; ++r) {
      for (int e = 1; e <= 6; ++e) {
        expected += oracle::partitions(r, e).size() * oracle::partitions(n - r, e).size();
      }
    }
  }
  o.require(s.summary.results.size() == expected, "instance count");
  o.require(s.summary.general > 0 && s.summary.dualized > 0, "both branches exercised");
  long bad = 0;
  for (std::size_t i = 0; i < s.summary.results.size(); ++i) {
    const InstanceResult& r = s.summary.results[i];
    const ExactSequence& seq = s.sequences[i];
    const bool ok = r.compose_zero && r.minors_ok && r.exponents_ok && r.ledger_ok &&
                    monomial_entries_ok(seq.u) && monomial_entries_ok(seq.v) &&
                    compose_zero_by_points(seq) && minors_by_points(seq);
    if (!ok) {
      if (bad == 0) o.require(false, r.pair.key());
      ++bad;
    }
  }
  o.require(s.seconds < 120.0, "runtime");
  o.detail << s.summary.results.size() << " instances (" << s.summary.general << " general, "
           << s.summary.dualized << " dualized), " << bad << " failures, sweep "
           << static_cast<int>(s.seconds * 10) / 10.0 << " s";
}

void criterion_2(Outcome& o) {
  const SweepRun& s = sweep_run();
  long surjective = 0;
  long witnessed = 0;
  for (const InstanceResult& r : s.summary.results) {
    surjective += r.surjective ? 1 : 0;
    witnessed += r.witness_ok ? 1 : 0;
    o.require(r.surjective && r.dphi_rank == r.hom_K_E, "rank " + r.pair.key());
    o.require(r.witness_ok, "witness " + r.pair.key());
    o.require(r.surjective == r.witness_ok, "agreement " + r.pair.key());
  }
  o.detail << surjective << "/" << s.summary.results.size() << " surjective, " << witnessed
           << " witnessed";
}

void criterion_3(Outcome& o) {
  const SweepRun& s = sweep_run();
  long balanced_instances = 0;
  for (const InstanceResult& r : s.summary.results) {
    const auto shortcut = balanced_shortcut(r.pair);
    if (!is_balanced(r.pair.sub) && !is_balanced(r.pair.quot)) {
      o.require(!shortcut.has_value(), "shortcut must abstain " + r.pair.key());
      continue;
    }
    ++balanced_instances;
    o.require(shortcut == std::optional<bool>(true), "shortcut " + r.pair.key());
    o.require(r.surjective, "rank " + r.pair.key());
  }
  long balanced_types = 0;
  for (int rank = 1; rank <= 6; ++rank) {
    for (int e = 0; e <= 12; ++e) {
      for (const auto& t : all_splitting_types(rank, e)) {
        if (is_balanced(t)) {
          ++balanced_types;
          o.require(ext1_self(t) == 0, "ext1 of balanced " + t.to_string());
        } else {
          o.require(ext1_self(t) > 0, "ext1 of unbalanced " + t.to_string());
        }
      }
    }
  }
  std::mt19937 rng(1);
  for (int trial = 0; trial < 1000; ++trial) {
    const int rank = 1 + trial % 8;
    const auto parts = oracle::random_type(rng, rank, 15);
    o.require(ext1_self(SplittingType(parts)) == oracle::ext1_by_h1(parts), "h1 oracle");
  }
  o.detail << balanced_instances << " instances with a balanced factor, " << balanced_types
           << " balanced types, 1000 random types vs h1 oracle";
}

void criterion_4(Outcome& o) {
  const SplittingType a({1, 5});
  const SplittingType b({2, 4});
  o.require(dim_mor(2, 4, 6) == 28, "dim_mor");
  o.require(ext1_self(a) == 3, "ext1(1,5)");
  o.require(ext1_self(b) == 1, "ext1(2,4)");
  o.require(codim_intersection(SplittingPair::make(4, 2, a, b)) == 4, "codim");
  const TangentSplitting c(2, 4, {3, 5, 7, 9});
  const auto fs = enumerate_fillings(c);
  o.require(fs.size() == 2, "filling count");
  if (fs.size() == 2) {
    o.require(fs[0].grid == Grid{{3, 5}, {7, 9}}, "first grid");
    o.require(fs[1].grid == Grid{{3, 7}, {5, 9}}, "second grid");
    for (const auto& f : fs) {
      o.require(f.realizable() && is_minimal(f, fs), "realizable and minimal");
    }
  }
  o.require(component_lower_bound(c) == 2, "lower bound");
  o.detail << "dim 28, codims 3/1/4, two minimal fillings, lower bound 2";
}

bool is_ap(std::span<const int> c) {
  const int lambda = c[1] - c[0];
  if (lambda <= 0) return false;
  for (std::size_t i = 1; i < c.size(); ++i) {
    if (c[i] - c[i - 1] != lambda) return false;
  }
  return true;
}

void criterion_5(Outcome& o) {
  long cases = 0;
  long two = 0;
  long ap = 0;
  for (const auto& cv : oracle::tangent_types(2, 4, 8)) {
    const TangentSplitting c(2, 4, cv);
    const auto fs = enumerate_fillings(c);
    ++cases;
    if (cv[1] < cv[2]) {
      ++two;
      const std::vector<Grid> want{{{cv[0], cv[1]}, {cv[2], cv[3]}}, {{cv[0], cv[2]}, {cv[1], cv[3]}}};
      std::vector<Grid> got;
      for (const auto& f : fs) got.push_back(f.grid);
      o.require(got == want, "G(2,4) grids");
    }
    for (const auto& f : fs) {
      if (f.realizable()) o.require(is_minimal(f, fs), "G(2,4) minimal");
    }
  }
  for (const auto& cv : oracle::tangent_types(3, 5, 8)) {
    const TangentSplitting c(3, 5, cv);
    const auto fs = enumerate_fillings(c);
    ++cases;
    if (is_ap(cv)) {
      ++ap;
      const int c1 = cv[0];
      const int l = cv[1] - cv[0];
      const std::vector<Grid> want{
          {{c1, c1 + l}, {c1 + 2 * l, c1 + 3 * l}, {c1 + 4 * l, c1 + 5 * l}},
          {{c1, c1 + 3 * l}, {c1 + l, c1 + 4 * l}, {c1 + 2 * l, c1 + 5 * l}}};
      std::vector<Grid> got;
      for (const auto& f : fs) got.push_back(f.grid);
      o.require(got == want, "G(3,5) AP grids");
    } else {
      o.require(fs.size() == 1, "G(3,5) single filling");
    }
    for (const auto& f : fs) {
      if (f.realizable()) o.require(is_minimal(f, fs), "G(3,5) minimal");
    }
  }
  // Progressions beyond e <= 8 still have exactly two fillings.
  long extra_ap = 0;
  for (int c1 = 0; c1 <= 6; ++c1) {
    for (int l = 1; l <= 4; ++l) {
      std::vector<int> cv;
      for (int k = 0; k < 6; ++k) cv.push_back(c1 + k * l);
      const auto fs = enumerate_fillings(TangentSplitting(3, 5, cv));
      o.require(fs.size() == 2, "G(3,5) progression count");
      for (const auto& f : fs) {
        if (f.realizable()) o.require(is_minimal(f, fs), "G(3,5) progression minimal");
      }
      ++extra_ap;
    }
  }
  long family = 0;
  for (int c1 = 0; c1 <= 4; ++c1) {
    for (int g = 1; g <= 3; ++g) {
      const int c2 = c1 + g;
      const int c3 = c2 + g;
      const int c4 = c3 + g;
      const auto fs = enumerate_fillings(TangentSplitting(4, 6, {c1, c1, c2, c2, c3, c3, c4, c4}));
      const std::vector<Grid> want{{{c1, c1}, {c2, c2}, {c3, c3}, {c4, c4}},
                                   {{c1, c2}, {c1, c2}, {c3, c4}, {c3, c4}},
                                   {{c1, c3}, {c1, c3}, {c2, c4}, {c2, c4}}};
      std::vector<Grid> got;
      for (const auto& f : fs) got.push_back(f.grid);
      o.require(got == want, "G(4,6) equal-gap grids");
      ++family;
    }
  }
  o.detail << cases << " tangent types (" << two << " with c2 < c3 on G(2,4), " << ap
           << " progressions on G(3,5)), " << extra_ap << " further progressions, " << family << " equal-gap G(4,6) types";
}

void criterion_6(Outcome& o) {
  const std::pair<int, int> shapes[] = {{2, 4}, {2, 5}, {3, 5}, {2, 6}, {4, 6}, {3, 6},
                                        {2, 7}, {3, 7}, {2, 8}};
  long tested = 0;
  long brute = 0;
  for (const auto& [r, n] : shapes) {
    const int cells = r * (n - r);
    const int max_e = cells <= 6 ? 8 : (cells <= 9 ? 3 : 4);
    for (const auto& cv : oracle::tangent_types(r, n, max_e)) {
      const auto fs = enumerate_fillings(TangentSplitting(r, n, cv));
      ++tested;
      o.require(static_cast<long>(fs.size()) <= filling_upper_bound(r, n), "upper bound");
      if (cells <= 9) {
        std::vector<Grid> got;
        for (const auto& f : fs) got.push_back(f.grid);
        o.require(got == oracle::brute_force_fillings(cv, r, n), "brute force");
        ++brute;
      }
    }
  }
  o.detail << tested << " tangent types within the bound, " << brute << " matched by brute force";
}

void criterion_7(Outcome& o) {
  long pairs = 0;
  for (int rank = 1; rank <= 4; ++rank) {
    for (int e = 0; e <= 8; ++e) {
      const auto ts = all_splitting_types(rank, e);
      for (const auto& s : ts) {
        o.require(closure_contains(s, s), "reflexive");
        for (const auto& t : ts) {
          ++pairs;
          const bool st = closure_contains(s, t);
          const std::vector<int> sv(s.ascending().begin(), s.ascending().end());
          const std::vector<int> tv(t.ascending().begin(), t.ascending().end());
          o.require(st == oracle::dominates(tv, sv), "dominance oracle");
          if (st && closure_contains(t, s)) o.require(s == t, "antisymmetric");
          if (!st) continue;
          for (const auto& w : ts) {
            if (closure_contains(t, w)) o.require(closure_contains(s, w), "transitive");
          }
        }
      }
    }
  }
  o.detail << pairs << " ordered pairs checked";
}

void criterion_8(Outcome& o) {
  const std::pair<int, int> shapes[] = {{2, 4}, {2, 5}, {3, 5}, {2, 6}, {4, 6}, {3, 6},
                                        {2, 7}, {5, 7}, {2, 8}, {6, 8}, {3, 7}, {4, 7}};
  std::vector<std::tuple<int, int, std::vector<int>>> cases;
  std::set<std::tuple<int, int, std::vector<int>>> seen;
  auto add = [&](int r, int n, std::vector<int> c) {
    if (cases.size() < 200 && seen.insert({r, n, c}).second) cases.emplace_back(r, n, std::move(c));
  };
  // Balanced types {a_i + b_j} of actual splitting pairs, up to 10 per shape ...
  for (const auto& [r, n] : shapes) {
    int taken = 0;
    for (const auto& c : oracle::tangent_types(r, n, 10)) {
      if (c.back() - c.front() > 1 || taken == 10) continue;
      add(r, n, c);
      ++taken;
    }
  }
  // ... then arbitrary balanced multisets.
  for (int lift = 0; cases.size() < 200 && lift < 12; ++lift) {
    for (const auto& [r, n] : shapes) {
      const int cells = r * (n - r);
      for (int base = 0; base <= 3; ++base) {
        const int k = (lift * 5 + base * 3) % cells;  // entries equal to base + 1
        std::vector<int> c(static_cast<std::size_t>(cells), base);
        for (int i = cells - k; i < cells; ++i) c[static_cast<std::size_t>(i)] = base + 1;
        add(r, n, c);
      }
    }
  }
  long with_realizable = 0;
  long fillings_checked = 0;
  long counterexamples = 0;
  for (const auto& [r, n, c] : cases) {
    const TangentSplitting t(r, n, c);
    o.require(balanced_tangent_check(t), "balanced check");
    bool any = false;
    for (const auto& f : enumerate_fillings(t)) {
      if (!f.realizable()) continue;
      any = true;
      ++fillings_checked;
      const bool ok = f.derived->sub.max_part() - f.derived->sub.min_part() <= 1 &&
                      f.derived->quot.max_part() - f.derived->quot.min_part() <= 1;
      counterexamples += ok ? 0 : 1;
      o.require(ok, "derived factors balanced");
    }
    with_realizable += any ? 1 : 0;
  }
  o.require(cases.size() == 200, "200 balanced types");
  o.require(with_realizable >= 50, "enough realizable cases");
  o.detail << cases.size() << " balanced tangent types, " << with_realizable
           << " with realizable fillings, " << fillings_checked << " fillings, " << counterexamples
           << " counterexamples";
}

void criterion_9(Outcome& o) {
  const SweepRun& s = sweep_run();
  std::vector<std::size_t> candidates;
  for (std::size_t i = 0; i < s.summary.results.size(); ++i) {
    if (!is_balanced(s.summary.results[i].pair.quot)) candidates.push_back(i);
  }
  o.require(candidates.size() >= 20, "corpus size");
  const std::size_t stride = candidates.size() / 20;
  long flips = 0;
  std::set<Provenance> kinds;
  for (int k = 0; k < 20 && stride > 0; ++k) {
    const ExactSequence& base = s.sequences[candidates[static_cast<std::size_t>(k) * stride]];
    kinds.insert(base.provenance);
    for (int i = 0; i < base.u.rows(); ++i) {
      for (int j = 0; j < base.u.cols(); ++j) {
        if (base.u.at(i, j).is_zero()) continue;
        ExactSequence m = base;
        m.u.set(i, j, -m.u.at(i, j));
        ++flips;
        o.require(!verify(m).compose_zero, "sign flip caught " + base.pair.key());
      }
    }
    ExactSequence z = base;
    z.u = PolyMatrix(z.u.row_degrees(), z.u.col_degrees());
    o.require(!is_surjective(z).surjective, "zeroed u " + base.pair.key());
  }
  o.require(kinds.size() == 2, "both provenances in corpus");
  o.detail << "20 instances, " << flips << " single-sign flips, 20 zeroed-u mutants";
}

}  // namespace

int main() {
  const std::pair<const char*, void (*)(Outcome&)> criteria[] = {
      {"construction sweep", criterion_1},
      {"transversality over the sweep", criterion_2},
      {"balanced shortcut and ext1", criterion_3},
      {"worked example values", criterion_4},
      {"filling counts on G(2,4), G(3,5), G(4,6)", criterion_5},
      {"filling upper bound and brute force", criterion_6},
      {"closure poset", criterion_7},
      {"balanced tangent types", criterion_8},
      {"mutation sensitivity", criterion_9},
  };
  int failed = 0;
  int index = 1;
  for (const auto& [name, fn] : criteria) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      fn(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s criterion %d (%s): %s [%.1fs]\n", o.pass ? "PASS" : "FAIL", index, name,
                o.detail.str().c_str(), secs);
    std::fflush(stdout);
    failed += o.pass ? 0 : 1;
    ++index;
  }
  std::printf("%d/%d criteria passed\n", index - 1 - failed, index - 1);
  return failed == 0 ? 0 : 1;
}
