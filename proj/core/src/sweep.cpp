#include "grassmor/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <optional>
#include <thread>

#include "grassmor/exactness.hpp"
#include "grassmor/transversality.hpp"

namespace grassmor {

std::vector<SplittingPair> sweep_instances(const SweepOptions& opts) {
  std::vector<SplittingPair> out;
  for (int n = std::max(opts.min_n, 4); n <= opts.max_n; ++n) {
    for (int r = 2; r <= n - 2; ++r) {
      for (int e = std::max(opts.min_e, 1); e <= opts.max_e; ++e) {
        for (const auto& a : all_splitting_types(r, e)) {
          for (const auto& b : all_splitting_types(n - r, e)) {
            out.push_back(SplittingPair::make(n, r, a, b));
          }
        }
      }
    }
  }
  return out;
}

bool monomial_entries_ok(const PolyMatrix& m) {
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      const HomPoly& p = m.at(i, j);
      if (p.is_zero()) continue;
      auto t = p.single_term();
      if (!t || t->dx < 0 || t->dy < 0 || t->dx + t->dy != m.degree_at(i, j)) return false;
    }
  }
  return true;
}

namespace {

bool ledger_matches(const ExactSequence& seq) {
  std::vector<int> rows = seq.v.row_degrees();
  std::vector<int> cols = seq.u.col_degrees();
  std::sort(rows.begin(), rows.end());
  std::sort(cols.begin(), cols.end());
  const auto a = seq.pair.sub.ascending();
  const auto b = seq.pair.quot.ascending();
  const auto zero = [](const std::vector<int>& d) {
    return std::all_of(d.begin(), d.end(), [](int x) { return x == 0; });
  };
  return std::equal(rows.begin(), rows.end(), a.begin(), a.end()) &&
         std::equal(cols.begin(), cols.end(), b.begin(), b.end()) &&
         zero(seq.v.col_degrees()) && zero(seq.u.row_degrees());
}

}  // namespace

InstanceResult check_instance(const SplittingPair& p, const SweepOptions& opts) {
  InstanceResult res{p};
  try {
    const ExactSequence seq = build(p);
    res.provenance = seq.provenance;
    res.ledger_ok = ledger_matches(seq);
    if (!res.ledger_ok) res.failures.push_back("ledger");
    res.exponents_ok = monomial_entries_ok(seq.u) && monomial_entries_ok(seq.v);
    if (!res.exponents_ok) res.failures.push_back("exponents");

    const ExactnessReport rep = verify(seq);
    res.compose_zero = rep.compose_zero;
    res.minors_ok = true;
    res.ranks_ok = true;
    for (const auto& f : rep.failures) {
      if (f.rfind("minor", 0) == 0) res.minors_ok = false;
      if (f.rfind("rank", 0) == 0) res.ranks_ok = false;
      res.failures.push_back(f);
    }

    if (opts.transversality) {
      const TransversalityReport tr = is_surjective(seq, opts.witness);
      res.surjective = tr.surjective;
      res.dphi_rank = tr.rank;
      res.hom_K_E = tr.dims.hom_K_E;
      if (!tr.surjective) res.failures.push_back("dphi_not_surjective");
      if (opts.witness) {
        res.witness_ok = tr.witness_spans;
        if (!tr.witness_spans) res.failures.push_back("witness");
      }
    }
  } catch (const std::exception& ex) {
    res.failures.push_back(std::string("exception: ") + ex.what());
  }
  return res;
}

SweepSummary run_sweep(const SweepOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  const auto instances = sweep_instances(opts);
  SweepSummary summary;
  summary.options = opts;
  std::vector<std::optional<InstanceResult>> slots(instances.size());

  unsigned threads = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(instances.size(), 1)));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < instances.size(); k = next++) {
      slots[k] = check_instance(instances[k], opts);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (auto& slot : slots) summary.results.push_back(std::move(*slot));

  for (const auto& r : summary.results) {
    if (!r.ok()) ++summary.failures;
    if (r.provenance == Provenance::dualized) {
      ++summary.dualized;
    } else {
      ++summary.general;
    }
  }
  summary.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return summary;
}

}  // namespace grassmor
