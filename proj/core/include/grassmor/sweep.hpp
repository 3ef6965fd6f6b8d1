#pragma once

#include <string>
#include <vector>

#include "grassmor/construction.hpp"

namespace grassmor {

struct SweepOptions {
  int min_n = 4;
  int max_n = 8;
  int min_e = 1;
  int max_e = 6;
  bool transversality = true;
  bool witness = true;
  /// 0 = std::thread::hardware_concurrency().
  unsigned threads = 0;
};

struct InstanceResult {
  SplittingPair pair;
  Provenance provenance = Provenance::general;
  bool compose_zero = false;
  bool minors_ok = false;
  bool exponents_ok = false;
  bool ledger_ok = false;
  bool ranks_ok = false;
  bool surjective = false;   // only set when transversality is checked
  bool witness_ok = false;   // only set when the witness is checked
  long dphi_rank = 0;
  long hom_K_E = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

struct SweepSummary {
  SweepOptions options;
  std::vector<InstanceResult> results;  // sorted by (n, r, e, a, b)
  long failures = 0;
  long general = 0;
  long dualized = 0;
  double seconds = 0.0;
};

/// Every (n, r, a., b.) with min_n <= n <= max_n, 2 <= r <= n - 2 and
/// min_e <= e <= max_e, in deterministic order.
std::vector<SplittingPair> sweep_instances(const SweepOptions& opts);

/// Construction, degree-ledger and exponent checks, certificate minors and
/// sampled ranks; optionally DPhi rank and the constructive witness.
InstanceResult check_instance(const SplittingPair& p, const SweepOptions& opts);

SweepSummary run_sweep(const SweepOptions& opts);

/// Every nonzero entry is a single monomial with non-negative exponents
/// matching the degree ledger.
bool monomial_entries_ok(const PolyMatrix& m);

}  // namespace grassmor
