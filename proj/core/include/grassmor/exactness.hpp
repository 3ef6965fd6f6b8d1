#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "grassmor/construction.hpp"

namespace grassmor {

struct SamplePoint {
  Rational x;
  Rational y;
};

struct PointRank {
  SamplePoint point;
  long rank_v = 0;
  long rank_u = 0;
};

/// Two complementary maximal minors of v and of u. The first of each pair is
/// expected to be ±x^e, the second ±y^e.
struct CertificateMinors {
  HomPoly v_first;
  HomPoly v_second;
  HomPoly u_first;
  HomPoly u_second;
};

struct ExactnessReport {
  Provenance provenance = Provenance::general;
  bool compose_zero = false;
  CertificateMinors minors;
  std::vector<PointRank> point_ranks;
  bool verdict = false;
  /// Names of failed checks, e.g. "compose", "minor_u_first", "rank_v@(1,2)".
  std::vector<std::string> failures;
};

/// v * u, an r x (n - r) matrix with entry degrees a_i + b_j.
PolyMatrix compose(const ExactSequence& seq);

/// Row/column index sets (0-based) used for the certificate minors. They
/// depend on the provenance: for dualized sequences the roles of u and v in
/// the undualized construction are exchanged.
struct CertificateIndexSets {
  std::vector<int> v_first_cols;
  std::vector<int> v_second_cols;
  std::vector<int> u_first_rows;
  std::vector<int> u_second_rows;
};
CertificateIndexSets certificate_index_sets(const ExactSequence& seq);

CertificateMinors certificate_minors(const ExactSequence& seq);

/// True iff p is c * x^dx * y^dy with c != 0 and the given exponents.
bool is_pure_power(const HomPoly& p, int dx, int dy);

/// (1, t) for t in {0, 1, -1, 2, 1/2, 7/3}.
std::vector<SamplePoint> default_sample_points();

/// Default points plus `extra` seeded random points (1, p/q).
std::vector<SamplePoint> seeded_sample_points(unsigned seed, int extra = 4);

/// Failures are recorded in the report, never thrown. Throws InvalidInput on
/// (0, 0) or repeated sample points.
ExactnessReport verify(const ExactSequence& seq, std::span<const SamplePoint> points);
ExactnessReport verify(const ExactSequence& seq);

}  // namespace grassmor
