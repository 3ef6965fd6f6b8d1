#include "grassmor/exactness.hpp"

#include <numeric>
#include <random>

#include "grassmor/errors.hpp"
#include "grassmor/linalg.hpp"

namespace grassmor {

namespace {

std::vector<int> iota_range(int first, int last) {
  std::vector<int> out;
  for (int k = first; k <= last; ++k) out.push_back(k);
  return out;
}

}  // namespace

PolyMatrix compose(const ExactSequence& seq) { return multiply(seq.v, seq.u); }

CertificateIndexSets certificate_index_sets(const ExactSequence& seq) {
  const int n = seq.pair.n;
  CertificateIndexSets s;
  if (seq.provenance != Provenance::dualized) {
    const int r = seq.pair.r;
    s.v_first_cols = iota_range(0, r - 1);
    s.v_second_cols = iota_range(1, r);
    s.u_first_rows = iota_range(r, n - 1);
    s.u_second_rows = iota_range(r + 1, n - 1);
    s.u_second_rows.insert(s.u_second_rows.begin(), 0);
  } else {
    // Undualized rank is n - r; its u rows become our v columns and vice versa.
    const int rd = seq.pair.n - seq.pair.r;
    s.v_first_cols = iota_range(rd, n - 1);
    s.v_second_cols = iota_range(rd + 1, n - 1);
    s.v_second_cols.insert(s.v_second_cols.begin(), 0);
    s.u_first_rows = iota_range(0, rd - 1);
    s.u_second_rows = iota_range(1, rd);
  }
  return s;
}

CertificateMinors certificate_minors(const ExactSequence& seq) {
  const auto s = certificate_index_sets(seq);
  const auto all_v_rows = iota_range(0, seq.v.rows() - 1);
  const auto all_u_cols = iota_range(0, seq.u.cols() - 1);
  return CertificateMinors{
      minor(seq.v, all_v_rows, s.v_first_cols),
      minor(seq.v, all_v_rows, s.v_second_cols),
      minor(seq.u, s.u_first_rows, all_u_cols),
      minor(seq.u, s.u_second_rows, all_u_cols),
  };
}

bool is_pure_power(const HomPoly& p, int dx, int dy) {
  auto t = p.single_term();
  return t && t->dx == dx && t->dy == dy;
}

std::vector<SamplePoint> default_sample_points() {
  std::vector<SamplePoint> pts;
  for (const char* t : {"0", "1", "-1", "2", "1/2", "7/3"}) {
    pts.push_back({Rational(1), parse_rational(t)});
  }
  return pts;
}

std::vector<SamplePoint> seeded_sample_points(unsigned seed, int extra) {
  auto pts = default_sample_points();
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> num(-50, 50);
  std::uniform_int_distribution<int> den(1, 12);
  int added = 0;
  while (added < extra) {
    Rational t(Integer(num(rng)), Integer(den(rng)));
    t.canonicalize();
    bool dup = false;
    for (const auto& p : pts) dup = dup || (p.x == 1 && p.y == t);
    if (dup) continue;
    pts.push_back({Rational(1), t});
    ++added;
  }
  return pts;
}

ExactnessReport verify(const ExactSequence& seq, std::span<const SamplePoint> input) {
  // GMP needs canonical operands; callers may hand in e.g. 4/2.
  std::vector<SamplePoint> points(input.begin(), input.end());
  for (auto& p : points) {
    p.x.canonicalize();
    p.y.canonicalize();
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (sgn(points[i].x) == 0 && sgn(points[i].y) == 0) {
      throw InvalidInput("sample point (0, 0) is not a point of P^1");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (points[i].x * points[j].y == points[j].x * points[i].y) {
        throw InvalidInput("sample points " + std::to_string(j) + " and " + std::to_string(i) +
                           " are the same point of P^1");
      }
    }
  }

  ExactnessReport rep;
  rep.provenance = seq.provenance;
  rep.compose_zero = compose(seq).is_zero();
  if (!rep.compose_zero) rep.failures.push_back("compose");

  const int e = seq.pair.e();
  rep.minors = certificate_minors(seq);
  if (!is_pure_power(rep.minors.v_first, e, 0)) rep.failures.push_back("minor_v_first");
  if (!is_pure_power(rep.minors.v_second, 0, e)) rep.failures.push_back("minor_v_second");
  if (!is_pure_power(rep.minors.u_first, e, 0)) rep.failures.push_back("minor_u_first");
  if (!is_pure_power(rep.minors.u_second, 0, e)) rep.failures.push_back("minor_u_second");

  const long r = seq.v.rows();
  const long m = seq.u.cols();
  for (const auto& pt : points) {
    PointRank pr{pt, rank(seq.v.evaluate(pt.x, pt.y)), rank(seq.u.evaluate(pt.x, pt.y))};
    const std::string where = "@(" + pt.x.get_str() + "," + pt.y.get_str() + ")";
    if (pr.rank_v != r) rep.failures.push_back("rank_v" + where);
    if (pr.rank_u != m) rep.failures.push_back("rank_u" + where);
    rep.point_ranks.push_back(std::move(pr));
  }
  rep.verdict = rep.failures.empty();
  return rep;
}

ExactnessReport verify(const ExactSequence& seq) {
  const auto pts = default_sample_points();
  return verify(seq, pts);
}

}  // namespace grassmor
