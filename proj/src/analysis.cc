#include "slls/analysis.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "slls/paths.h"
#include "slls/pools.h"

namespace slls::analysis {
namespace {

void RequireTableBound(std::uint64_t max_position) {
  if (max_position > kMaxTablePosition) {
    throw Error(ErrorCode::kBoundExceeded, "size table is limited to 2^33");
  }
}

void RequireStatsBound(std::uint64_t n) {
  if (n > kMaxStatsPosition) {
    throw Error(ErrorCode::kBoundExceeded, "scheme stats are limited to 2^20");
  }
}

std::size_t PositionalSize(std::uint64_t base, std::uint64_t n) {
  return PositionalVertices(Scheme::SkipList(base), n).size();
}

SizeTableRow ComputeRow(std::uint64_t prev, std::uint64_t upper) {
  SizeTableRow row{upper, PositionalSize(2, upper), PositionalSize(3, upper),
                   true};
  if (prev + 1 < upper) {
    row.constant_on_range = PositionalSize(2, prev + 1) == row.size_base2 &&
                            PositionalSize(3, prev + 1) == row.size_base3;
  }
  return row;
}

// Per-position degree statistics, shared by both kernels.
SchemeStats PositionStats(const Scheme& scheme, std::uint64_t m) {
  SchemeStats s{1, 0, 0};  // the sink
  const Layer top = scheme.is_skip_list() ? MaxPow(scheme.base(), m) : 0;
  for (Layer k = 0; k <= top; ++k) {
    const std::size_t degree = OutNeighbors(scheme, Vertex::Inner(m, k)).size();
    s.vertex_count += 1;
    s.edge_count += degree;
    s.max_out_degree = std::max(s.max_out_degree, degree);
  }
  return s;
}

std::size_t GreedyLength(const Scheme& scheme, std::uint64_t t,
                         std::uint64_t s) {
  return GreedyPath(scheme, Commit(scheme, t), Commit(scheme, s)).edge_count();
}

// Mismatching s for a single t; shared by both kernels.
std::vector<std::uint64_t> MismatchesFor(const Scheme& scheme,
                                         std::uint64_t t) {
  const auto dist = BfsDistances(scheme, Commit(scheme, t), 1);
  std::vector<std::uint64_t> bad;
  for (std::uint64_t s = 1; s < t; ++s) {
    auto it = dist.find(Commit(scheme, s));
    if (it == dist.end() || it->second != GreedyLength(scheme, t, s)) {
      bad.push_back(s);
    }
  }
  return bad;
}

}  // namespace

std::uint32_t CeilLog(std::uint64_t base, std::uint64_t n) {
  return Generation(Scheme::SkipList(base), n);
}

std::uint32_t FloorLog(std::uint64_t base, std::uint64_t n) {
  if (n == 0) throw Error(ErrorCode::kDomain, "FloorLog(0) is undefined");
  std::uint32_t t = 0;
  while (n >= base) {
    n /= base;
    ++t;
  }
  return t;
}

std::vector<std::uint64_t> TableBoundaries(std::uint64_t max_position) {
  RequireTableBound(max_position);
  std::vector<std::uint64_t> out;
  if (max_position == 0) return out;
  out.push_back(1);
  for (std::uint64_t b : {2, 3}) {
    for (std::uint64_t p = b; p <= max_position; p *= b) out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<SizeTableRow> SizeTable(std::uint64_t max_position) {
  const std::vector<std::uint64_t> bounds = TableBoundaries(max_position);
  std::vector<SizeTableRow> rows(bounds.size());
  const long count = static_cast<long>(bounds.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i) {
    rows[i] = ComputeRow(i == 0 ? 0 : bounds[i - 1], bounds[i]);
  }
  return rows;
}

void WriteSizeTableCsv(std::ostream& out,
                       const std::vector<SizeTableRow>& rows) {
  out << "upper_n,slls2,slls3\n";
  for (const SizeTableRow& r : rows) {
    out << r.upper_n << ',' << r.size_base2 << ',' << r.size_base3 << '\n';
  }
}

void WriteSizeTableText(std::ostream& out,
                        const std::vector<SizeTableRow>& rows) {
  char line[96];
  std::snprintf(line, sizeof line, "%12s %6s %6s  %s\n", "n <=", "SLLS_2",
                "SLLS_3", "smaller");
  out << line;
  for (const SizeTableRow& r : rows) {
    const char* best = r.size_base2 < r.size_base3   ? "base 2"
                       : r.size_base3 < r.size_base2 ? "base 3"
                                                     : "tie";
    std::snprintf(line, sizeof line, "%12llu %6zu %6zu  %s%s\n",
                  static_cast<unsigned long long>(r.upper_n), r.size_base2,
                  r.size_base3, best,
                  r.constant_on_range ? "" : "  (varies within range)");
    out << line;
  }
}

SchemeStats ComputeSchemeStats(const Scheme& scheme, std::uint64_t n) {
  RequireStatsBound(n);
  std::uint64_t vertices = 0;
  std::uint64_t edges = 0;
  std::size_t max_degree = 0;
  const long count = static_cast<long>(n);
#pragma omp parallel for reduction(+ : vertices, edges) \
    reduction(max : max_degree) schedule(static)
  for (long i = 1; i <= count; ++i) {
    const SchemeStats s = PositionStats(scheme, static_cast<std::uint64_t>(i));
    vertices += s.vertex_count;
    edges += s.edge_count;
    max_degree = std::max(max_degree, s.max_out_degree);
  }
  return SchemeStats{vertices, edges, max_degree};
}

std::vector<std::uint64_t> SizeLawViolations(
    const Scheme& scheme, std::uint64_t lo, std::uint64_t hi,
    const std::function<std::size_t(std::uint64_t)>& expected) {
  if (hi < lo) return {};
  std::vector<char> bad(hi - lo + 1, 0);
  const long count = static_cast<long>(bad.size());
#pragma omp parallel for schedule(dynamic, 256)
  for (long i = 0; i < count; ++i) {
    const std::uint64_t n = lo + static_cast<std::uint64_t>(i);
    bad[i] = PositionalVertices(scheme, n).size() != expected(n);
  }
  std::vector<std::uint64_t> out;
  for (std::size_t i = 0; i < bad.size(); ++i) {
    if (bad[i]) out.push_back(lo + i);
  }
  return out;
}

std::vector<std::uint64_t> BoundedLawViolations(const Scheme& scheme,
                                                std::uint64_t round_length,
                                                bool chained) {
  const std::size_t want = RoundExponent(scheme, round_length) + 1 + chained;
  std::vector<char> bad(round_length + 1, 0);
  const long count = static_cast<long>(round_length);
#pragma omp parallel for schedule(dynamic, 64)
  for (long n = 2; n <= count; ++n) {
    bad[n] = BoundedPositionalVertices(scheme, n, round_length, chained)
                 .size() != want;
  }
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 2; n <= round_length; ++n) {
    if (bad[n]) out.push_back(n);
  }
  return out;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> GreedyBfsMismatches(
    const Scheme& scheme, std::uint64_t max_t) {
  std::vector<std::vector<std::uint64_t>> per_t(max_t + 1);
  const long count = static_cast<long>(max_t);
#pragma omp parallel for schedule(dynamic)
  for (long t = 2; t <= count; ++t) {
    per_t[t] = MismatchesFor(scheme, static_cast<std::uint64_t>(t));
  }
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  for (std::uint64_t t = 2; t <= max_t; ++t) {
    for (std::uint64_t s : per_t[t]) out.emplace_back(s, t);
  }
  return out;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> PoolUnionViolations(
    const Scheme& scheme, std::uint64_t max_t) {
  std::vector<std::vector<Vertex>> pools(max_t + 1);
  const long count = static_cast<long>(max_t);
#pragma omp parallel for schedule(dynamic)
  for (long n = 1; n <= count; ++n) {
    pools[n] = CertificatePool(scheme, n).Vertices();
  }
  std::vector<std::vector<std::uint64_t>> per_t(max_t + 1);
#pragma omp parallel for schedule(dynamic)
  for (long t = 2; t <= count; ++t) {
    const auto& pt = pools[t];
    for (std::uint64_t s = 1; s < static_cast<std::uint64_t>(t); ++s) {
      const auto& ps = pools[s];
      const Path path = GreedyPath(scheme, Commit(scheme, t), Commit(scheme, s));
      const bool inside = std::all_of(
          path.vertices.begin(), path.vertices.end(), [&](const Vertex& v) {
            return std::binary_search(ps.begin(), ps.end(), v) ||
                   std::binary_search(pt.begin(), pt.end(), v);
          });
      if (!inside) per_t[t].push_back(s);
    }
  }
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  for (std::uint64_t t = 2; t <= max_t; ++t) {
    for (std::uint64_t s : per_t[t]) out.emplace_back(s, t);
  }
  return out;
}

SummarySizes ComputeSummarySizes(std::uint64_t n) {
  if (n == 0) throw Error(ErrorCode::kDomain, "summary sizes need n >= 1");
  SummarySizes s;
  s.linear = n;
  const std::uint64_t floor2 = FloorLog(2, n);
  s.simple_antimonotone = 5 * floor2 >= 3 ? 5 * floor2 - 3 : 0;
  const std::uint64_t floor3 = FloorLog(3, 2 * n);
  s.optimal_antimonotone = 7 * floor3 >= 4 ? 7 * floor3 - 4 : 0;
  const std::uint64_t binary = 2 * std::uint64_t{CeilLog(2, n)};
  s.threaded = binary;
  s.hypercore = binary;
  s.transparency_log = binary;
  s.slls2 = binary;
  s.slls3 = 3 * std::uint64_t{CeilLog(3, n)};
  return s;
}

RatioReport ComputeRatioReport(const std::vector<std::uint64_t>& positions) {
  RatioReport report;
  report.asymptotic = std::log(8.0) / std::log(9.0);
  for (std::uint64_t n : positions) {
    if (n < 2) throw Error(ErrorCode::kDomain, "ratios need n >= 2");
    const SummarySizes s = ComputeSummarySizes(n);
    report.ratios.emplace_back(
        n, static_cast<double>(s.slls3) / static_cast<double>(s.slls2));
  }
  return report;
}

namespace serial {

std::vector<SizeTableRow> SizeTable(std::uint64_t max_position) {
  const std::vector<std::uint64_t> bounds = TableBoundaries(max_position);
  std::vector<SizeTableRow> rows;
  std::uint64_t prev = 0;
  for (std::uint64_t u : bounds) {
    rows.push_back(ComputeRow(prev, u));
    prev = u;
  }
  return rows;
}

SchemeStats ComputeSchemeStats(const Scheme& scheme, std::uint64_t n) {
  RequireStatsBound(n);
  SchemeStats total;
  for (std::uint64_t m = 1; m <= n; ++m) {
    const SchemeStats s = PositionStats(scheme, m);
    total.vertex_count += s.vertex_count;
    total.edge_count += s.edge_count;
    total.max_out_degree = std::max(total.max_out_degree, s.max_out_degree);
  }
  return total;
}

std::vector<std::uint64_t> SizeLawViolations(
    const Scheme& scheme, std::uint64_t lo, std::uint64_t hi,
    const std::function<std::size_t(std::uint64_t)>& expected) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = lo; n <= hi; ++n) {
    if (PositionalVertices(scheme, n).size() != expected(n)) out.push_back(n);
  }
  return out;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> GreedyBfsMismatches(
    const Scheme& scheme, std::uint64_t max_t) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  for (std::uint64_t t = 2; t <= max_t; ++t) {
    for (std::uint64_t s : MismatchesFor(scheme, t)) out.emplace_back(s, t);
  }
  return out;
}

}  // namespace serial

}  // namespace slls::analysis
