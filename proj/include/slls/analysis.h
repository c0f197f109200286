// Size tables, structural counts and sweeps over the skip list schemes.
//
// The sweep kernels run with OpenMP. Each has a plain loop counterpart in
// namespace serial that tests and benchmarks compare against; results are
// identical and order-deterministic in both.

#ifndef SLLS_ANALYSIS_H_
#define SLLS_ANALYSIS_H_

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "slls/skipgraph.h"

namespace slls::analysis {

// Smallest t with base^t >= n (n >= 1).
std::uint32_t CeilLog(std::uint64_t base, std::uint64_t n);
// Largest t with base^t <= n (n >= 1).
std::uint32_t FloorLog(std::uint64_t base, std::uint64_t n);

inline constexpr std::uint64_t kMaxTablePosition = std::uint64_t{1} << 33;
inline constexpr std::uint64_t kMaxStatsPosition = std::uint64_t{1} << 20;

struct SizeTableRow {
  std::uint64_t upper_n = 0;  // inclusive end of the range (prev, upper_n]
  std::size_t size_base2 = 0;
  std::size_t size_base3 = 0;
  // Both sizes agree at prev + 1 and at upper_n.
  bool constant_on_range = true;

  friend bool operator==(const SizeTableRow&, const SizeTableRow&) = default;
};

// 1 and every power of 2 or 3 up to max_position, ascending.
std::vector<std::uint64_t> TableBoundaries(std::uint64_t max_position);

// Positional certificate sizes at each boundary. Throws Error(kBoundExceeded)
// past 2^33.
std::vector<SizeTableRow> SizeTable(std::uint64_t max_position);

void WriteSizeTableCsv(std::ostream& out, const std::vector<SizeTableRow>& rows);
void WriteSizeTableText(std::ostream& out,
                        const std::vector<SizeTableRow>& rows);

struct SchemeStats {
  std::uint64_t vertex_count = 0;  // inner vertices and sinks
  std::uint64_t edge_count = 0;
  std::size_t max_out_degree = 0;

  friend bool operator==(const SchemeStats&, const SchemeStats&) = default;
};

// Exact counts over positions 1..n. Throws past 2^20.
SchemeStats ComputeSchemeStats(const Scheme& scheme, std::uint64_t n);

// Positions in [lo, hi] whose positional certificate size differs from
// expected(n).
std::vector<std::uint64_t> SizeLawViolations(
    const Scheme& scheme, std::uint64_t lo, std::uint64_t hi,
    const std::function<std::size_t(std::uint64_t)>& expected);

// Positions 2..N whose bounded positional certificate differs from
// ceil(log_b N) + 1 (+1 when chained).
std::vector<std::uint64_t> BoundedLawViolations(const Scheme& scheme,
                                                std::uint64_t round_length,
                                                bool chained);

// Pairs (s, t), 1 <= s < t <= max_t, where the greedy path is longer than
// the BFS shortest path.
std::vector<std::pair<std::uint64_t, std::uint64_t>> GreedyBfsMismatches(
    const Scheme& scheme, std::uint64_t max_t);

// Pairs (s, t), 1 <= s < t <= max_t, whose canonical path leaves
// pool(s) u pool(t).
std::vector<std::pair<std::uint64_t, std::uint64_t>> PoolUnionViolations(
    const Scheme& scheme, std::uint64_t max_t);

// Closed-form positional certificate sizes in labels (k = 1).
struct SummarySizes {
  std::uint64_t linear = 0;
  std::uint64_t simple_antimonotone = 0;
  std::uint64_t optimal_antimonotone = 0;
  std::uint64_t threaded = 0;
  std::uint64_t hypercore = 0;
  std::uint64_t transparency_log = 0;
  std::uint64_t slls2 = 0;
  std::uint64_t slls3 = 0;
};

SummarySizes ComputeSummarySizes(std::uint64_t n);

struct RatioReport {
  std::vector<std::pair<std::uint64_t, double>> ratios;  // base 3 / base 2
  double asymptotic = 0.0;                                // ln 8 / ln 9
};

RatioReport ComputeRatioReport(const std::vector<std::uint64_t>& positions);

namespace serial {

std::vector<SizeTableRow> SizeTable(std::uint64_t max_position);
SchemeStats ComputeSchemeStats(const Scheme& scheme, std::uint64_t n);
std::vector<std::uint64_t> SizeLawViolations(
    const Scheme& scheme, std::uint64_t lo, std::uint64_t hi,
    const std::function<std::size_t(std::uint64_t)>& expected);
std::vector<std::pair<std::uint64_t, std::uint64_t>> GreedyBfsMismatches(
    const Scheme& scheme, std::uint64_t max_t);

}  // namespace serial

}  // namespace slls::analysis

#endif  // SLLS_ANALYSIS_H_
