#ifndef POLYTANGENT_TOOLS_BENCH_HPP
#define POLYTANGENT_TOOLS_BENCH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "polytangent/generator.hpp"

namespace polytangent::cli {

struct BenchOptions {
  std::vector<std::int64_t> sizes;  // n0 = n1 = size
  gen::Regime regime = gen::Regime::kDisjointHulls;
  int reps = 1;
  std::uint64_t seed = 1;
  bool separating = true;
  bool outer = true;
  std::int64_t coordinate_scale = std::int64_t{1} << 20;
};

struct BenchRow {
  std::string algorithm;  // "separating" or "outer"
  std::int64_t n0 = 0;
  std::int64_t n1 = 0;
  int rep = 0;
  std::string status;
  std::int64_t iterations = 0;
  std::int64_t corner_reads = 0;
  std::int64_t wall_time_ns = 0;
  std::int64_t iteration_bound = 0;
  std::int64_t read_bound = 0;

  [[nodiscard]] bool within_bounds() const {
    return iterations <= iteration_bound && corner_reads <= read_bound;
  }
};

/// One generated instance per size (same seed for every size, so the layout
/// is shared and only the corner count changes); `reps` timed runs of each
/// algorithm on it.
[[nodiscard]] std::vector<BenchRow> run_bench(const BenchOptions& options);

[[nodiscard]] std::string bench_csv(const std::vector<BenchRow>& rows);

/// 16, 32, ..., 2^14.
[[nodiscard]] std::vector<std::int64_t> default_bench_sizes();

}  // namespace polytangent::cli

#endif  // POLYTANGENT_TOOLS_BENCH_HPP
