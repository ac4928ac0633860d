#include "bench.hpp"

#include <chrono>
#include <sstream>

#include "polytangent/tangents.hpp"

namespace polytangent::cli {

namespace {

template <class Run>
BenchRow timed(const char* algorithm, std::int64_t n0, std::int64_t n1, int rep, Run&& run) {
  const auto start = std::chrono::steady_clock::now();
  const TangentResult r = run();
  const auto stop = std::chrono::steady_clock::now();
  BenchRow row;
  row.algorithm = algorithm;
  row.n0 = n0;
  row.n1 = n1;
  row.rep = rep;
  row.status = std::string(to_string(r.status));
  row.iterations = r.stats.iterations;
  row.corner_reads = r.stats.corner_reads;
  row.wall_time_ns =
      std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count();
  return row;
}

}  // namespace

std::vector<std::int64_t> default_bench_sizes() {
  std::vector<std::int64_t> out;
  for (int e = 4; e <= 14; ++e) out.push_back(std::int64_t{1} << e);
  return out;
}

std::vector<BenchRow> run_bench(const BenchOptions& options) {
  std::vector<BenchRow> rows;
  for (std::int64_t n : options.sizes) {
    gen::GenSpec spec;
    spec.seed = options.seed;
    spec.n0 = n;
    spec.n1 = n;
    spec.regime = options.regime;
    spec.coordinate_scale = options.coordinate_scale;
    const auto [p0, p1] = gen::generate_pair(spec);
    const Polygon p1_cw = p1.reversed_copy();
    for (int rep = 0; rep < options.reps; ++rep) {
      if (options.separating) {
        BenchRow row = timed("separating", n, n, rep,
                             [&] { return separating_common_tangent(p0.view(), p1.view()); });
        row.iteration_bound = separating_iteration_bound(n, n);
        row.read_bound = separating_read_bound(n, n);
        rows.push_back(std::move(row));
      }
      if (options.outer) {
        BenchRow row = timed("outer", n, n, rep,
                             [&] { return outer_common_tangent(p0.view(), p1_cw.view()); });
        row.iteration_bound = outer_iteration_bound(n, n);
        row.read_bound = outer_read_bound(n, n);
        rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream os;
  os << "algorithm,n0,n1,rep,status,iterations,corner_reads,wall_time_ns,iteration_bound,"
        "read_bound\n";
  for (const BenchRow& r : rows) {
    os << r.algorithm << ',' << r.n0 << ',' << r.n1 << ',' << r.rep << ',' << r.status << ','
       << r.iterations << ',' << r.corner_reads << ',' << r.wall_time_ns << ','
       << r.iteration_bound << ',' << r.read_bound << '\n';
  }
  return os.str();
}

}  // namespace polytangent::cli
