#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "bench.hpp"
#include "polytangent/generator.hpp"
#include "polytangent/io.hpp"
#include "polytangent/oracle.hpp"
#include "polytangent/tangents.hpp"
#include "polytangent/validate.hpp"
#include "svg.hpp"

namespace polytangent::cli {

namespace {

using Json = nlohmann::ordered_json;

// Cubic general-position screening is skipped above this many corners.
constexpr std::int64_t kGeneralPositionCliLimit = 512;

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Variant { kSeparating, kSecondSeparating, kOuter, kSecondOuter };

constexpr Variant kAllVariants[] = {Variant::kSeparating, Variant::kSecondSeparating,
                                    Variant::kOuter, Variant::kSecondOuter};

std::string_view variant_name(Variant v) {
  switch (v) {
    case Variant::kSeparating:
      return "separating";
    case Variant::kSecondSeparating:
      return "second-separating";
    case Variant::kOuter:
      return "outer";
    case Variant::kSecondOuter:
      return "second-outer";
  }
  return "?";
}

bool is_separating(Variant v) {
  return v == Variant::kSeparating || v == Variant::kSecondSeparating;
}

// The two file polygons, plus copies in the orientations the algorithms
// expect. Reversal keeps corner 0 in place, so an index i of a reversed copy
// is corner (n - i) mod n of the file polygon.
struct OrientedPair {
  Polygon file0, file1;
  Polygon ccw0, ccw1, cw1;

  std::int64_t to_file0(std::int64_t i) const {
    return file0.orientation() == Orientation::kCounterClockwise ? i : wrap_index(-i, file0.size());
  }
  std::int64_t to_file1(std::int64_t i, bool from_cw) const {
    const Orientation used = from_cw ? Orientation::kClockwise : Orientation::kCounterClockwise;
    return file1.orientation() == used ? i : wrap_index(-i, file1.size());
  }
};

Polygon oriented(const Polygon& p, Orientation want) {
  return p.orientation() == want ? p : p.reversed_copy();
}

OrientedPair orient_pair(Polygon p0, Polygon p1) {
  Polygon ccw0 = oriented(p0, Orientation::kCounterClockwise);
  Polygon ccw1 = oriented(p1, Orientation::kCounterClockwise);
  Polygon cw1 = oriented(p1, Orientation::kClockwise);
  return {std::move(p0), std::move(p1), std::move(ccw0), std::move(ccw1), std::move(cw1)};
}

struct VariantRun {
  Variant variant;
  TangentResult result;
  std::optional<CornerLine> line;  // file indexing
};

// Runs one variant; `on_line` receives the temporary line (file indexing)
// after every update.
template <class OnLine>
VariantRun run_variant(const OrientedPair& o, Variant v, OnLine&& on_line) {
  const bool outer = !is_separating(v);
  const auto sink = [&](const TraceEvent& e) {
    if (e.updated) on_line(CornerLine{o.to_file0(e.corner0), o.to_file1(e.corner1, outer)});
  };
  TangentResult r;
  switch (v) {
    case Variant::kSeparating:
      r = separating_common_tangent(o.ccw0.view(), o.ccw1.view(), sink);
      break;
    case Variant::kSecondSeparating:
      r = second_separating_tangent(o.ccw0.view(), o.ccw1.view(), sink);
      break;
    case Variant::kOuter:
      r = outer_common_tangent(o.ccw0.view(), o.cw1.view(), sink);
      break;
    case Variant::kSecondOuter:
      r = second_outer_tangent(o.ccw0.view(), o.cw1.view(), sink);
      break;
  }
  VariantRun run{v, r, std::nullopt};
  if (r.found()) run.line = CornerLine{o.to_file0(r.s0), o.to_file1(r.s1, outer)};
  return run;
}

VariantRun run_variant(const OrientedPair& o, Variant v) {
  return run_variant(o, v, [](const CornerLine&) {});
}

std::vector<Polygon> load(const std::string& path) { return io::read_file(path); }

OrientedPair load_pair(const std::string& path) {
  std::vector<Polygon> polys = load(path);
  if (polys.size() != 2) {
    throw InputError("expected exactly two polygons in '" + path + "', found " +
                     std::to_string(polys.size()));
  }
  return orient_pair(std::move(polys[0]), std::move(polys[1]));
}

struct Screening {
  bool simplicity_checked = false;
  bool general_position_checked = false;
  bool general_position = true;
};

// Simplicity failures are input errors. General-position violations only
// warn: the algorithms still run, but their guarantee does not apply.
Screening screen(const OrientedPair& o, bool skip, std::ostream& err) {
  Screening s;
  if (skip) {
    err << "warning: input validation skipped; results are unverified\n";
    return s;
  }
  s.simplicity_checked = true;
  for (const Polygon* p : {&o.file0, &o.file1}) {
    const auto bad = simplicity_violations(p->view(), 4);
    if (!bad.empty()) {
      std::ostringstream os;
      os << "polygon '" << p->name() << "' is not simple: edges " << bad.front().first << " and "
         << bad.front().second << " intersect";
      throw InputError(os.str());
    }
  }
  if (o.file0.size() + o.file1.size() > kGeneralPositionCliLimit) {
    err << "warning: general-position check skipped for " << o.file0.size() + o.file1.size()
        << " corners (limit " << kGeneralPositionCliLimit << ")\n";
    return s;
  }
  s.general_position_checked = true;
  const ValidationReport report = check_general_position(o.file0.view(), o.file1.view(), 5);
  s.general_position = report.ok();
  if (!s.general_position) {
    err << "warning: input is not in general position; results are unverified\n";
    for (const Violation& v : report.violations) err << "  " << v.message << '\n';
    if (report.truncated) err << "  ...\n";
  }
  return s;
}

// Agreement with the brute-force oracle, comparing lines rather than index
// pairs so collinear duplicates compare equal.
bool verify_against_oracle(const OrientedPair& o, const std::vector<VariantRun>& runs,
                           bool general_position, std::ostream& err) {
  const PolygonView v0 = o.file0.view();
  const PolygonView v1 = o.file1.view();
  const oracle::OracleReport report =
      oracle::classify_all_corner_pairs(v0, v1, {.allow_degenerate = !general_position});
  bool ok = true;
  const auto fail = [&](const std::string& why) {
    err << "verify: " << why << '\n';
    ok = false;
  };
  for (const bool separating : {true, false}) {
    const auto& truth = separating ? report.separating_pairs : report.outer_pairs;
    std::vector<oracle::CornerPair> found;
    bool any_run = false;
    for (const VariantRun& r : runs) {
      if (is_separating(r.variant) != separating) continue;
      any_run = true;
      const std::string name(variant_name(r.variant));
      if (r.result.status == TangentStatus::kNotSeparable && report.hulls_disjoint) {
        fail(name + " reported hulls not disjoint, oracle disagrees");
      }
      if (r.result.status == TangentStatus::kPreconditionUncertain && report.hulls_disjoint) {
        fail(name + " failed its certificate on disjoint hulls");
      }
      if (!r.line) continue;
      const oracle::CornerPair pair{r.line->first, r.line->second};
      const bool known = std::any_of(truth.begin(), truth.end(), [&](const oracle::CornerPair& t) {
        return oracle::same_line(v0, v1, t, pair);
      });
      if (!known) fail(name + " line is not a " + (separating ? "separating" : "outer") +
                       " common tangent");
      const bool repeated = std::any_of(found.begin(), found.end(), [&](const oracle::CornerPair& f) {
        return oracle::same_line(v0, v1, f, pair);
      });
      if (repeated) fail(name + " repeats a line already reported");
      found.push_back(pair);
    }
    if (any_run && report.hulls_disjoint && found.size() != truth.size()) {
      fail(std::string(separating ? "separating" : "outer") + ": found " +
           std::to_string(found.size()) + " lines, oracle has " + std::to_string(truth.size()));
    }
  }
  return ok;
}

Json corner_json(const Polygon& p, std::int64_t i) {
  const Point c = p.corners()[static_cast<std::size_t>(i)];
  return Json{{"index", i}, {"x", c.x()}, {"y", c.y()}};
}

Json run_json(const OrientedPair& o, const VariantRun& r) {
  Json j;
  j["kind"] = std::string(to_string(r.result.kind));
  j["variant"] = std::string(variant_name(r.variant));
  j["status"] = std::string(to_string(r.result.status));
  if (r.line) {
    j["p0"] = corner_json(o.file0, r.line->first);
    j["p1"] = corner_json(o.file1, r.line->second);
  } else {
    j["p0"] = nullptr;
    j["p1"] = nullptr;
  }
  j["stats"] = Json{{"iterations", r.result.stats.iterations},
                    {"corner_reads", r.result.stats.corner_reads},
                    {"updates", r.result.stats.updates},
                    {"general_position_violated", r.result.stats.general_position_violated}};
  return j;
}

void print_run(std::ostream& out, const OrientedPair& o, const VariantRun& r) {
  out << variant_name(r.variant) << ": ";
  if (r.line) {
    out << "P0[" << r.line->first << "] " << o.file0.corners()[static_cast<std::size_t>(r.line->first)]
        << " -- P1[" << r.line->second << "] "
        << o.file1.corners()[static_cast<std::size_t>(r.line->second)];
  } else if (r.result.status == TangentStatus::kNotSeparable) {
    out << "none (hulls not disjoint)";
  } else {
    out << "none (precondition uncertain: hulls not disjoint, result unreliable)";
  }
  out << "  iterations=" << r.result.stats.iterations
      << " corner_reads=" << r.result.stats.corner_reads << " updates=" << r.result.stats.updates
      << '\n';
}

struct TangentsOptions {
  std::string file;
  std::string kind = "all";
  bool verify = false;
  bool json = false;
  bool skip_validation = false;
};

int cmd_tangents(const TangentsOptions& opt, std::ostream& out, std::ostream& err) {
  const OrientedPair o = load_pair(opt.file);
  const Screening screening = screen(o, opt.skip_validation, err);

  std::vector<VariantRun> runs;
  int code = kExitOk;
  bool outer_skipped = false;
  if (opt.kind == "separating" || opt.kind == "all") {
    runs.push_back(run_variant(o, Variant::kSeparating));
    runs.push_back(run_variant(o, Variant::kSecondSeparating));
    if (!runs.front().result.found()) code = kExitNotSeparable;
  }
  if (opt.kind == "outer" || opt.kind == "all") {
    if (code == kExitNotSeparable) {
      // The outer walk needs disjoint hulls; the separating run just refuted that.
      outer_skipped = true;
    } else {
      for (Variant v : {Variant::kOuter, Variant::kSecondOuter}) {
        runs.push_back(run_variant(o, v));
        if (!runs.back().result.found()) code = kExitPreconditionUncertain;
      }
    }
  }

  std::optional<bool> verified;
  if (opt.verify) {
    verified = verify_against_oracle(o, runs, screening.general_position, err);
    if (!*verified) code = kExitBoundViolation;
  }
  for (const VariantRun& r : runs) {
    const std::int64_t n0 = o.file0.size(), n1 = o.file1.size();
    const bool sep = is_separating(r.variant);
    const std::int64_t it_bound = sep ? separating_iteration_bound(n0, n1) : outer_iteration_bound(n0, n1);
    const std::int64_t rd_bound = sep ? separating_read_bound(n0, n1) : outer_read_bound(n0, n1);
    if (r.result.stats.iterations > it_bound || r.result.stats.corner_reads > rd_bound) {
      err << "error: " << variant_name(r.variant) << " exceeded its iteration/read bound\n";
      code = kExitBoundViolation;
    }
  }

  if (opt.json) {
    Json j;
    j["schema"] = kJsonSchema;
    j["polygons"] = Json::array();
    for (const Polygon* p : {&o.file0, &o.file1}) {
      j["polygons"].push_back(Json{{"name", p->name()},
                                   {"n", p->size()},
                                   {"orientation", std::string(to_string(p->orientation()))}});
    }
    j["validation"] = Json{{"simplicity_checked", screening.simplicity_checked},
                           {"general_position_checked", screening.general_position_checked},
                           {"general_position", screening.general_position}};
    j["results"] = Json::array();
    for (const VariantRun& r : runs) j["results"].push_back(run_json(o, r));
    j["outer_skipped"] = outer_skipped;
    j["verified"] = verified ? Json(*verified) : Json(nullptr);
    j["exit_code"] = code;
    out << j.dump(2) << '\n';
  } else {
    for (const VariantRun& r : runs) print_run(out, o, r);
    if (outer_skipped) out << "outer: skipped (hulls not disjoint)\n";
    if (code == kExitNotSeparable) out << "hulls not disjoint\n";
    if (verified) out << "oracle: " << (*verified ? "agrees" : "DISAGREES") << '\n';
  }
  return code;
}

int cmd_check_disjoint(const std::string& file, std::ostream& out) {
  const std::vector<Polygon> polys = load(file);
  if (polys.size() != 2) throw InputError("expected exactly two polygons");
  const bool disjoint = hulls_disjoint(polys[0].view(), polys[1].view());
  out << (disjoint ? "true" : "false") << '\n';
  return disjoint ? kExitOk : kExitNotSeparable;
}

int cmd_validate(const std::string& file, std::ostream& out) {
  const std::vector<Polygon> polys = load(file);
  bool ok = true;
  for (const Polygon& p : polys) {
    const auto bad = simplicity_violations(p.view(), 8);
    out << "polygon " << p.name() << ": n=" << p.size() << ' ' << to_string(p.orientation())
        << (bad.empty() ? " simple" : " NOT simple") << '\n';
    for (const EdgePair& e : bad) {
      out << "  edges " << e.first << " and " << e.second << " intersect\n";
    }
    ok = ok && bad.empty();
  }
  if (polys.size() == 2) {
    const ValidationReport gp = check_general_position(polys[0].view(), polys[1].view(), 100);
    out << "general position: " << (gp.ok() ? "yes" : "no") << '\n';
    for (const Violation& v : gp.violations) out << "  " << v.message << '\n';
    if (gp.truncated) out << "  ... (truncated)\n";
    ok = ok && gp.ok();
  }
  out << (ok ? "valid" : "invalid") << '\n';
  return ok ? kExitOk : kExitInputError;
}

struct GenOptions {
  std::uint64_t seed = 1;
  std::int64_t n0 = 16;
  std::int64_t n1 = 16;
  std::string regime = "disjoint";
  std::int64_t scale = std::int64_t{1} << 20;
  std::string out;
};

gen::Regime regime_or_throw(const std::string& name) {
  const auto r = gen::parse_regime(name);
  if (!r) {
    throw InputError("unknown regime '" + name +
                     "' (expected disjoint, intersecting, nested or overlapping-hulls)");
  }
  return *r;
}

int cmd_gen(const GenOptions& opt, std::ostream& out) {
  gen::GenSpec spec;
  spec.seed = opt.seed;
  spec.n0 = opt.n0;
  spec.n1 = opt.n1;
  spec.regime = regime_or_throw(opt.regime);
  spec.coordinate_scale = opt.scale;
  const auto [p0, p1] = gen::generate_pair(spec);
  const std::vector<Polygon> polys{p0, p1};
  if (opt.out.empty()) {
    out << io::serialize(polys);
  } else {
    io::write_file(opt.out, polys);
  }
  return kExitOk;
}

struct TraceOptions {
  std::string file;
  std::string kind = "separating";
  std::string out;
};

int cmd_trace_svg(const TraceOptions& opt, std::ostream& out) {
  const OrientedPair o = load_pair(opt.file);
  std::optional<Variant> variant;
  for (Variant v : kAllVariants) {
    if (variant_name(v) == opt.kind) variant = v;
  }
  if (!variant) throw InputError("unknown trace kind '" + opt.kind + "'");

  TraceFigure figure;
  figure.title = std::string(variant_name(*variant)) + " common tangent of " + o.file0.name() +
                 " and " + o.file1.name();
  // Every run starts on the line through corner 0 of each polygon.
  figure.temporary_lines.emplace_back(0, 0);
  const VariantRun run =
      run_variant(o, *variant, [&](const CornerLine& l) { figure.temporary_lines.push_back(l); });
  figure.tangent = run.line;
  int code = kExitOk;
  if (run.result.status == TangentStatus::kNotSeparable) {
    figure.outcome = "NULL: hulls not disjoint";
    code = kExitNotSeparable;
  } else if (run.result.status == TangentStatus::kPreconditionUncertain) {
    figure.outcome = "precondition uncertain: hulls not disjoint";
    code = kExitPreconditionUncertain;
  } else {
    figure.outcome = "tangent P0[" + std::to_string(run.line->first) + "] P1[" +
                     std::to_string(run.line->second) + "], " +
                     std::to_string(run.result.stats.iterations) + " iterations, " +
                     std::to_string(run.result.stats.updates) + " updates";
  }
  const std::string svg = render_trace_svg(o.file0, o.file1, figure);
  if (opt.out.empty()) {
    out << svg;
  } else {
    std::ofstream f(opt.out, std::ios::binary);
    if (!f) throw InputError("cannot write '" + opt.out + "'");
    f << svg;
  }
  return code;
}

struct BenchCliOptions {
  std::vector<std::int64_t> sizes;
  std::string regime = "disjoint";
  int reps = 1;
  std::uint64_t seed = 1;
  std::string algorithm = "both";
  std::int64_t scale = std::int64_t{1} << 20;
  std::string csv;
};

int cmd_bench(const BenchCliOptions& opt, std::ostream& out, std::ostream& err) {
  BenchOptions b;
  b.sizes = opt.sizes.empty() ? default_bench_sizes() : opt.sizes;
  b.regime = regime_or_throw(opt.regime);
  b.reps = opt.reps;
  b.seed = opt.seed;
  b.separating = opt.algorithm != "outer";
  b.outer = opt.algorithm != "separating";
  b.coordinate_scale = opt.scale;
  const std::vector<BenchRow> rows = run_bench(b);
  const std::string csv = bench_csv(rows);
  if (opt.csv.empty()) {
    out << csv;
  } else {
    std::ofstream f(opt.csv, std::ios::binary);
    if (!f) throw InputError("cannot write '" + opt.csv + "'");
    f << csv;
  }
  int code = kExitOk;
  for (const BenchRow& r : rows) {
    if (!r.within_bounds()) {
      err << "BOUND VIOLATION: " << r.algorithm << " n0=" << r.n0 << " n1=" << r.n1
          << " iterations=" << r.iterations << " (bound " << r.iteration_bound
          << ") corner_reads=" << r.corner_reads << " (bound " << r.read_bound << ")\n";
      code = kExitBoundViolation;
    }
  }
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Common tangents of simple polygons in linear time and constant workspace",
               "polytangent"};
  app.require_subcommand(1);

  TangentsOptions tangents;
  auto* tangents_cmd = app.add_subcommand("tangents", "Compute common tangents of two polygons");
  tangents_cmd->add_option("file", tangents.file, "polytangent v1 file with two polygons")
      ->required();
  tangents_cmd->add_option("--kind", tangents.kind, "separating, outer or all")
      ->check(CLI::IsMember({"separating", "outer", "all"}));
  tangents_cmd->add_flag("--verify", tangents.verify, "Cross-check against the brute-force oracle");
  tangents_cmd->add_flag("--json", tangents.json, "Machine-readable output");
  tangents_cmd->add_flag("--skip-validation", tangents.skip_validation,
                         "Do not check simplicity and general position");

  std::string disjoint_file;
  auto* disjoint_cmd =
      app.add_subcommand("check-disjoint", "Decide whether the convex hulls are disjoint");
  disjoint_cmd->add_option("file", disjoint_file)->required();

  std::string validate_file;
  auto* validate_cmd =
      app.add_subcommand("validate", "Check simplicity, orientation and general position");
  validate_cmd->add_option("file", validate_file)->required();

  GenOptions gen_opt;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a seeded polygon pair");
  gen_cmd->add_option("--seed", gen_opt.seed);
  gen_cmd->add_option("--n0", gen_opt.n0);
  gen_cmd->add_option("--n1", gen_opt.n1);
  gen_cmd->add_option("--regime", gen_opt.regime,
                      "disjoint, intersecting, nested or overlapping-hulls");
  gen_cmd->add_option("--scale", gen_opt.scale, "Outer radius of P0 in grid units");
  gen_cmd->add_option("--out", gen_opt.out, "Output file (default: stdout)");

  TraceOptions trace;
  auto* trace_cmd = app.add_subcommand("trace-svg", "Render an algorithm run as SVG");
  trace_cmd->add_option("file", trace.file)->required();
  trace_cmd->add_option("--kind", trace.kind,
                        "separating, second-separating, outer or second-outer");
  trace_cmd->add_option("--out", trace.out, "Output file (default: stdout)");

  BenchCliOptions bench;
  auto* bench_cmd = app.add_subcommand("bench", "Sweep sizes and chart iteration counts");
  bench_cmd->add_option("--sizes", bench.sizes, "Comma-separated corner counts (n0 = n1)")
      ->delimiter(',');
  bench_cmd->add_option("--regime", bench.regime);
  bench_cmd->add_option("--reps", bench.reps)->check(CLI::PositiveNumber);
  bench_cmd->add_option("--seed", bench.seed);
  bench_cmd->add_option("--algorithm", bench.algorithm)
      ->check(CLI::IsMember({"separating", "outer", "both"}));
  bench_cmd->add_option("--scale", bench.scale);
  bench_cmd->add_option("--csv", bench.csv, "Output file (default: stdout)");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (tangents_cmd->parsed()) return cmd_tangents(tangents, out, err);
    if (disjoint_cmd->parsed()) return cmd_check_disjoint(disjoint_file, out);
    if (validate_cmd->parsed()) return cmd_validate(validate_file, out);
    if (gen_cmd->parsed()) return cmd_gen(gen_opt, out);
    if (trace_cmd->parsed()) return cmd_trace_svg(trace, out);
    if (bench_cmd->parsed()) return cmd_bench(bench, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace polytangent::cli
