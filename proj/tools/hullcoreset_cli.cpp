#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hullcoreset/convex_mineps.hpp"
#include "hullcoreset/convex_mink.hpp"
#include "hullcoreset/general_solver.hpp"
#include "hullcoreset/instance_io.hpp"

namespace {

using namespace hullcoreset;

constexpr int kUsageError = 2;
constexpr int kInputError = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string problem;
  std::string method;
  std::string input;
  std::string gen;
  std::string format;
  std::optional<double> eps;
  std::optional<std::size_t> k;
  std::string backend = "canonical";
  std::uint64_t seed = 1;
  std::string apsp = "bfs";
  std::string out;
  std::string sizes = "1k,4k,16k,64k";
  std::string kind = "convex-circle";
  std::string table = "points";
};

bool wants_eps(const std::string& problem) {
  return problem.size() >= 4 && problem.compare(problem.size() - 4, 4, "mink") == 0;
}

void validate_problem(const Options& o) {
  static const std::vector<std::string> known = {
      "mink",         "mineps",         "cx-mink",    "cx-mineps",
      "approx2-mink", "approx2-mineps", "plus1-mink", "plus1-mineps"};
  if (std::find(known.begin(), known.end(), o.problem) == known.end()) {
    throw UsageError("unknown problem '" + o.problem + "'");
  }
  if (o.apsp != "bfs") throw UsageError("unsupported --apsp '" + o.apsp + "' (only bfs)");
  try {
    backend_from_string(o.backend);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (wants_eps(o.problem)) {
    if (o.k) throw UsageError("--k is not accepted by " + o.problem);
    if (!o.eps) throw UsageError(o.problem + " requires --eps");
    if (!(*o.eps >= 0.0)) throw UsageError("--eps must be >= 0");
  } else {
    if (o.eps) throw UsageError("--eps is not accepted by " + o.problem);
    if (!o.k) throw UsageError(o.problem + " requires --k");
    if (*o.k == 0) throw UsageError("--k must be >= 1");
  }
}

io::PointSet load_points(const Options& o) {
  if (o.input.empty() == o.gen.empty()) throw UsageError("give exactly one of --input or --gen");
  if (!o.gen.empty()) {
    io::GenSpec spec{};
    try {
      spec = io::parse_gen_spec(o.gen);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    const auto pts = io::gen_instance(spec.kind, spec.n, spec.seed);
    return io::parse_points(io::emit_points(pts, io::PointFormat::csv), io::PointFormat::csv);
  }
  io::PointFormat fmt{};
  try {
    fmt = o.format.empty() ? io::format_from_path(o.input) : io::format_from_string(o.format);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  try {
    return io::read_points(o.input, fmt);
  } catch (const std::exception& e) {
    throw InputError(e.what());
  }
}

Solution dispatch(const Options& o, const std::vector<Point2>& pts) {
  const Backend backend = backend_from_string(o.backend);
  const std::string& p = o.problem;
  if (p == "cx-mink" || p == "cx-mineps") {
    const ConvexChain chain = convex_hull(pts);
    if (chain.size() != pts.size()) throw InputError("input is not in strictly convex position");
    if (p == "cx-mink") return solve_cx_mink(chain, *o.eps, backend);
    return solve_cx_mineps(chain, std::min(*o.k, chain.size()), o.seed, backend);
  }
  if (p == "mink") return solve_mink(pts, *o.eps);
  if (p == "mineps") return solve_mineps(pts, *o.k);
  if (p == "approx2-mink") return approx2_mink(pts, *o.eps);
  if (p == "approx2-mineps") return approx2_mineps(pts, *o.k, o.seed);
  if (p == "plus1-mink") return plus_one_mink(pts, *o.eps);
  return plus_one_mineps(pts, *o.k);
}

io::RunRecord run_solve(const Options& o, const io::PointSet& input) {
  validate_problem(o);
  io::RunRecord rec;
  rec.problem = o.problem;
  rec.n = input.points.size();
  rec.input_digest = io::input_digest(input.points);
  rec.eps = o.eps;
  rec.k = o.k;
  rec.apsp = o.apsp;

  const auto start = std::chrono::steady_clock::now();
  rec.solution = dispatch(o, input.points);
  const auto stop = std::chrono::steady_clock::now();
  rec.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();

  for (std::size_t& i : rec.solution.indices) i = input.source[i];
  rec.backend = rec.solution.meta.backend;
  rec.seed = rec.solution.meta.seed;
  rec.cost0_queries = rec.solution.meta.cost0_queries;
  return rec;
}

void write_output(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw InputError("cannot write '" + o.out + "'");
  f << text;
}

std::string series_csv(const Options& o) {
  std::vector<std::size_t> sizes;
  std::stringstream list(o.sizes);
  for (std::string item; std::getline(list, item, ',');) {
    try {
      sizes.push_back(io::parse_count(item));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  io::GenKind kind{};
  try {
    kind = io::gen_kind_from_string(o.kind);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  Options run = o;
  if (wants_eps(o.problem)) {
    if (!run.eps && !run.k) run.eps = 1e-3;
  } else if (!run.k && !run.eps) {
    run.k = 16;
  }
  std::ostringstream csv;
  csv << "n,elapsed_ms,query_count,k\n";
  for (std::size_t n : sizes) {
    const auto pts = io::gen_instance(kind, n, o.seed);
    const io::PointSet input =
        io::parse_points(io::emit_points(pts, io::PointFormat::csv), io::PointFormat::csv);
    const io::RunRecord rec = run_solve(run, input);
    csv << rec.n << "," << rec.elapsed_ms << "," << rec.cost0_queries << "," << rec.solution.k
        << "\n";
  }
  return csv.str();
}

std::string points_csv(const Options& o) {
  const io::PointSet input = load_points(o);
  const io::RunRecord rec = run_solve(o, input);
  std::vector<bool> chosen(input.source.empty() ? 0 : input.source.back() + 1, false);
  for (std::size_t i : rec.solution.indices) chosen[i] = true;
  std::ostringstream csv;
  csv.precision(17);
  csv << "index,x,y,chosen\n";
  for (std::size_t t = 0; t < input.points.size(); ++t) {
    csv << input.source[t] << "," << input.points[t].x << "," << input.points[t].y << ","
        << (chosen[input.source[t]] ? 1 : 0) << "\n";
  }
  return csv.str();
}

void add_solve_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--input", o.input, "Point file (csv or json)");
  cmd->add_option("--gen", o.gen, "Generated instance kind:n:seed");
  cmd->add_option("--format", o.format, "Input format: csv or json");
  cmd->add_option("--eps", o.eps, "Distance threshold (min-k problems)");
  cmd->add_option("--k", o.k, "Subset size budget (min-eps problems)");
  cmd->add_option("--backend", o.backend, "Farthest-query backend: naive or canonical");
  cmd->add_option("--seed", o.seed, "Random seed");
  cmd->add_option("--apsp", o.apsp, "Shortest-path backend (bfs)");
  cmd->add_option("--out", o.out, "Output path (default stdout)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hull-approximating subsets of planar point sets"};
  app.require_subcommand(1);
  Options o;

  auto* solve = app.add_subcommand("solve", "Solve one instance and print a JSON run record");
  solve->add_option("--problem", o.problem,
                    "mink, mineps, cx-mink, cx-mineps, approx2-*, plus1-*")
      ->required();
  add_solve_flags(solve, o);

  auto* approx = app.add_subcommand("approx", "Run an approximation scheme");
  approx->add_option("--method", o.method, "approx2 or plus1")->required();
  approx->add_option("--problem", o.problem, "mink or mineps")->required();
  add_solve_flags(approx, o);

  auto* gen = app.add_subcommand("gen", "Write a generated instance");
  gen->add_option("--gen", o.gen, "kind:n:seed")->required();
  gen->add_option("--format", o.format, "csv or json");
  gen->add_option("--out", o.out, "Output path (default stdout)");

  auto* bench = app.add_subcommand("bench", "Time a solver over generated sizes (CSV)");
  bench->add_option("--problem", o.problem, "Problem tag")->required();
  bench->add_option("--sizes", o.sizes, "Comma-separated sizes, k/m suffixes allowed");
  bench->add_option("--kind", o.kind, "Generator kind");
  bench->add_option("--eps", o.eps, "Distance threshold");
  bench->add_option("--k", o.k, "Subset size budget");
  bench->add_option("--backend", o.backend, "naive or canonical");
  bench->add_option("--seed", o.seed, "Random seed");
  bench->add_option("--apsp", o.apsp, "bfs");
  bench->add_option("--out", o.out, "Output path (default stdout)");

  auto* plot = app.add_subcommand("export-plot", "CSV tables for external plotting");
  plot->add_option("--table", o.table, "points (chosen flags) or series (timings)");
  plot->add_option("--problem", o.problem, "Problem tag")->required();
  plot->add_option("--sizes", o.sizes, "Sizes for the series table");
  plot->add_option("--kind", o.kind, "Generator kind for the series table");
  add_solve_flags(plot, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    if (*solve || *approx) {
      if (*approx) {
        if (o.method != "approx2" && o.method != "plus1") {
          throw UsageError("unknown method '" + o.method + "'");
        }
        if (o.problem != "mink" && o.problem != "mineps") {
          throw UsageError("approx expects --problem mink or mineps");
        }
        o.problem = o.method + "-" + o.problem;
      }
      validate_problem(o);
      const io::PointSet input = load_points(o);
      for (const auto& w : input.warnings) std::cerr << "warning: " << w << "\n";
      write_output(o, io::to_json(run_solve(o, input)).dump(2) + "\n");
    } else if (*gen) {
      io::GenSpec spec{};
      io::PointFormat fmt = io::PointFormat::csv;
      try {
        spec = io::parse_gen_spec(o.gen);
        if (!o.format.empty()) fmt = io::format_from_string(o.format);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      write_output(o, io::emit_points(io::gen_instance(spec.kind, spec.n, spec.seed), fmt));
    } else if (*bench) {
      validate_problem([&] {
        Options probe = o;
        if (!probe.eps && !probe.k) {
          if (wants_eps(probe.problem)) probe.eps = 1e-3; else probe.k = 16;
        }
        return probe;
      }());
      write_output(o, series_csv(o));
    } else if (*plot) {
      if (o.table == "series") {
        write_output(o, series_csv(o));
      } else if (o.table == "points") {
        validate_problem(o);
        write_output(o, points_csv(o));
      } else {
        throw UsageError("unknown table '" + o.table + "'");
      }
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsageError;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const io::ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  }
  return 0;
}
