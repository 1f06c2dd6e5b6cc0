#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "bench_spec.hpp"
#include "cli.hpp"
#include "stc/bounds.hpp"
#include "stc/decomposer.hpp"
#include "stc/enumerate.hpp"
#include "stc/errors.hpp"
#include "stc/generators.hpp"
#include "stc/report.hpp"

namespace stc::cli {

using report::Json;
using Clock = std::chrono::steady_clock;

namespace {

double millis_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

Json header(const char* command) {
  return Json{{"schema_version", report::kSchemaVersion}, {"tool_version", report::kToolVersion}, {"command", command}};
}

Json instance_json(const Graph& g, const std::string& source) {
  return Json{{"source", source}, {"n", g.n()}, {"m", g.m()}, {"max_degree", max_degree(g)}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// Tree files hold one "u v" pair per line, as written by `solve --tree-out`.
SpanningTree load_tree(const std::string& path, const Graph& g) {
  std::istringstream in(read_file(path));
  std::vector<Edge> edges;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    long long u = -1, v = -1;
    std::string extra;
    if (!(fields >> u >> v) || (fields >> extra) || u < 0 || v < 0)
      throw Error(ErrorCode::MalformedLine, path + ":" + std::to_string(line_no) + ": expected 'u v'");
    if (static_cast<std::size_t>(u) >= g.n() || static_cast<std::size_t>(v) >= g.n())
      throw Error(ErrorCode::VertexOutOfRange, path + ":" + std::to_string(line_no));
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return SpanningTree(g.n(), std::move(edges));
}

// ---- invariant suite shared by `verify` ----

template <class F>
void check(const std::string& name, F&& body) {
  try {
    body();
  } catch (const InvariantViolation&) {
    throw;
  } catch (const Error& e) {
    switch (e.code()) {
      case ErrorCode::VerificationFailed:
      case ErrorCode::NotSpanningTree:
      case ErrorCode::TreeEdgeNotInGraph:
      case ErrorCode::InternalError:
      case ErrorCode::OracleFailure:
        throw InvariantViolation(name, e.what());
      default:
        throw;
    }
  }
}

void check_tree(const Graph& g, const SpanningTree& t, std::uint64_t budget) {
  CongestionReport fast;
  check("tree_in_graph", [&] { fast = tree_congestion(g, t); });
  check("dual_congestion", [&] {
    if (fast != tree_congestion_naive(g, t))
      throw InvariantViolation("dual_congestion", "path accumulation and naive split counts differ");
  });
  if (g.n() >= 2 && spanning_tree_count(g) <= budget) {
    const std::size_t stc = exact_stc(g, budget).value;
    check("congestion_at_least_stc", [&] {
      if (fast.max_congestion < stc)
        throw InvariantViolation("congestion_at_least_stc", std::to_string(fast.max_congestion) + " < STC " +
                                                                std::to_string(stc));
    });
    if (max_degree(g) >= 1) {
      BoundSearchOptions options;
      options.exhaustive_limit = 10;
      for (const auto& cert : all_certificates(g, options))
        check("certificate_soundness", [&] {
          const std::string kind(certificate_name(cert.kind));
          if (recompute_value(g, cert) != cert.value)
            throw InvariantViolation("certificate_soundness", kind + " does not reproduce from its witness");
          if (cert.value > Rational(static_cast<std::int64_t>(stc)))
            throw InvariantViolation("certificate_soundness",
                                     kind + " value " + to_string(cert.value) + " exceeds STC " + std::to_string(stc));
        });
    }
  }
}

void check_run(const Graph& g, const CutOracle& oracle, std::uint64_t budget) {
  const Decomposition run = cong_span_tree(g, oracle);
  check("decomposition_structure", [&] { verify_structure(run, g); });
  check("recurrence", [&] { verify_recurrence(run.trace, g); });
  if (oracle.kind == OracleKind::Exact && g.n() >= 2 && g.n() <= kDefaultHbLimit)
    check("global_bound", [&] { verify_global_bound(run.trace, g); });
  check_tree(g, run.tree, budget);
}

CutOracle make_oracle(const std::string& name, std::uint64_t seed) {
  return CutOracle{parse_oracle(name), exact_limit_from_env(), seed};
}

// ---- bench ----

struct BenchRow {
  std::size_t n = 0, m = 0, delta = 0;
  std::string oracle, congestion, stc_or_bound, bound_kind, ratio, height, millis;
};

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("cannot read " + path);
  return buf.str();
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << content;
  if (!out) throw IoError("cannot write " + path);
}

Graph load_graph(const std::string& path) { return parse_graph(read_file(path)); }

std::size_t exact_limit_from_env() {
  const char* raw = std::getenv("STC_EXACT_LIMIT");
  if (raw == nullptr || *raw == '\0') return kDefaultExactLimit;
  char* end = nullptr;
  const unsigned long long value = std::strtoull(raw, &end, 10);
  if (*end != '\0' || value < 2 || value > 62)
    throw Error(ErrorCode::InvalidParams, "STC_EXACT_LIMIT must be an integer in [2, 62]");
  return static_cast<std::size_t>(value);
}

OracleKind parse_oracle(const std::string& name) {
  if (name == "exact") return OracleKind::Exact;
  if (name == "spectral" || name == "spectral_kl") return OracleKind::SpectralKL;
  throw Error(ErrorCode::InvalidParams, "unknown oracle '" + name + "'");
}

int run_gen(const GenOptions& o) {
  const auto family = family_from_name(o.family);
  if (!family) throw Error(ErrorCode::InvalidParams, "unknown family '" + o.family + "'");
  const Graph g = generate(*family, GenParams{o.n, o.d, o.p}, o.seed);
  write_output(o.out, serialize_graph(g) + "\n");
  return kOk;
}

int run_solve(const SolveOptions& o) {
  const auto start = Clock::now();
  const Graph g = load_graph(o.input);
  const CutOracle oracle = make_oracle(o.oracle, o.seed);
  const Decomposition run = cong_span_tree(g, oracle);
  verify_structure(run, g);
  const auto checks = verify_recurrence(run.trace, g);
  const CongestionReport congestion = tree_congestion(g, run.tree);

  Json out = header("solve");
  out["config"] = Json{{"input", o.input},
                       {"oracle", std::string(oracle_name(oracle.kind))},
                       {"seed", o.seed},
                       {"exact_limit", oracle.exact_limit}};
  out["instance"] = instance_json(g, o.input);
  out["oracle_guarantee"] = std::string(oracle.guarantee());
  out["max_congestion"] = congestion.max_congestion;
  out["tree"] = report::to_json(run.tree.edges());
  out["congestion"] = report::to_json(congestion);
  out["decomposition"] = report::to_json(run.trace);
  out["recurrence"] = report::to_json(checks);
  if (oracle.kind == OracleKind::Exact && g.n() >= 2 && g.n() <= kDefaultHbLimit)
    out["global_bound"] = report::to_json(verify_global_bound(run.trace, g));
  if (o.timing) out["timing_ms"] = millis_since(start);

  if (!o.tree_out.empty()) write_output(o.tree_out, serialize_tree(run.tree));
  if (!o.dot_out.empty()) write_output(o.dot_out, report::to_dot(run.trace));
  write_output(o.out, dump(out));
  return kOk;
}

int run_exact(const ExactOptions& o) {
  const auto start = Clock::now();
  const Graph g = load_graph(o.input);
  const ExactStcResult result = exact_stc(g, o.budget);
  Json out = header("exact");
  out["config"] = Json{{"input", o.input}, {"budget", o.budget}};
  out["instance"] = instance_json(g, o.input);
  out["stc"] = result.value;
  out["tree_count"] = result.tree_count.str();
  out["search_nodes"] = result.search_nodes;
  out["witness"] = report::to_json(result.witness.edges());
  out["witness_congestion"] = report::to_json(tree_congestion(g, result.witness));
  if (o.timing) out["timing_ms"] = millis_since(start);
  write_output(o.out, dump(out));
  return kOk;
}

int run_bounds(const BoundsOptions& o) {
  const Graph g = load_graph(o.input);
  if (g.n() == 0 || !is_connected(g)) throw Error(ErrorCode::DisconnectedInput, "graph is not connected");
  BoundSearchOptions options;
  options.exact_limit = exact_limit_from_env();
  options.effort = o.effort;
  options.seed = o.seed;
  if (o.mode == "exact") {
    if (g.n() > options.exhaustive_limit)
      throw Error(ErrorCode::TooLarge, "--mode exact tries every induced subgraph; n = " + std::to_string(g.n()) +
                                           " exceeds " + std::to_string(options.exhaustive_limit) +
                                           " (use --mode search)");
  } else {
    options.exhaustive_limit = 0;
  }
  const auto certs = all_certificates(g, options);
  const BoundCertificate best = best_certificate(g, options);
  Json list = Json::array();
  for (const auto& cert : certs) list.push_back(report::to_json(cert));
  Json out = header("bounds");
  out["config"] = Json{{"input", o.input}, {"mode", o.mode}, {"effort", o.effort}, {"seed", o.seed}};
  out["instance"] = instance_json(g, o.input);
  out["certificates"] = std::move(list);
  out["best"] = report::to_json(best);
  write_output(o.out, dump(out));
  return kOk;
}

int run_verify(const VerifyOptions& o) {
  const CutOracle oracle = make_oracle(o.oracle, o.seed);
  if (o.small_exhaustive > 0) {
    std::size_t count = 0;
    for (const Graph& g : connected_graphs_up_to(o.small_exhaustive)) {
      try {
        check_run(g, oracle, o.budget);
      } catch (const InvariantViolation& e) {
        std::cerr << "graph:\n" << serialize_graph(g) << '\n';
        throw;
      }
      ++count;
    }
    std::cout << "ok: " << count << " connected graphs on <= " << o.small_exhaustive << " vertices\n";
    return kOk;
  }
  if (o.input.empty()) throw Error(ErrorCode::InvalidParams, "verify needs -i or --small-exhaustive");
  const Graph g = load_graph(o.input);
  if (!o.tree.empty()) {
    check_tree(g, load_tree(o.tree, g), o.budget);
  } else {
    check_run(g, oracle, o.budget);
  }
  std::cout << "ok\n";
  return kOk;
}

int run_bench(const BenchOptions& o) {
  const BenchSpec spec = parse_bench_spec(read_file(o.spec), o.spec);
  const auto& jobs = spec.jobs;
  const std::uint64_t budget = spec.stc_budget;
  const std::size_t exact_limit = exact_limit_from_env();
  std::vector<BenchRow> rows(jobs.size());
  std::vector<std::string> errors(jobs.size());
  const auto count = static_cast<long long>(jobs.size());
  // Rows are independent and land at fixed indices, so output order never depends on scheduling.
#pragma omp parallel for schedule(dynamic, 1)
  for (long long i = 0; i < count; ++i) {
    const auto& job = jobs[static_cast<std::size_t>(i)];
    auto& row = rows[static_cast<std::size_t>(i)];
    try {
      const auto start = Clock::now();
      const Graph g = generate(job.family, job.params, job.seed);
      const ApproximationRecord rec =
          approximation_report(g, CutOracle{job.oracle, exact_limit, job.seed}, budget, kDefaultHbLimit);
      row.n = rec.n;
      row.m = rec.m;
      row.delta = rec.max_degree;
      row.oracle = std::string(oracle_name(job.oracle));
      row.congestion = std::to_string(rec.congestion);
      row.stc_or_bound = to_string(rec.denominator);
      row.bound_kind = rec.denominator_kind;
      row.ratio = to_decimal(rec.ratio);
      row.height = std::to_string(rec.height);
      if (o.timing) row.millis = to_decimal(Rational(static_cast<std::int64_t>(millis_since(start) * 1000), 1000), 3);
    } catch (const std::exception& e) {
      errors[static_cast<std::size_t>(i)] = e.what();
    }
  }
  for (std::size_t i = 0; i < errors.size(); ++i)
    if (!errors[i].empty())
      throw Error(ErrorCode::InvalidParams, "bench row " + std::to_string(i) + " (" +
                                                std::string(family_name(jobs[i].family)) + ", n=" +
                                                std::to_string(jobs[i].params.n) + "): " + errors[i]);

  std::ostringstream csv;
  csv << "n,m,delta,oracle,congestion,stc_or_bound,bound_kind,ratio,height,millis\n";
  for (const auto& r : rows)
    csv << r.n << ',' << r.m << ',' << r.delta << ',' << r.oracle << ',' << r.congestion << ',' << r.stc_or_bound
        << ',' << r.bound_kind << ',' << r.ratio << ',' << r.height << ',' << r.millis << '\n';
  write_output(o.out, csv.str());
  return kOk;
}

}  // namespace stc::cli
