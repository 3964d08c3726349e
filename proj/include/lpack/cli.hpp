#pragma once

// `lpack` command-line driver. Exit codes: 0 success, 1 invalid certificate
// or infeasible instance, 2 usage error, 3 input error (unreadable or
// malformed file, unmet precondition, instance too large for the solver).

#include <iostream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lpack/bench.hpp"
#include "lpack/bounds.hpp"
#include "lpack/cubic.hpp"
#include "lpack/errors.hpp"
#include "lpack/exact.hpp"
#include "lpack/generators.hpp"
#include "lpack/greedy.hpp"
#include "lpack/io.hpp"
#include "lpack/random_packing.hpp"
#include "lpack/verify.hpp"

namespace lpack::cli {

enum ExitCode : int { kOk = 0, kInvalid = 1, kUsage = 2, kInput = 3 };

struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  return read_file(path);
}

inline void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
  } else {
    write_file(path, text);
  }
}

inline std::string witness_line(const VertexSet& x) {
  std::string line = "witness:";
  for (Vertex v : x) line += ' ' + std::to_string(v);
  return line + '\n';
}

inline AnyGraph load_graph(const std::string& path) {
  try {
    return parse_graph(read_input(path));
  } catch (const input_error& e) {
    throw input_error(path + ": " + e.what());
  }
}

inline Graph load_plain(const std::string& path) {
  auto g = load_graph(path);
  try {
    return as_plain(g);
  } catch (const input_error& e) {
    throw input_error(path + ": " + e.what());
  }
}

}  // namespace detail

struct GenArgs {
  std::string family;
  std::size_t n = 0, r = 0, k = 0, copies = 1;
  std::uint32_t q = 0;
  std::uint64_t seed = 0;
  std::string out;
  CLI::Option *n_opt = nullptr, *r_opt = nullptr, *q_opt = nullptr, *k_opt = nullptr;
};

inline int run_gen(const GenArgs& a, std::ostream& out) {
  auto need = [](const CLI::Option* opt, const char* flag, const std::string& family) {
    if (opt->count() == 0) throw usage_error("--family " + family + " requires " + flag);
  };
  if (a.copies < 1) throw usage_error("--copies must be at least 1");
  Graph g;
  if (a.family == "cycle") {
    need(a.n_opt, "--n", a.family);
    g = gen_cycle(a.n);
  } else if (a.family == "h6" || a.family == "petersen" || a.family == "k4") {
    g = gen_named(a.family);
  } else if (a.family == "projective") {
    need(a.q_opt, "--q", a.family);
    need(a.k_opt, "--k", a.family);
    g = gen_projective(a.q, a.k);
  } else if (a.family == "random-regular") {
    need(a.n_opt, "--n", a.family);
    need(a.r_opt, "--r", a.family);
    g = gen_random_regular(a.n, a.r, a.seed);
  } else {
    throw usage_error("--family: unknown family '" + a.family + "'");
  }
  detail::emit(a.out, serialize_graph(disjoint_copies(g, a.copies)), out);
  return kOk;
}

struct SolveArgs {
  std::size_t k = 0, l = 0;
  bool dominating = false;
  std::string file;
  CLI::Option *k_opt = nullptr, *l_opt = nullptr;
};

inline int run_solve(const SolveArgs& a, std::ostream& out) {
  if (a.dominating && a.l_opt->count() == 0) throw usage_error("--dominating requires --l");
  if (!a.dominating && a.k_opt->count() == 0) throw usage_error("--k is required");
  const Graph g = detail::load_plain(a.file);
  const SolveResult r = a.dominating ? min_tuple_dominating(g, a.l) : max_k_limited(g, a.k);
  out << "optimum: " << r.optimum << '\n' << detail::witness_line(r.witness) << "nodes: " << r.nodes_explored << '\n';
  return kOk;
}

struct ConstructArgs {
  std::string method;
  std::size_t k = 0;
  std::uint64_t seed = 0;
  double p = 0.0;
  std::uint64_t max_rounds = 100000;
  std::string trace, out, file;
  CLI::Option* p_opt = nullptr;
};

inline int run_construct(const ConstructArgs& a, std::ostream& out) {
  if (a.method == "cubic2" && a.k != 2) throw usage_error("--method cubic2 requires --k 2");
  if (a.method != "cubic2" && !a.trace.empty()) throw usage_error("--trace is only available with --method cubic2");
  if (a.p_opt->count() && a.method != "sample-repair" && a.method != "lll") {
    throw usage_error("--p applies to sample-repair and lll only");
  }
  const AnyGraph any = detail::load_graph(a.file);
  std::ostringstream report;
  report << "method: " << a.method << '\n' << "k: " << a.k << '\n';
  VertexSet x;
  if (a.method == "cubic2") {
    const auto tm = as_typed(any);
    auto result = construct_two_limited(tm);
    if (!a.trace.empty()) write_file(a.trace, format_trace(result.trace));
    x = std::move(result.vertices);
    report << "n: " << tm.vertex_count() << '\n' << "steps: " << result.trace.steps.size() << '\n';
  } else {
    const Graph g = as_plain(any);
    report << "n: " << g.vertex_count() << '\n';
    std::optional<double> p;
    if (a.p_opt->count()) p = a.p;
    if (a.method == "greedy") {
      x = greedy_k_limited(g, a.k);
    } else if (a.method == "sample-repair") {
      auto r = sample_and_repair(g, a.k, p, a.seed);
      x = std::move(r.packing.vertices);
      report << "seed: " << a.seed << '\n' << "p: " << r.p << '\n' << "repairs: " << r.repairs << '\n';
    } else {
      std::optional<LLLParameters> params;
      if (p) {
        params = lll_parameters(std::max<std::size_t>(degree_stats(g).max_degree, 2), a.k);
        if (!(*p > 0.0 && *p <= 1.0)) throw input_error("--p must lie in (0, 1]");
        params->p = *p;
      }
      auto r = lll_resample(g, a.k, params, a.seed, a.max_rounds);
      x = std::move(r.packing.vertices);
      report << "seed: " << a.seed << '\n' << "p: " << r.p << '\n' << "rounds: " << r.rounds << '\n'
             << "success: " << (r.success ? "true" : "false") << '\n'
             << "clamped: " << (r.clamped ? "true" : "false") << '\n'
             << "size_event: " << (r.size_event ? "true" : "false") << '\n';
    }
  }
  report << "size: " << x.size() << '\n' << detail::witness_line(x);
  detail::emit(a.out, report.str(), out);
  return kOk;
}

struct VerifyArgs {
  std::size_t k = 0, l = 0;
  bool dominating = false;
  std::string packing, file;
  CLI::Option *k_opt = nullptr, *l_opt = nullptr;
};

inline int run_verify(const VerifyArgs& a, std::ostream& out) {
  if (a.dominating && a.l_opt->count() == 0) throw usage_error("--dominating requires --l");
  if (!a.dominating && a.k_opt->count() == 0) throw usage_error("--k is required");
  if (a.packing == "-" && a.file == "-") throw usage_error("--packing and GRAPH cannot both be stdin");
  const AnyGraph any = detail::load_graph(a.file);
  std::vector<Vertex> x;
  try {
    x = parse_packing(detail::read_input(a.packing));
  } catch (const input_error& e) {
    throw input_error(a.packing + ": " + e.what());
  }
  normalize(x);
  VerificationReport report;
  if (a.dominating) {
    report = verify_tuple_dominating(as_plain(any), x, a.l);
  } else if (std::holds_alternative<TypedMultigraph>(any)) {
    if (a.k != 2) throw input_error(a.file + ": typed graphs are verified for k = 2 only");
    report = verify_typed_two_limited(std::get<TypedMultigraph>(any), x);
  } else {
    report = verify_k_limited(std::get<Graph>(any), x, a.k);
  }
  out << format_report(report);
  return report.valid ? kOk : kInvalid;
}

struct BoundsArgs {
  std::size_t k = 0, n = 0, maxdeg = 0, mindeg = 0;
  std::string file;
  CLI::Option *n_opt = nullptr, *maxdeg_opt = nullptr, *mindeg_opt = nullptr;
};

inline int run_bounds(const BoundsArgs& a, std::ostream& out) {
  const std::size_t given = a.n_opt->count() + a.maxdeg_opt->count() + a.mindeg_opt->count();
  if (a.file.empty() && given != 3) throw usage_error("give either FILE or all of --n, --maxdeg, --mindeg");
  if (!a.file.empty() && given != 0) throw usage_error("FILE cannot be combined with --n, --maxdeg, --mindeg");
  if (a.file.empty()) {
    out << format_bound_sheet(bound_sheet(a.n, a.maxdeg, a.mindeg, a.k));
  } else {
    out << format_bound_sheet(bound_sheet(detail::load_plain(a.file), a.k));
  }
  return kOk;
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"k-limited packings and tuple domination"};
  app.name("lpack");
  app.require_subcommand(1);
  auto methods = CLI::IsMember({"cubic2", "greedy", "sample-repair", "lll"});

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "generate a graph");
  gen_cmd->add_option("--family", gen.family, "cycle|h6|petersen|k4|projective|random-regular")->required();
  gen.n_opt = gen_cmd->add_option("--n", gen.n, "number of vertices");
  gen.r_opt = gen_cmd->add_option("--r", gen.r, "degree (random-regular)");
  gen.q_opt = gen_cmd->add_option("--q", gen.q, "field order (projective)");
  gen.k_opt = gen_cmd->add_option("--k", gen.k, "k (projective)");
  gen_cmd->add_option("--seed", gen.seed, "random seed (default 0)");
  gen_cmd->add_option("--copies", gen.copies, "disjoint copies (default 1)");
  gen_cmd->add_option("--out", gen.out, "output file, - for stdout")->required();

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "exact L_k or tuple domination number");
  solve_cmd->add_flag("--exact", "exact branch and bound (the only solver)");
  solve_cmd->add_flag("--dominating", solve.dominating, "minimum l-tuple dominating set");
  solve.l_opt = solve_cmd->add_option("--l", solve.l, "l for --dominating");
  solve.k_opt = solve_cmd->add_option("--k", solve.k, "k");
  solve_cmd->add_option("FILE", solve.file, "graph file, - for stdin")->required();

  ConstructArgs con;
  auto* con_cmd = app.add_subcommand("construct", "build a k-limited packing");
  con_cmd->add_option("--method", con.method, "cubic2|greedy|sample-repair|lll")->required()->check(methods);
  con_cmd->add_option("--k", con.k, "k")->required();
  con_cmd->add_option("--seed", con.seed, "random seed (default 0)");
  con.p_opt = con_cmd->add_option("--p", con.p, "sampling probability (default: automatic)");
  con_cmd->add_option("--max-rounds", con.max_rounds, "lll round limit (default 100000)");
  con_cmd->add_option("--trace", con.trace, "write the cubic2 reduction trace here");
  con_cmd->add_option("--out", con.out, "write the report here instead of stdout");
  con_cmd->add_option("FILE", con.file, "graph file, - for stdin")->required();

  VerifyArgs ver;
  auto* ver_cmd = app.add_subcommand("verify", "check a packing or tuple dominating set");
  ver.k_opt = ver_cmd->add_option("--k", ver.k, "k");
  ver_cmd->add_option("--packing", ver.packing, "vertex set file, - for stdin")->required();
  ver_cmd->add_flag("--dominating", ver.dominating, "check l-tuple domination instead");
  ver.l_opt = ver_cmd->add_option("--l", ver.l, "l for --dominating");
  ver_cmd->add_option("GRAPH", ver.file, "graph file, - for stdin")->required();

  BoundsArgs bnd;
  auto* bnd_cmd = app.add_subcommand("bounds", "closed-form bounds on L_k");
  bnd_cmd->add_option("--k", bnd.k, "k")->required();
  bnd.n_opt = bnd_cmd->add_option("--n", bnd.n, "number of vertices");
  bnd.maxdeg_opt = bnd_cmd->add_option("--maxdeg", bnd.maxdeg, "maximum degree");
  bnd.mindeg_opt = bnd_cmd->add_option("--mindeg", bnd.mindeg, "minimum degree");
  bnd_cmd->add_option("FILE", bnd.file, "graph file");

  std::string suite;
  bool no_timing = false;
  auto* bench_cmd = app.add_subcommand("bench", "reproduce the tightness examples");
  bench_cmd->add_option("--suite", suite, "suite name")->required()->check(CLI::IsMember({"paper"}));
  bench_cmd->add_flag("--no-timing", no_timing, "omit the wall-time column");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*gen_cmd) return run_gen(gen, out);
    if (*solve_cmd) return run_solve(solve, out);
    if (*con_cmd) return run_construct(con, out);
    if (*ver_cmd) return run_verify(ver, out);
    if (*bnd_cmd) return run_bounds(bnd, out);
    out << format_bench(run_paper_suite(), !no_timing);
    return kOk;
  } catch (const usage_error& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const infeasible_error& e) {
    err << "infeasible: " << e.what() << '\n';
    return kInvalid;
  } catch (const std::invalid_argument& e) {
    err << "input error: " << e.what() << '\n';
    return kInput;
  } catch (const std::domain_error& e) {
    err << "precondition failed: " << e.what() << '\n';
    return kInput;
  } catch (const resource_error& e) {
    err << "resource limit: " << e.what() << '\n';
    return kInput;
  }
}

}  // namespace lpack::cli
