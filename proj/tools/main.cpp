// Command line front end: gen / solve / reduce / verify / bench.
//
// Exit codes: 0 = solved (YES in decision terms), 1 = NO, 2 = usage or input
// error, 3 = refused for resource reasons.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "cvplat/io.hpp"
#include "cvplat/runtime.hpp"
#include "cvplat/solvers.hpp"
#include "cvplat/toplevel.hpp"

namespace {

using namespace cvplat;

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

struct SolveSpec {
  std::string method = "brute";
  std::size_t k = 3;
};

SolveReport run_cvp_method(const CvpInstance& inst, const SolveSpec& spec) {
  if (spec.method == "brute") return brute_force_cvp(inst);
  if (spec.method == "clique")
    return solve_cvp_via_clique(inst, spec.k, CliqueMethod::BruteClique);
  if (spec.method == "triangle")
    return solve_cvp_via_clique(inst, spec.k, CliqueMethod::NaiveTriangle);
  if (spec.method == "triangle-encoded")
    return solve_cvp_via_clique(inst, spec.k, CliqueMethod::EncodedTriangle);
  if (spec.method == "hyperclique")
    return solve_cvp_via_clique(inst, std::max<std::size_t>(spec.k, inst.p),
                                CliqueMethod::BruteClique);
  if (spec.method == "maxsat-brute") return solve_cvp_via_maxsat(inst);
  throw InvalidParameter("unknown solve method '" + spec.method + "'");
}

SolveReport run_svp_method(const SvpInstance& inst, const SolveSpec& spec) {
  if (spec.method == "brute") return brute_force_svp(inst);
  if (spec.method == "maxsat-brute") return solve_svp_via_maxsat(inst);
  CvpMethod inner;
  if (spec.method == "clique") {
    inner.kind = CvpMethod::Kind::Clique;
    inner.k = spec.k;
    inner.clique_method = CliqueMethod::BruteClique;
  } else if (spec.method == "triangle") {
    inner.kind = CvpMethod::Kind::Clique;
    inner.k = 3;
    inner.clique_method = CliqueMethod::NaiveTriangle;
  } else if (spec.method == "triangle-encoded") {
    inner.kind = CvpMethod::Kind::Clique;
    inner.k = 3;
    inner.clique_method = CliqueMethod::EncodedTriangle;
  } else if (spec.method == "hyperclique") {
    inner.kind = CvpMethod::Kind::Clique;
    inner.k = std::max<std::size_t>(spec.k, inst.p);
    inner.clique_method = CliqueMethod::BruteClique;
  } else {
    throw InvalidParameter("unknown solve method '" + spec.method + "'");
  }
  return solve_svp_via_cvp(inst, inner);
}

int cmd_gen(const std::string& out, const std::string& kind, std::size_t n,
            std::size_t m, unsigned p, std::uint64_t bound,
            const std::string& mode_name, std::uint64_t seed,
            std::uint64_t perturb) {
  const GenMode mode = parse_gen_mode(mode_name);
  InstanceFile f;
  if (kind == "cvp") {
    f = make_instance_file(generate_instance(n, m, p, bound, mode, seed, perturb));
  } else if (kind == "svp") {
    f = make_instance_file(generate_svp_instance(n, m, p, bound, mode, seed));
  } else {
    throw InvalidParameter("gen: kind must be cvp or svp");
  }
  if (out.empty())
    write_instance(std::cout, f);
  else
    write_instance_file(out, f);
  return 0;
}

int cmd_solve(const std::string& in, const SolveSpec& spec,
              const std::string& out) {
  const InstanceFile f = read_instance_file(in);
  SolveReport rep;
  bool yes = false;
  if (f.kind == "cvp") {
    const CvpInstance inst = f.to_cvp();
    rep = run_cvp_method(inst, spec);
    yes = decide_cvp(inst, rep);
  } else {
    const SvpInstance inst = f.to_svp();
    rep = run_svp_method(inst, spec);
    yes = decide_svp(inst, rep);
  }
  write_report(std::cout, rep);
  std::cout << "# decision " << (yes ? "YES" : "NO") << "\n";
  if (!out.empty()) write_report_file(out, rep);
  return yes ? 0 : 1;
}

int cmd_reduce(const std::string& in, const std::string& to, std::size_t k,
               const std::string& out) {
  const InstanceFile f = read_instance_file(in);
  if (to == "wcnf") {
    WcnfFormula wcnf = f.kind == "cvp" ? reduce_cvp_to_wcnf(f.to_cvp())
                                       : reduce_svp_to_wcnf(f.to_svp());
    if (out.empty())
      write_wcnf(std::cout, wcnf);
    else
      write_wcnf_file(out, wcnf);
    return 0;
  }
  const CvpInstance inst = f.to_cvp();
  GraphFile gf;
  if (to == "clique") {
    gf = make_graph_file(reduce_cvp_to_clique(inst, k));
  } else if (to == "hyperclique") {
    gf = make_graph_file(reduce_cvp_to_hyperclique(inst, std::max<std::size_t>(k, inst.p)));
  } else {
    throw InvalidParameter("reduce: target must be clique, hyperclique or wcnf");
  }
  if (out.empty())
    write_graph(std::cout, gf);
  else
    write_graph_file(out, gf);
  return 0;
}

// Recompute the distance of each report's z on the instance; reports must
// reproduce their claimed dist_pow, and two reports must agree on it.
int cmd_verify(const std::string& instance_path, const std::string& report_path,
               const std::string& report2_path) {
  const InstanceFile f = read_instance_file(instance_path);
  const SolveReport r1 = read_report_file(report_path);

  auto recompute = [&](const SolveReport& r) {
    if (r.z.size() != f.n)
      throw InvalidParameter("verify: report z length does not match the instance");
    IntVector v(f.m);
    for (std::size_t i = 0; i < f.n; ++i)
      if (r.z[i]) add_in_place(v, f.basis[i]);
    if (f.target) sub_in_place(v, *f.target);
    return norm_pow(v, f.p);
  };

  bool ok = true;
  const Int d1 = recompute(r1);
  if (d1 != r1.dist_pow) {
    std::cout << "report 1: dist_pow mismatch (claimed " << to_string(r1.dist_pow)
              << ", recomputed " << to_string(d1) << ")\n";
    ok = false;
  }
  if (!report2_path.empty()) {
    const SolveReport r2 = read_report_file(report2_path);
    const Int d2 = recompute(r2);
    if (d2 != r2.dist_pow) {
      std::cout << "report 2: dist_pow mismatch\n";
      ok = false;
    }
    if (r1.dist_pow != r2.dist_pow) {
      std::cout << "reports disagree: " << to_string(r1.dist_pow) << " vs "
                << to_string(r2.dist_pow) << "\n";
      ok = false;
    }
  }
  std::cout << (ok ? "verify: OK\n" : "verify: FAILED\n");
  return ok ? 0 : 1;
}

int cmd_bench(const std::string& suite, const std::string& out) {
  std::ofstream file;
  std::ostream* os = &std::cout;
  if (!out.empty()) {
    file.open(out);
    if (!file) throw ParseError("cannot open '" + out + "' for writing");
    os = &file;
  }
  *os << "n,k,method,wall_time_s,dist_pow\n";

  auto run = [&](const CvpInstance& inst, std::size_t k, const std::string& method) {
    const auto start = std::chrono::steady_clock::now();
    const SolveReport rep = run_cvp_method(inst, SolveSpec{method, k});
    *os << inst.n() << ',' << k << ',' << method << ',' << seconds_since(start)
        << ',' << to_string(rep.dist_pow) << "\n";
    os->flush();
  };

  if (suite == "scaling") {
    for (std::size_t n : {18, 21, 24}) {
      const auto gen = generate_instance(n, 6, 2, 16, GenMode::PlantedZero,
                                         1000 + n);
      run(gen.inst, 3, "triangle");
    }
  } else if (suite == "methods") {
    for (std::size_t n : {8, 10, 12}) {
      const auto gen =
          generate_instance(n, 6, 2, 8, GenMode::Uniform, 2000 + n);
      for (const char* method :
           {"brute", "clique", "triangle", "triangle-encoded", "maxsat-brute"})
        run(gen.inst, 3, method);
    }
  } else {
    throw InvalidParameter("bench: suite must be scaling or methods");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact (0,1)-CVP/SVP solvers and reductions"};
  app.require_subcommand(1);

  unsigned threads = 1;
  app.add_option("--threads", threads, "worker cap for parallel kernels");

  if (const char* budget = std::getenv("CVPLAT_ELEMENT_BUDGET")) {
    try {
      set_element_budget(std::stoull(budget));
    } catch (const std::exception&) {
      std::cerr << "bad CVPLAT_ELEMENT_BUDGET value\n";
      return 2;
    }
  }

  // gen
  auto* gen = app.add_subcommand("gen", "generate an instance file");
  std::string gen_kind = "cvp", gen_mode = "uniform", gen_out;
  std::size_t gen_n = 8, gen_m = 6;
  unsigned gen_p = 2;
  std::uint64_t gen_bound = 8, gen_seed = 1, gen_perturb = 1;
  gen->add_option("--kind", gen_kind, "cvp or svp");
  gen->add_option("--n", gen_n, "lattice rank");
  gen->add_option("--m", gen_m, "ambient dimension");
  gen->add_option("--p", gen_p, "even norm index");
  gen->add_option("--coord-bound", gen_bound, "max |coordinate|");
  gen->add_option("--mode", gen_mode, "uniform | planted-zero | planted-near");
  gen->add_option("--seed", gen_seed, "generator seed");
  gen->add_option("--perturb-bound", gen_perturb, "planted-near error bound");
  gen->add_option("--out,-o", gen_out, "output file (stdout when omitted)");

  // solve
  auto* solve = app.add_subcommand("solve", "solve an instance file");
  std::string solve_in, solve_out;
  SolveSpec spec;
  solve->add_option("--in,-i", solve_in, "instance file")->required();
  solve->add_option("--method", spec.method,
                    "brute | clique | triangle | triangle-encoded | "
                    "hyperclique | maxsat-brute");
  solve->add_option("--k", spec.k, "number of blocks for the clique paths");
  solve->add_option("--out,-o", solve_out, "also write the report to a file");

  // reduce
  auto* reduce = app.add_subcommand("reduce", "materialize a reduction");
  std::string red_in, red_to = "clique", red_out;
  std::size_t red_k = 3;
  reduce->add_option("--in,-i", red_in, "instance file")->required();
  reduce->add_option("--to", red_to, "clique | hyperclique | wcnf");
  reduce->add_option("--k", red_k, "number of blocks");
  reduce->add_option("--out,-o", red_out, "output file (stdout when omitted)");

  // verify
  auto* verify = app.add_subcommand("verify", "recheck report(s) against an instance");
  std::string ver_inst, ver_rep, ver_rep2;
  verify->add_option("--instance", ver_inst, "instance file")->required();
  verify->add_option("--report", ver_rep, "report file")->required();
  verify->add_option("--report2", ver_rep2, "second report to cross-check");

  // bench
  auto* bench = app.add_subcommand("bench", "timing sweeps, CSV output");
  std::string bench_suite = "scaling", bench_out;
  bench->add_option("--suite", bench_suite, "scaling | methods");
  bench->add_option("--out,-o", bench_out, "CSV file (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    set_worker_count(threads);
    if (gen->parsed())
      return cmd_gen(gen_out, gen_kind, gen_n, gen_m, gen_p, gen_bound,
                     gen_mode, gen_seed, gen_perturb);
    if (solve->parsed()) return cmd_solve(solve_in, spec, solve_out);
    if (reduce->parsed()) return cmd_reduce(red_in, red_to, red_k, red_out);
    if (verify->parsed()) return cmd_verify(ver_inst, ver_rep, ver_rep2);
    if (bench->parsed()) return cmd_bench(bench_suite, bench_out);
    return 2;
  } catch (const ResourceLimit& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
