#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <map>
#include <stdexcept>
#include <string>

#include "commands.hpp"
#include "monodyn/errors.hpp"
#include "monodyn/report.hpp"

namespace {

using monodyn::cli::Format;

// --threads wins, then MONODYN_THREADS, then 1.
unsigned resolve_threads(const CLI::Option* flag, unsigned value) {
  if (flag->count() > 0) return value;
  const char* env = std::getenv("MONODYN_THREADS");
  if (env == nullptr || *env == '\0') return 1;
  try {
    std::size_t used = 0;
    const unsigned long v = std::stoul(env, &used);
    if (used != std::string(env).size() || v == 0 || v > 256) throw std::invalid_argument(env);
    return static_cast<unsigned>(v);
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string("MONODYN_THREADS must be an integer in [1, 256], got ") +
                                env);
  }
}

}  // namespace

int main(int argc, char** argv) {
  namespace cli = monodyn::cli;

  CLI::App app{"Dynamics of monomial maps x -> a x^n over finite fields"};
  app.set_version_flag("--version", std::string(monodyn::report::version()));
  app.require_subcommand(1);
  app.fallthrough();

  cli::Common common;
  const std::map<std::string, Format> formats{
      {"json", Format::kJson}, {"csv", Format::kCsv}, {"dot", Format::kDot}, {"human", Format::kHuman}};
  app.add_option("--format", common.format, "Output format: json, csv, dot or human")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  app.add_option("-o,--output", common.output, "Write output to this file instead of stdout");
  unsigned threads = 1;
  auto* threads_opt = app.add_option("--threads", threads, "Worker threads for prime sweeps")
                          ->check(CLI::Range(1U, 256U));
  app.add_option("--seed", common.seed, "Seed for randomized sweeps (recorded in every output)");

  cli::AnalyzeArgs analyze;
  auto* a_cmd = app.add_subcommand("analyze", "Closed-form cycle profile, optionally checked by brute force");
  a_cmd->add_option("--q", analyze.q, "Field size (prime power)")->required();
  a_cmd->add_option("--n", analyze.n, "Exponent n >= 2")->required();
  a_cmd->add_option("--a", analyze.a, "Coefficient as an element index in [1, q-1]");
  a_cmd->add_flag("--brute", analyze.brute, "Build the functional graph and compare");

  cli::GraphArgs graph;
  auto* g_cmd = app.add_subcommand("graph", "Export the functional graph as DOT or JSON");
  g_cmd->add_option("--q", graph.q, "Field size (prime power)")->required();
  g_cmd->add_option("--n", graph.n, "Exponent n >= 2")->required();
  g_cmd->add_option("--a", graph.a, "Coefficient as an element index, default 1");

  cli::SweepArgs sweep;
  auto* s_cmd = app.add_subcommand("sweep", "Empirical mean of periodic points over primes");
  s_cmd->add_option("--n", sweep.n, "Exponent n >= 2")->required();
  s_cmd->add_option("--r", sweep.r, "Period r >= 1")->capture_default_str();
  s_cmd->add_option("--s", sweep.s, "Extension degree s >= 1")->capture_default_str();
  s_cmd->add_option("--t", sweep.t, "Prime bound (at most 10^8)")->required();
  s_cmd->add_option("--checkpoints", sweep.checkpoints, "Comma-separated checkpoints")
      ->delimiter(',');

  cli::FfieldArgs ffield;
  auto* f_cmd = app.add_subcommand("ffield", "Densities and Dirichlet means over F_q(T)");
  f_cmd->add_option("--q", ffield.q, "Constant field size (prime power)")->required();
  auto* f_density = f_cmd->add_flag("--density", "Density of primes with r | |P| - 1");
  auto* f_dmean = f_cmd->add_flag("--dmean", "Dirichlet means D(r, K) and C(r, K)");
  auto* f_osc = f_cmd->add_flag("--oscillate", "Ratio series C(r, P_K(t)) / pi_K(t)");
  f_density->excludes(f_dmean, f_osc);
  f_dmean->excludes(f_osc);
  f_cmd->add_option("--r", ffield.r, "Modulus / period r >= 1")->required();
  auto* f_n = f_cmd->add_option("--n", ffield.n, "Exponent n >= 2 (with --dmean)");
  auto* f_t = f_cmd->add_option("--t", ffield.t, "Largest degree (with --oscillate, at most 4096)");

  cli::VerifyArgs verify;
  auto* v_cmd = app.add_subcommand("verify", "Oracle-equivalence sweeps");
  v_cmd->add_option("--scope", verify.scope, "quick or full")
      ->check(CLI::IsMember({"quick", "full"}))
      ->capture_default_str();
  v_cmd->add_flag("--inject-fault", verify.inject_fault,
                  "Perturb the closed forms to confirm the sweeps catch it");

  try {
    app.parse(argc, argv);
    if (f_cmd->parsed()) {
      if (f_dmean->count() > 0) {
        if (f_n->count() == 0) throw CLI::RequiredError("--n (with --dmean)");
        ffield.mode = cli::FfieldMode::kDmean;
      } else if (f_osc->count() > 0) {
        if (f_t->count() == 0) throw CLI::RequiredError("--t (with --oscillate)");
        ffield.mode = cli::FfieldMode::kOscillate;
      } else if (f_density->count() > 0) {
        ffield.mode = cli::FfieldMode::kDensity;
      } else {
        throw CLI::RequiredError("one of --density, --dmean, --oscillate");
      }
    }
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kInvalidInput;
  }

  try {
    common.threads = resolve_threads(threads_opt, threads);
    if (a_cmd->parsed()) return cli::run_analyze(analyze, common);
    if (g_cmd->parsed()) return cli::run_graph(graph, common);
    if (s_cmd->parsed()) return cli::run_sweep(sweep, common);
    if (f_cmd->parsed()) return cli::run_ffield(ffield, common);
    return cli::run_verify(verify, common);
  } catch (const monodyn::ResourceLimitError& e) {
    std::cerr << "monodyn: resource cap: " << e.what() << "\n";
    return cli::kResourceCap;
  } catch (const std::out_of_range& e) {
    std::cerr << "monodyn: resource cap: " << e.what() << "\n";
    return cli::kResourceCap;
  } catch (const monodyn::InvariantViolation& e) {
    std::cerr << "monodyn: internal check failed: " << e.what() << "\n";
    return cli::kVerificationFailed;
  } catch (const std::logic_error& e) {
    std::cerr << "monodyn: invalid input: " << e.what() << "\n";
    return cli::kInvalidInput;
  } catch (const std::exception& e) {
    std::cerr << "monodyn: error: " << e.what() << "\n";
    return cli::kVerificationFailed;
  }
}
