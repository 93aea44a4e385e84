#include "commands.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "monodyn/errors.hpp"
#include "monodyn/finite_field.hpp"
#include "monodyn/function_field.hpp"
#include "monodyn/graph_engine.hpp"
#include "monodyn/mean_values.hpp"
#include "monodyn/monomial_formulas.hpp"
#include "monodyn/report.hpp"
#include "monodyn/verify.hpp"

namespace monodyn::cli {

namespace {

using report::Json;
using u64 = std::uint64_t;

const char* format_name(Format f) {
  switch (f) {
    case Format::kJson: return "json";
    case Format::kCsv: return "csv";
    case Format::kDot: return "dot";
    case Format::kHuman: return "human";
  }
  return "json";
}

void require_format(const Common& c, std::initializer_list<Format> allowed, const char* command) {
  for (Format f : allowed) {
    if (f == c.format) return;
  }
  throw std::invalid_argument(std::string(command) + " does not support --format " +
                              format_name(c.format));
}

void emit(const std::string& text, const Common& c) {
  if (!c.output) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(*c.output, std::ios::binary | std::ios::trunc);
  if (!out) throw std::invalid_argument("cannot open output file " + *c.output);
  out << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json optional_json(const std::optional<u64>& v) { return v ? Json(*v) : Json(nullptr); }

std::string human(const Rational& v) {
  std::ostringstream out;
  out << to_string(v);
  if (boost::multiprecision::denominator(v) != 1) {
    char buf[32];
    std::snprintf(buf, sizeof buf, " (%.10g)", to_double(v));
    out << buf;
  }
  return out.str();
}

std::string human_map(const std::map<u64, u64>& m) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [k, v] : m) {
    out << (first ? "" : ", ") << k << ": " << v;
    first = false;
  }
  return out.str();
}

ff::FieldSpec explicit_field(u64 q) {
  if (q > ff::kMaxFieldSize) {
    throw ResourceLimitError("explicit field of order " + std::to_string(q) +
                             " exceeds 2^22 elements");
  }
  return ff::make_field_of_order(q);
}

graph::DynSystem make_system(const ff::FieldSpec& field, u64 n, const std::optional<u64>& a) {
  if (!a) return graph::DynSystem(field, n);
  if (*a == 0 || *a >= field.q()) {
    throw std::invalid_argument("--a must be an element index in [1, q-1]");
  }
  return graph::DynSystem(field, n, field.element_at(*a));
}

}  // namespace

int run_analyze(const AnalyzeArgs& args, const Common& common) {
  require_format(common, {Format::kJson, Format::kHuman}, "analyze");
  Json config;
  config["q"] = args.q;
  config["n"] = args.n;
  config["a"] = optional_json(args.a);
  config["brute"] = args.brute;

  const formulas::FieldOrder q(args.q);
  const auto prof = formulas::profile(q, args.n);

  Json result;
  result["profile"] = report::to_json(prof);
  result["fixed_point_system"] = formulas::is_fixed_point_system(q, args.n);
  result["bijective"] = formulas::is_bijective(q, args.n);

  int code = kOk;
  std::optional<graph::DichotomyReport> dich;
  std::optional<graph::OrbitStructure> st;
  if (args.brute || args.a) {
    const auto field = explicit_field(args.q);
    const auto sys = make_system(field, args.n, args.a);
    result["a_in_G"] = graph::has_nonzero_fixed(sys);
    if (args.brute) {
      st = graph::build(sys);
      dich = graph::dichotomy_report(sys, *st);
      Json brute;
      brute["aggregates"] = report::to_json(dich->brute);
      brute["match"] = dich->formulas_match;
      brute["periodic_total_matches"] = dich->periodic_total_matches;
      brute["graph_disconnected"] = dich->graph_disconnected;
      brute["star_connected"] = graph::star_connected(*st);
      brute["star_strongly_connected"] = graph::star_strongly_connected(*st);
      brute["passed"] = dich->passed();
      result["brute"] = std::move(brute);
      if (!dich->passed()) code = kVerificationFailed;
    }
  }

  if (common.format == Format::kJson) {
    emit(dump(report::envelope("analyze", config, common.seed, std::move(result))), common);
    return code;
  }
  std::ostringstream out;
  out << "monodyn " << report::version() << " analyze q=" << args.q << " n=" << args.n;
  if (args.a) out << " a=" << *args.a;
  out << "\n"
      << "q*(n) = " << prof.q_star << ", r^(n) = " << prof.r_hat << "\n"
      << "periodic points by period: " << human_map(prof.per_period) << "\n"
      << "cycles by length: " << human_map(prof.per_length) << "\n"
      << "total: " << prof.total_periodic << " periodic points, " << prof.total_cycles
      << " cycles\n";
  if (result.contains("a_in_G")) {
    out << "a in G_{n-1}: " << (result["a_in_G"].get<bool>() ? "yes" : "no") << "\n";
  }
  if (dich) {
    out << "brute force: " << dich->brute.periodic_total << " periodic points, "
        << dich->brute.component_count << " components; periods "
        << human_map(dich->brute.periodic) << "\n"
        << "match: " << (dich->formulas_match ? "true" : "false")
        << (dich->a_in_G ? "" : " (closed forms assume a in G_{n-1})") << "\n";
  }
  emit(out.str(), common);
  return code;
}

int run_graph(const GraphArgs& args, const Common& common) {
  require_format(common, {Format::kJson, Format::kDot}, "graph");
  Json config;
  config["q"] = args.q;
  config["n"] = args.n;
  config["a"] = optional_json(args.a);

  const formulas::FieldOrder q(args.q);
  const auto field = explicit_field(q.value());
  const auto st = graph::build(make_system(field, args.n, args.a));
  if (common.format == Format::kJson) {
    emit(dump(report::envelope("graph", config, common.seed, report::export_json(st))), common);
    return kOk;
  }
  std::ostringstream out;
  out << "// schema: " << report::kSchema << "\n"
      << "// version: " << report::version() << "\n"
      << "// config: " << config.dump() << "\n"
      << "// input_hash: " << report::fnv1a_hex(config.dump()) << "\n"
      << "// seed: " << common.seed << "\n"
      << graph::export_dot(st);
  emit(out.str(), common);
  return kOk;
}

int run_sweep(const SweepArgs& args, const Common& common) {
  require_format(common, {Format::kJson, Format::kCsv, Format::kHuman}, "sweep");
  Json config;
  config["n"] = args.n;
  config["r"] = args.r;
  config["s"] = args.s;
  config["t"] = args.t;
  config["checkpoints"] = args.checkpoints;
  config["threads"] = common.threads;

  mean::SweepOptions opts;
  opts.checkpoints = args.checkpoints;
  opts.threads = common.threads;
  const auto rep = mean::empirical_mean(args.r, args.s, args.n, args.t, opts);

  switch (common.format) {
    case Format::kJson:
      emit(dump(report::envelope("sweep", config, common.seed, report::to_json(rep))), common);
      break;
    case Format::kCsv:
      emit(report::csv_header("sweep", config, common.seed) + report::sweep_csv(rep), common);
      break;
    default: {
      std::ostringstream out;
      out << "monodyn " << report::version() << " sweep n=" << args.n << " r=" << args.r
          << " s=" << args.s << " t=" << args.t << "\n"
          << "analytic N(r, s) = " << human(rep.analytic) << "\n";
      for (const auto& c : rep.checkpoints) {
        out << "t=" << c.t << " pi=" << c.pi_t << " mean=" << human(c.empirical_mean) << "\n";
      }
      out << "final |error| = " << human(rep.final_abs_error) << "\n";
      emit(out.str(), common);
    }
  }
  return kOk;
}

int run_ffield(const FfieldArgs& args, const Common& common) {
  Json config;
  config["q"] = args.q;
  Json result;
  std::ostringstream text;
  text << "monodyn " << report::version() << " ffield q=" << args.q << "\n";
  const char* mode = "density";
  std::optional<ffield::FFDensityReport> osc;

  const formulas::FieldOrder q(args.q);
  switch (args.mode) {
    case FfieldMode::kDensity: {
      require_format(common, {Format::kJson, Format::kHuman}, "ffield --density");
      config["mode"] = mode;
      config["r"] = args.r;
      const auto split = ffield::C_r_count(q.value(), args.r, 0);
      result["empty_set"] = split.empty_set;
      if (split.empty_set) {
        text << "gcd(q, r) > 1: no prime P has r | |P| - 1\n";
        break;
      }
      const auto lim = ffield::subsequence_limits(q.value(), args.r);
      const auto density = ffield::dirichlet_density_S(q.value(), args.r);
      result["l_r"] = lim.l_r;
      result["dirichlet_density"] = report::rational_json(density);
      result["limit_A"] = report::rational_json(lim.limit_A);
      result["limit_B"] = report::rational_json(lim.limit_B);
      text << "l_r = " << lim.l_r << "\n"
           << "Dirichlet density = " << human(density) << "\n"
           << "subsequence limits: A = " << human(lim.limit_A) << ", B = " << human(lim.limit_B)
           << "\n";
      break;
    }
    case FfieldMode::kDmean: {
      require_format(common, {Format::kJson, Format::kHuman}, "ffield --dmean");
      mode = "dmean";
      config["mode"] = mode;
      config["n"] = args.n;
      config["r"] = args.r;
      const auto D = ffield::dirichlet_D_K(q.value(), args.n, args.r);
      const auto C = ffield::dirichlet_C_K(q.value(), args.n, args.r);
      result["D"] = report::rational_json(D);
      result["C"] = report::rational_json(C);
      text << "D(r, K) = " << human(D) << "\n"
           << "C(r, K) = " << human(C) << "\n";
      break;
    }
    case FfieldMode::kOscillate: {
      require_format(common, {Format::kJson, Format::kCsv, Format::kHuman}, "ffield --oscillate");
      mode = "oscillate";
      config["mode"] = mode;
      config["r"] = args.r;
      config["t"] = args.t;
      osc = ffield::oscillation_experiment(q.value(), args.r, args.t);
      result = report::to_json(*osc);
      text << "l_r = " << osc->l_r << "\n"
           << "limit A = " << human(osc->limit_A) << ", final error " << human(osc->final_error_A)
           << "\n"
           << "limit B = " << human(osc->limit_B) << ", final error " << human(osc->final_error_B)
           << "\n"
           << "spread over the last l_r terms = " << human(osc->tail_spread) << "\n";
      break;
    }
  }

  switch (common.format) {
    case Format::kJson:
      emit(dump(report::envelope("ffield", config, common.seed, std::move(result))), common);
      break;
    case Format::kCsv:
      emit(report::csv_header("ffield", config, common.seed) + report::ffield_csv(*osc), common);
      break;
    default:
      emit(text.str(), common);
  }
  return kOk;
}

int run_verify(const VerifyArgs& args, const Common& common) {
  require_format(common, {Format::kJson, Format::kHuman}, "verify");
  verify::Options opts;
  if (args.scope == "quick") {
    opts.scope = verify::Scope::kQuick;
  } else if (args.scope == "full") {
    opts.scope = verify::Scope::kFull;
  } else {
    throw std::invalid_argument("--scope must be quick or full");
  }
  opts.seed = common.seed;
  opts.inject_fault = args.inject_fault;

  Json config;
  config["scope"] = args.scope;
  config["inject_fault"] = args.inject_fault;

  const auto rep = verify::run(opts);
  if (common.format == Format::kJson) {
    Json checks = Json::array();
    for (const auto& c : rep.checks) {
      Json e;
      e["name"] = c.name;
      e["passed"] = c.passed;
      e["cases"] = c.cases;
      e["detail"] = c.detail;
      checks.push_back(std::move(e));
    }
    Json result;
    result["passed"] = rep.passed();
    result["checks"] = std::move(checks);
    emit(dump(report::envelope("verify", config, common.seed, std::move(result))), common);
  } else {
    std::ostringstream out;
    out << "monodyn " << report::version() << " verify scope=" << args.scope
        << " seed=" << common.seed << "\n";
    for (const auto& c : rep.checks) {
      out << (c.passed ? "PASS " : "FAIL ") << c.name << " (" << c.cases << " cases)";
      if (!c.passed) out << ": " << c.detail;
      out << "\n";
    }
    out << (rep.passed() ? "all checks passed" : "verification FAILED") << "\n";
    emit(out.str(), common);
  }
  return rep.passed() ? kOk : kVerificationFailed;
}

}  // namespace monodyn::cli
