#include "monodyn/report.hpp"

#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>

#ifndef MONODYN_VERSION
#define MONODYN_VERSION "0.0.0"
#endif

namespace monodyn::report {

namespace {

Json map_json(const std::map<std::uint64_t, std::uint64_t>& m) {
  Json out = Json::array();
  for (const auto& [k, v] : m) out.push_back(Json::array({k, v}));
  return out;
}

std::map<std::uint64_t, std::uint64_t> map_from_json(const Json& j) {
  std::map<std::uint64_t, std::uint64_t> out;
  for (const auto& pair : j) out[pair.at(0).get<std::uint64_t>()] = pair.at(1).get<std::uint64_t>();
  return out;
}

BigInt integer_from_json(const Json& j) {
  if (j.is_string()) return BigInt(j.get<std::string>());
  if (j.is_number_unsigned()) return BigInt(j.get<std::uint64_t>());
  return BigInt(j.get<std::int64_t>());
}

Json series_json(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(rational_json(x));
  return out;
}

}  // namespace

std::string_view version() { return MONODYN_VERSION; }

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Json integer_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max()) {
    return v.convert_to<std::int64_t>();
  }
  return v.str();
}

Json rational_json(const Rational& v) {
  Json out;
  out["num"] = integer_json(boost::multiprecision::numerator(v));
  out["den"] = integer_json(boost::multiprecision::denominator(v));
  return out;
}

Rational rational_from_json(const Json& j) {
  return Rational(integer_from_json(j.at("num")), integer_from_json(j.at("den")));
}

Json to_json(const formulas::CycleProfile& p) {
  Json out;
  out["q"] = p.q;
  out["n"] = p.n;
  out["q_star"] = p.q_star;
  out["r_hat"] = p.r_hat;
  out["periodic_points"] = map_json(p.per_period);
  out["cycles"] = map_json(p.per_length);
  out["total_periodic"] = p.total_periodic;
  out["total_cycles"] = p.total_cycles;
  return out;
}

Json to_json(const graph::Aggregates& a) {
  Json out;
  out["periodic_points"] = map_json(a.periodic);
  out["cycles"] = map_json(a.cycles);
  out["component_count"] = a.component_count;
  out["periodic_total"] = a.periodic_total;
  return out;
}

Json to_json(const graph::DichotomyReport& d) {
  Json out;
  out["a_in_G"] = d.a_in_G;
  out["formula"] = to_json(d.formula);
  out["brute"] = to_json(d.brute);
  out["formulas_match"] = d.formulas_match;
  out["periodic_total_matches"] = d.periodic_total_matches;
  out["graph_disconnected"] = d.graph_disconnected;
  out["passed"] = d.passed();
  return out;
}

Json to_json(const mean::MeanSweepReport& r) {
  Json out;
  out["n"] = r.n;
  out["s"] = r.s;
  out["r"] = r.r;
  out["t_max"] = r.t_max;
  out["analytic"] = rational_json(r.analytic);
  Json cps = Json::array();
  for (const auto& c : r.checkpoints) {
    Json cp;
    cp["t"] = c.t;
    cp["pi_t"] = c.pi_t;
    cp["empirical_sum"] = c.empirical_sum;
    cp["empirical_mean"] = rational_json(c.empirical_mean);
    cps.push_back(std::move(cp));
  }
  out["checkpoints"] = std::move(cps);
  out["final_abs_error"] = rational_json(r.final_abs_error);
  return out;
}

Json to_json(const mean::DivergenceSeries& s) {
  Json out;
  out["r"] = s.r;
  out["term"] = series_json(s.term);
  out["periodic_sum"] = series_json(s.periodic_sum);
  out["cycle_sum"] = series_json(s.cycle_sum);
  return out;
}

Json to_json(const ffield::FFDensityReport& r) {
  Json out;
  out["q"] = r.q;
  out["r"] = r.r;
  out["l_r"] = r.l_r;
  out["t_max"] = r.t_max;
  out["limit_A"] = rational_json(r.limit_A);
  out["limit_B"] = rational_json(r.limit_B);
  out["final_error_A"] = rational_json(r.final_error_A);
  out["final_error_B"] = rational_json(r.final_error_B);
  out["tail_monotone_A"] = r.tail_monotone_A;
  out["tail_monotone_B"] = r.tail_monotone_B;
  out["tail_spread"] = rational_json(r.tail_spread);
  Json series = Json::array();
  for (const auto& pt : r.series) {
    Json e;
    e["t"] = pt.t;
    e["pi_K"] = integer_json(pt.pi_K);
    e["C_r"] = integer_json(pt.C_r);
    e["ratio"] = rational_json(pt.ratio);
    e["tag"] = std::string(1, static_cast<char>(pt.tag));
    series.push_back(std::move(e));
  }
  out["series"] = std::move(series);
  return out;
}

Json export_json(const graph::OrbitStructure& st) {
  Json out;
  out["q"] = st.q;
  out["successor"] = st.successor;
  Json nodes = Json::array();
  for (const auto& n : st.nodes) {
    Json e;
    e["component"] = n.component;
    if (n.cycle == graph::kNoCycle) {
      e["cycle"] = nullptr;
    } else {
      e["cycle"] = n.cycle;
    }
    e["tail_length"] = n.tail_length;
    nodes.push_back(std::move(e));
  }
  out["nodes"] = std::move(nodes);
  Json cycles = Json::array();
  for (const auto& c : st.cycles) cycles.push_back(c.members);
  out["cycles"] = std::move(cycles);
  out["aggregates"] = to_json(st.aggregates);
  return out;
}

graph::OrbitStructure parse_orbit_json(const Json& j) {
  auto successor = j.at("successor").get<std::vector<graph::NodeIndex>>();
  if (successor.size() != j.at("q").get<std::uint64_t>()) {
    throw std::invalid_argument("parse_orbit_json: successor length differs from q");
  }
  for (auto v : successor) {
    if (v >= successor.size()) throw std::invalid_argument("parse_orbit_json: bad successor");
  }
  graph::OrbitStructure st = graph::decompose(std::move(successor));

  const auto& nodes = j.at("nodes");
  if (nodes.size() != st.nodes.size()) throw std::invalid_argument("parse_orbit_json: node count");
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const auto& e = nodes[i];
    const auto cycle = e.at("cycle").is_null() ? graph::kNoCycle
                                               : e.at("cycle").get<graph::NodeIndex>();
    if (e.at("component").get<graph::NodeIndex>() != st.nodes[i].component ||
        cycle != st.nodes[i].cycle ||
        e.at("tail_length").get<std::uint32_t>() != st.nodes[i].tail_length) {
      throw std::invalid_argument("parse_orbit_json: node " + std::to_string(i) +
                                  " disagrees with its successor data");
    }
  }
  const auto& cycles = j.at("cycles");
  if (cycles.size() != st.cycles.size()) throw std::invalid_argument("parse_orbit_json: cycles");
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    if (cycles[i].get<std::vector<graph::NodeIndex>>() != st.cycles[i].members) {
      throw std::invalid_argument("parse_orbit_json: cycle " + std::to_string(i) + " differs");
    }
  }
  const auto& agg = j.at("aggregates");
  graph::Aggregates parsed;
  parsed.periodic = map_from_json(agg.at("periodic_points"));
  parsed.cycles = map_from_json(agg.at("cycles"));
  parsed.component_count = agg.at("component_count").get<std::uint64_t>();
  parsed.periodic_total = agg.at("periodic_total").get<std::uint64_t>();
  if (!(parsed == st.aggregates)) throw std::invalid_argument("parse_orbit_json: aggregates");
  return st;
}

Json envelope(std::string_view command, const Json& config, std::uint64_t seed, Json result) {
  Json out;
  out["schema"] = kSchema;
  out["version"] = version();
  out["command"] = command;
  out["config"] = config;
  out["input_hash"] = fnv1a_hex(config.dump());
  out["seed"] = seed;
  out["result"] = std::move(result);
  return out;
}

std::string csv_header(std::string_view command, const Json& config, std::uint64_t seed) {
  std::ostringstream out;
  out << "# schema: " << kSchema << '\n'
      << "# version: " << version() << '\n'
      << "# command: " << command << '\n'
      << "# config: " << config.dump() << '\n'
      << "# input_hash: " << fnv1a_hex(config.dump()) << '\n'
      << "# seed: " << seed << '\n';
  return out.str();
}

std::string sweep_csv(const mean::MeanSweepReport& r) {
  std::ostringstream out;
  const auto an = boost::multiprecision::numerator(r.analytic);
  const auto ad = boost::multiprecision::denominator(r.analytic);
  out << "t,pi_t,empirical_num,empirical_den,analytic_num,analytic_den\n";
  for (const auto& c : r.checkpoints) {
    out << c.t << ',' << c.pi_t << ',' << boost::multiprecision::numerator(c.empirical_mean)
        << ',' << boost::multiprecision::denominator(c.empirical_mean) << ',' << an << ',' << ad
        << '\n';
  }
  return out.str();
}

std::string ffield_csv(const ffield::FFDensityReport& r) {
  std::ostringstream out;
  out << "t,pi_K,C_r,ratio_num,ratio_den,subsequence_tag\n";
  for (const auto& pt : r.series) {
    out << pt.t << ',' << pt.pi_K << ',' << pt.C_r << ','
        << boost::multiprecision::numerator(pt.ratio) << ','
        << boost::multiprecision::denominator(pt.ratio) << ',' << static_cast<char>(pt.tag)
        << '\n';
  }
  return out.str();
}

}  // namespace monodyn::report
