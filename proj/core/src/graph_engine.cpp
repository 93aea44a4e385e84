#include "monodyn/graph_engine.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>

#include "monodyn/errors.hpp"

namespace monodyn::graph {

namespace {

enum class Mark : std::uint8_t { kUnvisited, kOnPath, kResolved };

}  // namespace

DynSystem::DynSystem(ff::FieldSpec field, u64 n) : DynSystem(field, n, field.one()) {}

DynSystem::DynSystem(ff::FieldSpec field, u64 n, ff::FieldElement a)
    : field_(std::move(field)), n_(n), a_(a) {
  if (n_ < 2) throw std::domain_error("DynSystem: exponent must be at least 2");
  if (a_.degree_bound() != field_.s()) {
    throw std::domain_error("DynSystem: coefficient does not belong to the field");
  }
  if (a_.is_zero()) throw std::domain_error("DynSystem: coefficient a must be nonzero");
}

ff::FieldElement DynSystem::apply(const ff::FieldElement& x) const {
  return field_.mul(a_, field_.pow(x, n_));
}

OrbitStructure decompose(std::vector<NodeIndex> successor) {
  const std::size_t size = successor.size();
  OrbitStructure st;
  st.q = size;
  st.nodes.assign(size, NodeInfo{});
  std::vector<Mark> mark(size, Mark::kUnvisited);
  std::vector<NodeIndex> path;

  for (std::size_t start = 0; start < size; ++start) {
    if (mark[start] != Mark::kUnvisited) continue;
    path.clear();
    auto v = static_cast<NodeIndex>(start);
    while (mark[v] == Mark::kUnvisited) {
      mark[v] = Mark::kOnPath;
      path.push_back(v);
      if (successor[v] >= size) {
        throw std::out_of_range("decompose: successor index out of range");
      }
      v = successor[v];
    }
    // Either v closes a new cycle on the current path, or it was resolved
    // earlier and the path is a tail hanging off an existing component.
    std::size_t tail_end = path.size();
    if (mark[v] == Mark::kOnPath) {
      std::size_t pos = path.size();
      while (path[pos - 1] != v) --pos;
      --pos;
      const auto cycle_id = static_cast<NodeIndex>(st.cycles.size());
      const auto component = cycle_id;
      Cycle c;
      c.members.assign(path.begin() + static_cast<std::ptrdiff_t>(pos), path.end());
      for (NodeIndex m : c.members) {
        st.nodes[m] = NodeInfo{component, cycle_id, 0};
        mark[m] = Mark::kResolved;
      }
      st.cycles.push_back(std::move(c));
      tail_end = pos;
    }
    for (std::size_t i = tail_end; i-- > 0;) {
      const NodeIndex u = path[i];
      const NodeInfo& next = st.nodes[successor[u]];
      st.nodes[u] = NodeInfo{next.component, kNoCycle, next.tail_length + 1};
      mark[u] = Mark::kResolved;
    }
  }

  auto& agg = st.aggregates;
  for (const auto& c : st.cycles) {
    agg.cycles[c.length()] += 1;
    agg.periodic[c.length()] += c.length();
    agg.periodic_total += c.length();
  }
  agg.component_count = st.cycles.size();
  st.successor = std::move(successor);
  return st;
}

OrbitStructure build(const DynSystem& sys) {
  const auto& field = sys.field();
  const u64 q = field.q();
  if (q > ff::kMaxFieldSize) throw ResourceLimitError("build: field exceeds 2^22 elements");
  std::vector<NodeIndex> successor(q);
  for (u64 i = 0; i < q; ++i) {
    successor[i] = static_cast<NodeIndex>(field.index_of(sys.apply(field.element_at(i))));
  }
  return decompose(std::move(successor));
}

bool is_connected(const OrbitStructure& st) { return st.aggregates.component_count == 1; }

bool star_connected(const OrbitStructure& st) {
  if (st.q < 2) return false;
  const NodeIndex first = st.nodes[1].component;
  for (std::size_t i = 2; i < st.q; ++i) {
    if (st.nodes[i].component != first) return false;
  }
  return true;
}

bool star_strongly_connected(const OrbitStructure& st) {
  if (st.q < 2) return false;
  for (std::size_t i = 1; i < st.q; ++i) {
    if (st.nodes[i].cycle == kNoCycle) return false;
  }
  const NodeIndex c = st.nodes[1].cycle;
  return st.cycles[c].length() == st.q - 1;
}

OrderCheckReport check_order_characterization(const DynSystem& sys, const OrbitStructure& st) {
  if (!sys.is_pure_power()) {
    throw std::domain_error(
        "check_order_characterization: only valid for a = 1 (fails for general a)");
  }
  const auto& field = sys.field();
  const formulas::FieldOrder q(field.q());
  const u64 qs = formulas::q_star(q, sys.n());
  OrderCheckReport report;
  std::vector<u64> order(st.q, 0);
  for (u64 i = 1; i < st.q; ++i) order[i] = field.element_order(field.element_at(i));

  auto fail = [&](u64 idx, std::string why) {
    report.passed = false;
    report.counterexample = idx;
    report.detail = std::move(why);
  };
  for (u64 i = 1; i < st.q && report.passed; ++i) {
    ++report.checked;
    const bool periodic = st.nodes[i].tail_length == 0;
    const bool divides = qs % order[i] == 0;
    if (periodic != divides) {
      fail(i, "periodicity disagrees with ord | q*(n)");
      break;
    }
    if (!periodic) continue;
    const auto& cycle = st.cycles[st.nodes[i].cycle];
    const u64 expected = nt::multiplicative_order(sys.n() % order[i], order[i]);
    if (cycle.length() != expected) {
      fail(i, "cycle length " + std::to_string(cycle.length()) + " != ord_" +
                  std::to_string(order[i]) + "(n) = " + std::to_string(expected));
      break;
    }
    for (NodeIndex m : cycle.members) {
      if (order[m] != order[i]) {
        fail(i, "cycle members have different orders");
        break;
      }
    }
  }
  return report;
}

bool in_G_m(const ff::FieldSpec& field, const ff::FieldElement& a, u64 m) {
  if (a.is_zero()) throw std::domain_error("in_G_m: a must be nonzero");
  if (m == 0) throw std::domain_error("in_G_m: m must be positive");
  const u64 group = field.q() - 1;
  const u64 d = std::gcd(m, group);
  return field.pow(a, group / d) == field.one();
}

bool has_nonzero_fixed(const DynSystem& sys) { return in_G_m(sys.field(), sys.a(), sys.n() - 1); }

bool matches(const Aggregates& brute, const formulas::CycleProfile& profile) {
  return brute.periodic == profile.per_period && brute.cycles == profile.per_length &&
         brute.component_count == profile.total_cycles &&
         brute.periodic_total == profile.total_periodic;
}

DichotomyReport dichotomy_report(const DynSystem& sys, const OrbitStructure& st) {
  DichotomyReport r;
  const formulas::FieldOrder q(sys.field().q());
  r.a_in_G = has_nonzero_fixed(sys);
  r.formula = formulas::profile(q, sys.n());
  r.brute = st.aggregates;
  r.formulas_match = matches(st.aggregates, r.formula);
  r.periodic_total_matches = st.aggregates.periodic_total == r.formula.q_star + 1;
  r.graph_disconnected = !is_connected(st);
  return r;
}

std::string export_dot(const OrbitStructure& st) {
  std::ostringstream out;
  out << "digraph S {\n";
  for (std::size_t i = 0; i < st.q; ++i) {
    const auto& info = st.nodes[i];
    out << "  " << i << " [component=" << info.component;
    if (info.cycle != kNoCycle) {
      out << ", cycle=" << info.cycle << ", shape=doublecircle";
    } else {
      out << ", tail=" << info.tail_length;
    }
    out << "];\n";
  }
  for (std::size_t i = 0; i < st.q; ++i) out << "  " << i << " -> " << st.successor[i] << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace monodyn::graph
