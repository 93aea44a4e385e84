#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "monodyn/finite_field.hpp"
#include "monodyn/monomial_formulas.hpp"

namespace monodyn::graph {

using u64 = std::uint64_t;
using NodeIndex = std::uint32_t;

inline constexpr NodeIndex kNoCycle = static_cast<NodeIndex>(-1);

/// The map x -> a * x^n on an explicit field.
class DynSystem {
 public:
  /// a defaults to one. Throws std::domain_error for n < 2 or a == 0.
  DynSystem(ff::FieldSpec field, u64 n);
  DynSystem(ff::FieldSpec field, u64 n, ff::FieldElement a);

  [[nodiscard]] const ff::FieldSpec& field() const { return field_; }
  [[nodiscard]] u64 n() const { return n_; }
  [[nodiscard]] const ff::FieldElement& a() const { return a_; }
  [[nodiscard]] bool is_pure_power() const { return a_ == field_.one(); }

  [[nodiscard]] ff::FieldElement apply(const ff::FieldElement& x) const;

 private:
  ff::FieldSpec field_;
  u64 n_;
  ff::FieldElement a_;
};

struct NodeInfo {
  NodeIndex component = 0;
  NodeIndex cycle = kNoCycle;  ///< index into OrbitStructure::cycles
  std::uint32_t tail_length = 0;  ///< steps to the nearest periodic point
};

struct Cycle {
  std::vector<NodeIndex> members;  ///< in orbit order, starting at the first one found
  [[nodiscard]] u64 length() const { return members.size(); }
};

struct Aggregates {
  std::map<u64, u64> periodic;  ///< r -> number of points of exact period r
  std::map<u64, u64> cycles;    ///< r -> number of r-cycles
  u64 component_count = 0;
  u64 periodic_total = 0;

  friend bool operator==(const Aggregates&, const Aggregates&) = default;
};

/// Functional-graph decomposition of S(f). Immutable once built.
struct OrbitStructure {
  u64 q = 0;
  std::vector<NodeIndex> successor;
  std::vector<NodeInfo> nodes;
  std::vector<Cycle> cycles;
  Aggregates aggregates;
};

/// Evaluates f on every element and decomposes the graph in one pass.
/// Component ids follow the order in which cycles are found, scanning
/// indices upward from 0.
[[nodiscard]] OrbitStructure build(const DynSystem& sys);

/// Decomposes an arbitrary successor array (values must be < size).
[[nodiscard]] OrbitStructure decompose(std::vector<NodeIndex> successor);

/// Weak connectivity of S(f).
[[nodiscard]] bool is_connected(const OrbitStructure& st);
/// Weak connectivity of S(f*), the graph with vertex 0 removed.
[[nodiscard]] bool star_connected(const OrbitStructure& st);
/// Strong connectivity of S(f*): one cycle through every nonzero element.
[[nodiscard]] bool star_strongly_connected(const OrbitStructure& st);

struct OrderCheckReport {
  bool passed = true;
  u64 checked = 0;
  std::optional<u64> counterexample;  ///< element index
  std::string detail;
};

/// For a = 1: alpha is periodic iff ord(alpha) | q*(n); its cycle has length
/// ord_{ord(alpha)}(n); all members of a cycle share ord(alpha).
/// Throws std::domain_error for a != 1, where the statement is false.
[[nodiscard]] OrderCheckReport check_order_characterization(const DynSystem& sys,
                                                            const OrbitStructure& st);

/// a^((q-1)/gcd(n-1, q-1)) == 1: whether f has a nonzero fixed point.
[[nodiscard]] bool has_nonzero_fixed(const DynSystem& sys);

/// Membership of a in G_m, the subgroup of m-th powers of F_q^*.
[[nodiscard]] bool in_G_m(const ff::FieldSpec& field, const ff::FieldElement& a, u64 m);

struct DichotomyReport {
  bool a_in_G = false;  ///< a in G_{n-1}
  formulas::CycleProfile formula;
  Aggregates brute;
  /// Only meaningful when a_in_G; otherwise the closed forms are not expected to apply.
  bool formulas_match = false;
  bool periodic_total_matches = false;  ///< periodic_total == q*(n) + 1, for every a
  bool graph_disconnected = false;      ///< S(f) splits, {0} is always its own orbit
  [[nodiscard]] bool passed() const {
    return periodic_total_matches && graph_disconnected && (!a_in_G || formulas_match);
  }
};

[[nodiscard]] DichotomyReport dichotomy_report(const DynSystem& sys, const OrbitStructure& st);

/// True when brute-force aggregates and the closed-form profile agree
/// on every period, every cycle count and the component count.
[[nodiscard]] bool matches(const Aggregates& brute, const formulas::CycleProfile& profile);

/// Graphviz digraph, one edge per node, cycle nodes drawn doubled.
[[nodiscard]] std::string export_dot(const OrbitStructure& st);

}  // namespace monodyn::graph
