#include "monodyn/verify.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "monodyn/function_field.hpp"
#include "monodyn/graph_engine.hpp"
#include "monodyn/mean_values.hpp"
#include "monodyn/monomial_formulas.hpp"
#include "monodyn/numtheory.hpp"

namespace monodyn::verify {

namespace {

constexpr u64 kMinExponent = 2;
constexpr u64 kMaxExponent = 16;

std::string system_name(u64 q, u64 n) {
  return "q=" + std::to_string(q) + " n=" + std::to_string(n);
}

CheckResult named(std::string name) {
  CheckResult c;
  c.name = std::move(name);
  return c;
}

void record_failure(CheckResult& c, std::string detail) {
  if (c.passed) c.detail = std::move(detail);
  c.passed = false;
}

formulas::CycleProfile expected_profile(const formulas::FieldOrder& q, u64 n, bool fault) {
  auto p = formulas::profile(q, n);
  if (fault) {
    p.per_period[1] += 1;
    p.per_length[1] += 1;
    p.total_periodic += 1;
    p.total_cycles += 1;
  }
  return p;
}

}  // namespace

bool Report::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

const char* scope_name(Scope scope) { return scope == Scope::kQuick ? "quick" : "full"; }

std::vector<u64> prime_powers_up_to(u64 bound) {
  std::vector<u64> out;
  if (bound < 2) return out;
  for (u64 p : nt::primes_up_to(bound)) {
    for (u64 q = p; q <= bound; q *= p) {
      out.push_back(q);
      if (q > bound / p) break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

u64 field_bound(Scope scope) { return scope == Scope::kQuick ? 400 : 3000; }

unsigned coefficients_per_field(Scope scope) { return scope == Scope::kQuick ? 3 : 20; }

Report run(const Options& options) {
  Report rep;
  rep.scope = options.scope;
  rep.seed = options.seed;
  std::mt19937_64 rng(options.seed);

  CheckResult profiles = named("formula_vs_brute_force");
  CheckResult dichotomy = named("coefficient_dichotomy");
  CheckResult structure = named("graph_structure");
  CheckResult orders = named("order_characterization");

  for (u64 qv : prime_powers_up_to(field_bound(options.scope))) {
    const formulas::FieldOrder q(qv);
    const ff::FieldSpec field = ff::make_field_of_order(qv);
    for (u64 n = kMinExponent; n <= kMaxExponent; ++n) {
      const graph::DynSystem sys(field, n);
      const auto st = graph::build(sys);

      ++profiles.cases;
      if (!graph::matches(st.aggregates, expected_profile(q, n, options.inject_fault))) {
        record_failure(profiles, system_name(qv, n) + ": profile differs from brute force");
      }

      ++structure.cases;
      const u64 qs = formulas::q_star(q, n);
      if (graph::is_connected(st)) {
        record_failure(structure, system_name(qv, n) + ": S(f) is weakly connected");
      }
      if (graph::star_connected(st) != (qs == 1)) {
        record_failure(structure, system_name(qv, n) + ": S(f*) connectivity vs q*(n) = 1");
      }
      // One vertex with a loop is strongly connected, so q = 2 is excluded.
      if (qv > 2 && graph::star_strongly_connected(st)) {
        record_failure(structure, system_name(qv, n) + ": S(f*) strongly connected");
      }
      const bool fps = formulas::is_fixed_point_system(q, n);
      const bool all_fixed = st.aggregates.cycles.size() == 1 && st.aggregates.cycles.count(1);
      if (fps != all_fixed || fps != (formulas::r_hat(q, n) == 1)) {
        record_failure(structure, system_name(qv, n) + ": fixed point system criteria differ");
      }

      ++orders.cases;
      const auto oc = graph::check_order_characterization(sys, st);
      if (!oc.passed) record_failure(orders, system_name(qv, n) + ": " + oc.detail);

      std::uniform_int_distribution<u64> pick(1, qv - 1);
      for (unsigned k = 0; k < coefficients_per_field(options.scope); ++k) {
        const u64 ai = pick(rng);
        const graph::DynSystem gsys(field, n, field.element_at(ai));
        const auto gst = graph::build(gsys);
        ++dichotomy.cases;
        if (!graph::dichotomy_report(gsys, gst).passed()) {
          record_failure(dichotomy, system_name(qv, n) + " a=" + std::to_string(ai) +
                                        ": dichotomy violated");
        }
      }
    }
  }

  CheckResult means = named("mean_value_identities");
  const u64 r_max = options.scope == Scope::kQuick ? 4 : 6;
  for (u64 r = 1; r <= r_max; ++r) {
    for (u64 s = 1; s <= 4; ++s) {
      for (u64 n = 2; n <= 10; ++n) {
        ++means.cases;
        if (mean::dirichlet_D(r, s, n) != mean::analytic_N(r, s, n)) {
          record_failure(means, "r=" + std::to_string(r) + " s=" + std::to_string(s) +
                                    " n=" + std::to_string(n) + ": density route differs");
        }
      }
    }
  }
  const u64 m_max = options.scope == Scope::kQuick ? 2000 : 10000;
  for (u64 m = 1; m <= m_max; ++m) {
    ++means.cases;
    if (mean::analytic_I(m, 1) != nt::tau(m)) {
      record_failure(means, "m=" + std::to_string(m) + ": I(m, 1) != tau(m)");
    }
  }

  CheckResult ff_checks = named("function_field_identities");
  for (u64 q : {2, 3, 4, 5, 7, 8, 9}) {
    ++ff_checks.cases;
    if (ffield::dirichlet_D_K(q, 2, 1) != 2) {
      record_failure(ff_checks, "q=" + std::to_string(q) + ": D(1, K) != 2 for n = 2");
    }
    for (u64 D = 1; D <= 20; ++D) {
      ++ff_checks.cases;
      BigInt sum = 0;
      for (u64 d : nt::divisors(D)) sum += BigInt(d) * ffield::irreducible_count_exact(q, d);
      if (sum != boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(D))) {
        record_failure(ff_checks, "q=" + std::to_string(q) + " D=" + std::to_string(D) +
                                      ": necklace identity fails");
      }
    }
  }

  rep.checks = {profiles, dichotomy, structure, orders, means, ff_checks};
  return rep;
}

}  // namespace monodyn::verify
