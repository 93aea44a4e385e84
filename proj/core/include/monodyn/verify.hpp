#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "monodyn/finite_field.hpp"

// Oracle-equivalence sweeps: closed forms against the brute-force engine,
// plus the exact mean-value and function-field identities.

namespace monodyn::verify {

using u64 = std::uint64_t;

enum class Scope { kQuick, kFull };

struct Options {
  Scope scope = Scope::kQuick;
  u64 seed = 1;
  /// Adds one fixed point to every closed-form profile before comparing.
  /// Used to check that the sweeps detect a wrong formula.
  bool inject_fault = false;
};

struct CheckResult {
  std::string name;
  bool passed = true;
  u64 cases = 0;
  std::string detail;  ///< first failure, empty on success
};

struct Report {
  Scope scope = Scope::kQuick;
  u64 seed = 0;
  std::vector<CheckResult> checks;
  [[nodiscard]] bool passed() const;
};

/// All prime powers in [2, bound], ascending.
[[nodiscard]] std::vector<u64> prime_powers_up_to(u64 bound);

/// Field-size bound and random coefficients per field for each scope.
[[nodiscard]] u64 field_bound(Scope scope);
[[nodiscard]] unsigned coefficients_per_field(Scope scope);

[[nodiscard]] Report run(const Options& options);

[[nodiscard]] const char* scope_name(Scope scope);

}  // namespace monodyn::verify
