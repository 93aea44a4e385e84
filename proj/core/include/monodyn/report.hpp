#pragma once

#include <cstdint>
#include <nlohmann/json.hpp>
#include <string>
#include <string_view>

#include "monodyn/exact.hpp"
#include "monodyn/function_field.hpp"
#include "monodyn/graph_engine.hpp"
#include "monodyn/mean_values.hpp"
#include "monodyn/monomial_formulas.hpp"

// Machine-readable output. JSON keeps insertion order so reruns are
// byte-identical; rationals are {"num", "den"} and integers that do not fit
// in 64 bits are decimal strings. No floating point is ever written.

namespace monodyn::report {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kSchema = "monodyn/1";

[[nodiscard]] std::string_view version();

/// 64-bit FNV-1a, rendered as 16 lowercase hex digits.
[[nodiscard]] std::string fnv1a_hex(std::string_view bytes);

[[nodiscard]] Json integer_json(const BigInt& v);
[[nodiscard]] Json rational_json(const Rational& v);
[[nodiscard]] Rational rational_from_json(const Json& j);

[[nodiscard]] Json to_json(const formulas::CycleProfile& p);
[[nodiscard]] Json to_json(const graph::Aggregates& a);
[[nodiscard]] Json to_json(const graph::DichotomyReport& d);
[[nodiscard]] Json to_json(const mean::MeanSweepReport& r);
[[nodiscard]] Json to_json(const mean::DivergenceSeries& s);
[[nodiscard]] Json to_json(const ffield::FFDensityReport& r);

/// Full structure: successor, per-node data, cycles and aggregates.
[[nodiscard]] Json export_json(const graph::OrbitStructure& st);

/// Rebuilds a structure from export_json output. The successor array is
/// decomposed again and must reproduce the stored node data, cycles and
/// aggregates; otherwise std::invalid_argument.
[[nodiscard]] graph::OrbitStructure parse_orbit_json(const Json& j);

/// {"schema", "version", "command", "config", "input_hash", "seed", "result"}.
/// input_hash covers the canonical config dump.
[[nodiscard]] Json envelope(std::string_view command, const Json& config, std::uint64_t seed,
                            Json result);

/// "# key: value" header lines shared by the CSV writers.
[[nodiscard]] std::string csv_header(std::string_view command, const Json& config,
                                     std::uint64_t seed);

/// Columns t, pi_t, empirical_num, empirical_den, analytic_num, analytic_den.
[[nodiscard]] std::string sweep_csv(const mean::MeanSweepReport& r);

/// Columns t, pi_K, C_r, ratio_num, ratio_den, subsequence_tag.
[[nodiscard]] std::string ffield_csv(const ffield::FFDensityReport& r);

}  // namespace monodyn::report
