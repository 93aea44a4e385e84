#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace monodyn::cli {

enum class Format { kJson, kCsv, kDot, kHuman };

struct Common {
  Format format = Format::kJson;
  std::optional<std::string> output;
  unsigned threads = 1;
  std::uint64_t seed = 1;
};

struct AnalyzeArgs {
  std::uint64_t q = 0;
  std::uint64_t n = 0;
  std::optional<std::uint64_t> a;  ///< element index
  bool brute = false;
};

struct GraphArgs {
  std::uint64_t q = 0;
  std::uint64_t n = 0;
  std::optional<std::uint64_t> a;
};

struct SweepArgs {
  std::uint64_t n = 0;
  std::uint64_t r = 1;
  std::uint64_t s = 1;
  std::uint64_t t = 0;
  std::vector<std::uint64_t> checkpoints;
};

enum class FfieldMode { kDensity, kDmean, kOscillate };

struct FfieldArgs {
  std::uint64_t q = 0;
  FfieldMode mode = FfieldMode::kDensity;
  std::uint64_t r = 1;
  std::uint64_t n = 0;
  std::uint64_t t = 0;
};

struct VerifyArgs {
  std::string scope = "quick";
  bool inject_fault = false;
};

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kVerificationFailed = 1;
inline constexpr int kInvalidInput = 2;
inline constexpr int kResourceCap = 3;

// Each command writes its output and returns an exit code. Exceptions from
// the library propagate to the caller, which maps them to exit codes.
int run_analyze(const AnalyzeArgs& args, const Common& common);
int run_graph(const GraphArgs& args, const Common& common);
int run_sweep(const SweepArgs& args, const Common& common);
int run_ffield(const FfieldArgs& args, const Common& common);
int run_verify(const VerifyArgs& args, const Common& common);

}  // namespace monodyn::cli
