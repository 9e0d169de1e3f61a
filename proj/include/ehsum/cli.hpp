#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ehsum/verifier.hpp"

namespace ehsum {

struct CliConfig {
  enum class Command { None, List, Verify, Suite, CrossCheck };
  Command command = Command::None;
  std::string identity;          // verify
  std::string suite = "all";     // suite
  std::string cross_name = "all";  // cross-check
  int trials = 50;
  bool trials_given = false;
  std::uint64_t seed = 42;
  long precision_bits = 256;
  int rank_lo = 1;
  int rank_hi = 3;
  std::string size_spec;  // integer or comma-separated bounds; empty = default
  double nome_magnitude = 0.3;
  std::string output = "text";  // text | json
  std::string out_path;
  std::string tolerance;  // decimal string; empty = 2^-(prec/2)
  bool p_zero = false;
  bool no_timing = false;  // zero wall_time_ms in JSON for byte-stable output
  int threads = 0;
};

// Throws UsageError on malformed input (including --help, which carries the
// usage text as its message with exit handled by the caller).
CliConfig parse_args(const std::vector<std::string>& args);

// Exit status: 0 all reports passed, 1 verification failure, 3 internal error.
int run_cli(const CliConfig& cfg);

// Full front end: 2 on usage errors, otherwise as run_cli.
int cli_main(int argc, char** argv);

VerifyOptions cli_verify_options(const CliConfig& cfg);

}  // namespace ehsum
