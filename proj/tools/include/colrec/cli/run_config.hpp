#pragma once

#include <colrec/gamma.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace colrec::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBudget = 3;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown by parse_run_config for --help; carries the rendered help text.
class HelpRequested : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;              // poset, matrix, gamma, verify, chromatic, examples
  int v = 3;
  std::string group = "Z5";
  std::string allowed = "interval:1";
  std::string method = "auto";      // auto, brute, cycle, fourier
  std::string format = "json";      // json, tsv
  std::uint64_t budget = kDefaultWorkBudget;
  bool complete_first = false;      // --paper-order
  std::string matrix = "M";         // zeta, mobius, J, Jinv, M
  std::optional<std::string> r;
  bool blocks = false;
  bool errata = false;
  bool timing = false;
  int example = 1;
  std::optional<std::string> edges;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

/// Parses arguments after the program name. Group, allowed-set and r values
/// are brought to canonical spelling. Throws UsageError or HelpRequested.
RunConfig parse_run_config(const std::vector<std::string>& args);

/// Argument list that parses back to `config`; only options relevant to the
/// command are emitted, defaults included.
std::vector<std::string> render_run_config(const RunConfig& config);

}  // namespace colrec::cli
