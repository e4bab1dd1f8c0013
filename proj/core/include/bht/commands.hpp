#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace bht {

// Exit-code protocol shared with shell harnesses:
//   0 success / biharmonic verdict
//   1 inadmissible parameters or unknown identifiers
//   2 no proper solutions
//   3 not-biharmonic verdict (or a non-negative stability value)
//   4 inconclusive verdict
//   5 table endorsement differs from the stored rows
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitNoProper = 2;
inline constexpr int kExitNotBiharmonic = 3;
inline constexpr int kExitInconclusive = 4;
inline constexpr int kExitTableMismatch = 5;

struct CommandResult {
  int exit_code = 0;
  std::string output;  // rendered document (json, csv, or md)
};

struct SolveSpec {
  std::string family;
  int n = 0;
  std::optional<int> p, q;
  std::optional<std::string> branch;
  std::string format = "json";
};

struct VerifySpec {
  std::string family;
  int n = 0;
  std::optional<int> p, q;
  std::optional<std::vector<double>> radii;  // a_i (or r, s); renormalized onto the sphere
  std::vector<std::string> oracles;          // default: every applicable oracle
  std::optional<std::string> branch;
  std::uint64_t seed = 12345;
  int samples = 10;
  std::optional<double> tolerance;  // overrides the pass tolerance
  std::string format = "json";
};

struct TableSpec {
  std::string id;
  std::uint64_t seed = 12345;
  int samples = 10;
  std::optional<double> tolerance;
  std::string format = "json";
};

struct StabilitySpec {
  int n = 0, p = 0, q = 0;
  std::optional<std::string> branch;
  std::uint64_t seed = 12345;
  std::string format = "json";
};

CommandResult cmd_solve(const SolveSpec& spec);
CommandResult cmd_verify(const VerifySpec& spec);
CommandResult cmd_table(const TableSpec& spec);
CommandResult cmd_stability(const StabilitySpec& spec);

}  // namespace bht
