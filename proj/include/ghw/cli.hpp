#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ghw {

enum ExitCode : int {
  kExitOk = 0,
  kExitParse = 2,
  kExitResource = 3,
  kExitMismatch = 4,
  kExitNotApplicable = 5,
};

struct RunReport {
  std::uint32_t q = 0;  // field order
  std::uint32_t e = 1;
  int m = 0;
  std::string sets;
  bool complement = false;
  std::int64_t n = 0;
  int k = 0;
  std::vector<std::int64_t> hierarchy;
  std::vector<std::string> provenance;
  std::string method;
  std::int64_t elapsed_ms = 0;
  std::optional<std::vector<std::string>> witnesses;

  friend bool operator==(const RunReport&, const RunReport&) = default;
};

/// Canonical JSON: sorted keys, integers only.
std::string to_json(const RunReport& r);
/// Throws ParseError on malformed input.
RunReport report_from_json(const std::string& text);
/// Header "r,d_r,provenance,method", one line per r.
std::string to_csv(const RunReport& r);
std::string to_text(const RunReport& r);

/// A worked example with its published parameters.
struct GoldenExample {
  std::string id;
  std::uint32_t q = 2;
  int m = 0;
  std::string sets;
  bool complement = false;
  std::int64_t n = 0;
  int k = 0;
  std::vector<std::int64_t> hierarchy;
  std::string table;  // expected closed form; empty when none applies
};
const std::vector<GoldenExample>& golden_examples();

/// Entry point shared by the binary and the tests. args excludes argv[0].
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ghw
