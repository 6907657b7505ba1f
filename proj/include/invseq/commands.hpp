#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "invseq/bigint.hpp"
#include "invseq/oeis.hpp"
#include "invseq/rules.hpp"
#include "invseq/sequence.hpp"

namespace invseq {

enum class CountMethod { Brute, Tree, Rule, Recurrence, Series };
enum class OutputFormat { Table, Json, Csv };

CountMethod parse_count_method(std::string_view name);
std::string to_string(CountMethod method);

/// A class given on the command line: a pattern set ("201,210", "none") or a
/// rule name ("Omega120prime", "Omega0k:4").
struct ClassSpec {
  std::string descriptor;
  PatternSet patterns;
  std::optional<RuleId> rule;  // set when the class was named by its rule
};

ClassSpec parse_class(std::string_view text);

struct CountReport {
  std::string descriptor;
  CountMethod method = CountMethod::Rule;
  std::size_t n_max = 0;
  CountTable counts;                // n_max + 1 entries
  std::optional<CountTable> b;      // b_0..b_{n_max+1}, recurrence method only
  double elapsed_seconds = 0;
};

inline constexpr std::size_t kBruteLimit = 11;

/// Throws UnsupportedCombination when the method cannot count the class and
/// LimitExceeded past a method's size limit.
CountReport cmd_count(const ClassSpec& cls, CountMethod method, std::size_t n_max, bool with_b = false);

std::string render(const CountReport& report, OutputFormat format);

enum class VerifySuite { Closure, Rules, Sites, BTable, Gf, All };

VerifySuite parse_suite(std::string_view name);

struct CheckResult {
  std::string suite;
  std::string name;
  std::string anchor;  // the statement under test
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool ok() const noexcept;
};

/// Failures are recorded, never thrown.
VerifyReport cmd_verify(VerifySuite suite, std::size_t n_max);

std::string render(const VerifyReport& report, OutputFormat format);

/// Coefficients of a generating function: "A201210", "F010102", "a_lk",
/// "b_lk". Rationals print as p/q.
std::string cmd_series(std::string_view gf, int order, OutputFormat format);

enum class TreeFormat { Text, Dot };

/// The restricted left-growing tree, or the modified tree for {010,102}.
/// Throws NotClosedUnderTree for other classes.
std::string cmd_tree(const PatternSet& patterns, std::size_t n_max, TreeFormat format);

std::string cmd_rules_list(OutputFormat format);

struct OeisEntry {
  std::string descriptor;  // pattern class literal
  std::string id;
};

/// The classes with a catalogued OEIS id.
const std::vector<OeisEntry>& oeis_table();

struct OeisCheck {
  OeisEntry entry;
  CountTable local;
  std::optional<OeisAlignment> alignment;
  std::optional<OeisSource> source;
  std::string error;  // fetch failure, empty on success
  bool passed() const noexcept { return error.empty() && alignment.has_value(); }
};

/// Local counts for n <= n_max against each catalogued b-file.
std::vector<OeisCheck> oeis_crosscheck(const OeisOptions& options, std::size_t n_max = 9);

std::string render(const OeisSequence& sequence, OutputFormat format);
std::string render(const std::vector<OeisCheck>& checks, OutputFormat format);

}  // namespace invseq
