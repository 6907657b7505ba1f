#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "invseq/bigint.hpp"
#include "invseq/sequence.hpp"

namespace invseq {

/// A node label: an optional letter, one or two integer parameters, and for
/// the composition-labelled 120 rule the lengths of the maximal zero factors.
/// Ordered by (tag, params, composition).
struct Label {
  char tag = 0;  // 0 when the rule uses no letters
  std::vector<long> params;
  std::vector<long> composition;

  friend bool operator==(const Label&, const Label&) = default;
  friend auto operator<=>(const Label&, const Label&) = default;
};

Label make_label(std::initializer_list<long> params);
Label make_label(char tag, std::initializer_list<long> params);
Label make_composition(std::vector<long> parts);

/// "(3)", "(C,2)", "(B,1,2)", "(2,2)" for compositions.
std::string to_string(const Label& label);

struct ProductionItem {
  Label label;
  BigInt multiplicity;
  int jump = 1;

  friend bool operator==(const ProductionItem&, const ProductionItem&) = default;
};

enum class RuleKind {
  OmegaLeft,
  OmegaPCat,
  Omega201_210,
  Omega010_102,
  Omega001,
  Omega011,
  Omega012,
  Omega021,
  Omega101_110,
  Omega102,
  Omega201_210_table,
  Omega000,
  Omega0k,
  Omega100,
  Omega010,
  Omega120,
  Omega120prime,
  Omega120doubleprime,
};

struct RuleId {
  RuleKind kind = RuleKind::OmegaLeft;
  int k = 0;  // only for Omega0k, k >= 2

  friend bool operator==(const RuleId&, const RuleId&) = default;
};

RuleId omega_0k(int k);

/// Static description of a rule.
struct RuleInfo {
  RuleId id;
  std::string name;        // "Omega201_210", "Omega0k:4"
  std::string anchor;      // the rule's display, abbreviated
  std::string counted;     // counting filter in words ("all nodes" when none)
  std::vector<PatternSet> classes;  // pattern classes counted by the filtered levels
  std::optional<std::size_t> level_limit;
};

RuleInfo rule_info(RuleId id);

/// Every rule, with Omega0k listed for k = 2, 3, 4.
std::vector<RuleInfo> rule_catalog();

/// Accepts catalog names; Omega0k takes its parameter as "Omega0k:K".
RuleId parse_rule_id(std::string_view name);

/// Rule matching a pattern class exactly, if any.
std::optional<RuleId> rule_for_class(const PatternSet& patterns);

Label axiom(RuleId rule);

/// Children of a node labelled `label`, merged by (label, jump) and sorted.
/// Items whose jump exceeds `level_budget` are dropped; items with
/// multiplicity zero never appear.
///
/// Throws UnknownLabel for a label of the wrong shape and UnreachableParams
/// for parameters the rule can never produce.
std::vector<ProductionItem> production(RuleId rule, const Label& label, std::size_t level_budget);

/// Phantom filter: whether a node with this label is an object of the class.
bool counted(RuleId rule, const Label& label);

struct LevelCounts {
  CountTable totals;
  /// Per-level label distribution (filled when requested).
  std::vector<std::map<Label, BigInt>> distribution;
};

/// Number of tree nodes per level, from the label-transfer dynamic program.
/// Zero-length edges are closed within a level before the level is expanded.
LevelCounts level_counts(RuleId rule, std::size_t n_max, bool keep_distribution = false);

/// Same, counting only nodes whose label passes `counted`.
LevelCounts counted_levels(RuleId rule, std::size_t n_max, bool keep_distribution = false);

/// Statistic-derived label of a sequence in the rule's class. Throws
/// UnsupportedCombination (NotApplicable) for Omega010, Omega120prime,
/// Omega120doubleprime and Omega010_102, whose labels are not statistics.
Label label_of_sequence(RuleId rule, const InversionSequence& sigma);

/// True when label_of_sequence is defined for `rule`.
bool has_statistic_labels(RuleId rule);

enum class TableKind { Binomial, Stirling1, ALk, BLk };

using BigIntTable = std::vector<std::vector<BigInt>>;

/// table[l][k] for l <= max_l, k <= max_k. Binomials and unsigned Stirling
/// numbers of the first kind come from their recurrences; a_{l,k} and
/// b_{l,k} are coefficients of their closed-form generating functions.
/// Results are cached and grown on demand.
BigIntTable multiplicity_tables(TableKind kind, std::size_t max_l, std::size_t max_k);

BigInt binomial(long n, long k);
BigInt stirling1(long n, long k);

}  // namespace invseq
