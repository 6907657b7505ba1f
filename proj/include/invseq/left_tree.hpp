#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "invseq/bigint.hpp"
#include "invseq/sequence.hpp"

namespace invseq {

// Generating tree growing on the left: a child prepends a zero, increments
// every positive entry, and increments a chosen subset Z of the zero entries.

/// child(s, Z). Throws InvalidZeroSubset unless Z is a subset of Zeros(s).
InversionSequence child(const InversionSequence& sigma, std::span<const Position> zero_subset);

/// Every subset of Zeros(s), ordered by increasing binary encoding (the
/// k-th zero from the left is bit k).
std::vector<PositionSet> zero_subsets(const InversionSequence& sigma);

/// Children of `sigma` avoiding every pattern, in zero_subsets order.
std::vector<InversionSequence> children(const InversionSequence& sigma, const PatternSet& patterns);

/// Drops the leading zero and decrements the positive entries.
/// Throws EmptySequence for the root.
InversionSequence parent(const InversionSequence& tau);

/// {Z subset of Zeros(s) : Z n R(s) is empty or all of R(s)}: the zero
/// subsets whose child stays in I(201,210). Throws PreconditionViolated
/// unless sigma avoids 201 and 210.
std::vector<PositionSet> valid_zero_subsets_201210(const InversionSequence& sigma);

/// Structural criterion: the restricted tree stays connected for `rho`
/// exactly when rho has a single zero, or exactly two zeros and starts 00.
bool predicted_closed(const Pattern& rho);

struct ClosureCounterexample {
  InversionSequence sigma;     // contains rho
  PositionSet zero_subset;
  InversionSequence tau;       // child(sigma, zero_subset), avoids rho
  PositionSet occurrence;      // an occurrence of rho in sigma
};

struct ClosureVerdict {
  Pattern pattern;
  bool closed = true;
  std::optional<ClosureCounterexample> counterexample;
  std::size_t n_checked = 0;
  bool predicted = true;       // predicted_closed(pattern)

  bool matches_prediction() const noexcept { return closed == predicted; }
};

/// Searches s in I_n, n <= n_max, by increasing size then lexicographically,
/// for s containing rho with a child avoiding rho. Returns the first hit.
ClosureVerdict closure_check(const Pattern& rho, std::size_t n_max);

/// True when sigma contains rho while child(sigma, Z) avoids it.
bool is_closure_counterexample(const Pattern& rho, const InversionSequence& sigma,
                               std::span<const Position> zero_subset);

/// Depth-first walk of the tree restricted to I(P), down to level n_max.
/// `visit` receives each node with its out-degree, or nullopt on level n_max.
void traverse_restricted_tree(
    const PatternSet& patterns, std::size_t n_max,
    const std::function<void(const InversionSequence&, std::optional<std::size_t>)>& visit);

/// Node count per level of the restricted tree. Throws NotClosedUnderTree
/// if some pattern fails predicted_closed.
CountTable restricted_level_counts(const PatternSet& patterns, std::size_t n_max);

// ---------------------------------------------------------------------------
// Modified (jumping) tree for I(010,102)

enum class ModifiedRule : char {
  RemoveOne = 'a',       // a 1 sits right of a larger value: drop the leftmost 1
  LowerLeftmostOne = 'b',  // 1s only after the zero prefix: turn the leftmost 1 into 0
  Unpush = 'c',          // no 1s: drop the first zero, decrement positive entries
};

struct ModifiedParent {
  InversionSequence parent;
  int jump = 1;
  ModifiedRule rule = ModifiedRule::Unpush;
};

/// Parent in the jumping tree for I(010,102); jump is 0 or 1.
/// Throws EmptySequence for the root, PreconditionViolated for non-members.
ModifiedParent modified_parent_010_102(const InversionSequence& tau);

struct ModifiedTreeReport {
  CountTable counts;                 // nodes per size
  std::size_t rule_counts[3] = {0, 0, 0};
  bool is_tree = true;               // every node reaches the root inside the class
  bool levels_match_sizes = true;    // summed jumps along each root path == size
  std::optional<InversionSequence> failure;
};

/// Iterates modified_parent_010_102 from every member of I_n(010,102),
/// n <= n_max, checking that each chain stays in the class and ends at the
/// empty sequence.
ModifiedTreeReport verify_modified_tree(std::size_t n_max);

/// Parent -> children (with jump lengths) for all nodes of size <= n_max.
/// Children of sigma in the modified tree, with edge lengths, found by
/// inverting the three parent moves and keeping the candidates whose parent
/// is sigma. Sorted.
std::vector<std::pair<InversionSequence, int>> modified_children_010_102(const InversionSequence& sigma);

/// Nodes per level of the modified tree, by walking down from the root.
CountTable modified_tree_level_counts(std::size_t n_max);

using ModifiedEdges = std::map<InversionSequence, std::vector<std::pair<InversionSequence, int>>>;
ModifiedEdges modified_tree_edges(std::size_t n_max);

}  // namespace invseq
