#include "invseq/left_tree.hpp"

#include <algorithm>
#include <cstdint>

#include "invseq/errors.hpp"
#include "invseq/patterns.hpp"
#include "invseq/statistics.hpp"

namespace invseq {
namespace {

// Child for a subset given as a bitmask over the zeros of sigma.
InversionSequence child_from_mask(std::span<const Value> sigma, std::uint64_t mask) {
  std::vector<Value> out;
  out.reserve(sigma.size() + 1);
  out.push_back(0);
  std::size_t zero_index = 0;
  for (Value v : sigma) {
    if (v > 0) {
      out.push_back(v + 1);
    } else {
      out.push_back((mask >> zero_index) & 1U ? 1 : 0);
      ++zero_index;
    }
  }
  return InversionSequence::from_trusted(std::move(out));
}

PositionSet positions_from_mask(const PositionSet& zeros, std::uint64_t mask) {
  PositionSet out;
  for (std::size_t k = 0; k < zeros.size(); ++k) {
    if ((mask >> k) & 1U) out.push_back(zeros[k]);
  }
  return out;
}

void require_mask_width(std::size_t z) {
  if (z >= 63) throw LimitExceeded("too many zeros to enumerate zero subsets");
}

}  // namespace

InversionSequence child(const InversionSequence& sigma, std::span<const Position> zero_subset) {
  std::vector<Value> out;
  out.reserve(sigma.size() + 1);
  out.push_back(0);
  for (Position i = 1; i <= sigma.size(); ++i) {
    const Value v = sigma.at(i);
    out.push_back(v > 0 ? v + 1 : 0);
  }
  for (Position p : zero_subset) {
    if (p < 1 || p > sigma.size() || sigma.at(p) != 0) {
      throw InvalidZeroSubset("position " + std::to_string(p) + " is not a zero of " +
                              to_literal(sigma));
    }
    out[p] = 1;
  }
  return InversionSequence::from_trusted(std::move(out));
}

std::vector<PositionSet> zero_subsets(const InversionSequence& sigma) {
  const PositionSet zeros = statistics(sigma).zeros;
  require_mask_width(zeros.size());
  std::vector<PositionSet> out;
  out.reserve(std::size_t{1} << zeros.size());
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << zeros.size()); ++mask) {
    out.push_back(positions_from_mask(zeros, mask));
  }
  return out;
}

std::vector<InversionSequence> children(const InversionSequence& sigma,
                                        const PatternSet& patterns) {
  const std::size_t z = static_cast<std::size_t>(
      std::count(sigma.values().begin(), sigma.values().end(), 0));
  require_mask_width(z);
  std::vector<InversionSequence> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << z); ++mask) {
    InversionSequence tau = child_from_mask(sigma.entries(), mask);
    if (avoids_all(tau, patterns)) out.push_back(std::move(tau));
  }
  return out;
}

InversionSequence parent(const InversionSequence& tau) {
  if (tau.empty()) throw EmptySequence("the empty sequence has no parent");
  std::vector<Value> out;
  out.reserve(tau.size() - 1);
  for (Position i = 2; i <= tau.size(); ++i) {
    const Value v = tau.at(i);
    out.push_back(v > 0 ? v - 1 : 0);
  }
  return InversionSequence::from_trusted(std::move(out));
}

std::vector<PositionSet> valid_zero_subsets_201210(const InversionSequence& sigma) {
  if (!avoids_all(sigma, patterns_201_210())) {
    throw PreconditionViolated(to_literal(sigma) + " contains 201 or 210");
  }
  const SequenceStats st = statistics(sigma);
  std::vector<PositionSet> out;
  for (PositionSet& z : zero_subsets(sigma)) {
    const auto in_r = static_cast<std::size_t>(std::count_if(z.begin(), z.end(), [&](Position p) {
      return p > st.prefix_zeros;
    }));
    if (in_r == 0 || in_r == st.trailing.size()) out.push_back(std::move(z));
  }
  return out;
}

bool predicted_closed(const Pattern& rho) {
  const auto word = rho.word();
  const auto zeros = std::count(word.begin(), word.end(), 0);
  if (zeros == 1) return true;
  return zeros == 2 && word.size() >= 2 && word[0] == 0 && word[1] == 0;
}

bool is_closure_counterexample(const Pattern& rho, const InversionSequence& sigma,
                               std::span<const Position> zero_subset) {
  return contains(sigma, rho) && !contains(child(sigma, zero_subset), rho);
}

ClosureVerdict closure_check(const Pattern& rho, std::size_t n_max) {
  ClosureVerdict verdict{rho, true, std::nullopt, 0, predicted_closed(rho)};
  const PatternSet single{rho};
  for (std::size_t n = 1; n <= n_max; ++n) {
    verdict.n_checked = n;
    if (n < rho.length()) continue;
    for (const InversionSequence& sigma : all_inversion_sequences(n)) {
      if (!contains(sigma, rho)) continue;
      const PositionSet zeros = statistics(sigma).zeros;
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << zeros.size()); ++mask) {
        InversionSequence tau = child_from_mask(sigma.entries(), mask);
        if (contains(tau, rho)) continue;
        verdict.closed = false;
        verdict.counterexample = ClosureCounterexample{
            sigma, positions_from_mask(zeros, mask), std::move(tau),
            occurrences(sigma, rho, 1).tuples.front()};
        return verdict;
      }
    }
  }
  return verdict;
}

void traverse_restricted_tree(
    const PatternSet& patterns, std::size_t n_max,
    const std::function<void(const InversionSequence&, std::optional<std::size_t>)>& visit) {
  std::function<void(const InversionSequence&)> walk = [&](const InversionSequence& node) {
    if (node.size() == n_max) {
      visit(node, std::nullopt);
      return;
    }
    const std::vector<InversionSequence> kids = children(node, patterns);
    visit(node, kids.size());
    for (const InversionSequence& kid : kids) walk(kid);
  };
  walk(InversionSequence{});
}

CountTable restricted_level_counts(const PatternSet& patterns, std::size_t n_max) {
  for (const Pattern& rho : patterns) {
    if (!predicted_closed(rho)) {
      throw NotClosedUnderTree("the left-growing tree does not restrict to I(" +
                               to_literal(rho) + ")");
    }
  }
  std::vector<std::uint64_t> counts(n_max + 1, 0);
  traverse_restricted_tree(patterns, n_max, [&](const InversionSequence& node, auto) {
    ++counts[node.size()];
  });
  return CountTable(counts.begin(), counts.end());
}

// ---------------------------------------------------------------------------

ModifiedParent modified_parent_010_102(const InversionSequence& tau) {
  if (tau.empty()) throw EmptySequence("the empty sequence has no parent");
  if (!avoids_all(tau, patterns_010_102())) {
    throw PreconditionViolated(to_literal(tau) + " contains 010 or 102");
  }
  const std::vector<Value>& s = tau.values();
  const auto first_one = std::find(s.begin(), s.end(), 1);
  if (first_one != s.end()) {
    const bool larger_to_left =
        std::any_of(s.begin(), first_one, [](Value v) { return v > 1; });
    std::vector<Value> out = s;
    const auto at = out.begin() + (first_one - s.begin());
    if (larger_to_left) {
      out.erase(at);
      return {InversionSequence::from_trusted(std::move(out)), 1, ModifiedRule::RemoveOne};
    }
    *at = 0;
    return {InversionSequence::from_trusted(std::move(out)), 0, ModifiedRule::LowerLeftmostOne};
  }
  return {parent(tau), 1, ModifiedRule::Unpush};
}

ModifiedTreeReport verify_modified_tree(std::size_t n_max) {
  ModifiedTreeReport report;
  report.counts.assign(n_max + 1, 0);
  for (std::size_t n = 0; n <= n_max; ++n) {
    for_each_avoider(n, patterns_010_102(), [&](std::span<const Value> entries) {
      report.counts[n] += 1;
      InversionSequence node = InversionSequence::from_trusted({entries.begin(), entries.end()});
      std::size_t level = n;
      // Every step either shrinks the sequence or removes a 1-entry.
      std::size_t budget = 2 * n + 1;
      bool first = true;
      while (!node.empty()) {
        if (budget-- == 0 || !avoids_all(node, patterns_010_102())) {
          report.is_tree = false;
          if (!report.failure) report.failure = node;
          return;
        }
        ModifiedParent up = modified_parent_010_102(node);
        if (first) {
          ++report.rule_counts[static_cast<char>(up.rule) - 'a'];
          first = false;
        }
        if (up.parent.size() + static_cast<std::size_t>(up.jump) != node.size()) {
          report.levels_match_sizes = false;
          if (!report.failure) report.failure = node;
        }
        level -= static_cast<std::size_t>(up.jump);
        node = std::move(up.parent);
      }
      if (level != 0) {
        report.levels_match_sizes = false;
        if (!report.failure) report.failure = InversionSequence::from_trusted({entries.begin(), entries.end()});
      }
    });
  }
  return report;
}

ModifiedEdges modified_tree_edges(std::size_t n_max) {
  ModifiedEdges edges;
  for (std::size_t n = 0; n <= n_max; ++n) {
    for_each_avoider(n, patterns_010_102(), [&](std::span<const Value> entries) {
      InversionSequence node = InversionSequence::from_trusted({entries.begin(), entries.end()});
      edges.try_emplace(node);
      if (node.empty()) return;
      ModifiedParent up = modified_parent_010_102(node);
      edges[up.parent].emplace_back(std::move(node), up.jump);
    });
  }
  for (auto& [node, kids] : edges) std::sort(kids.begin(), kids.end());
  return edges;
}

std::vector<std::pair<InversionSequence, int>> modified_children_010_102(const InversionSequence& sigma) {
  const std::vector<Value>& s = sigma.values();
  std::vector<std::pair<InversionSequence, int>> out;
  auto consider = [&](std::vector<Value> candidate) {
    if (!is_inversion_sequence(candidate) || !avoids_all(candidate, patterns_010_102())) return;
    InversionSequence tau = InversionSequence::from_trusted(std::move(candidate));
    ModifiedParent up = modified_parent_010_102(tau);
    if (up.parent == sigma) out.emplace_back(std::move(tau), up.jump);
  };
  // Inverse of unpush: prepend a zero, raise positive entries.
  {
    std::vector<Value> c{0};
    for (Value v : s) c.push_back(v > 0 ? v + 1 : 0);
    consider(std::move(c));
  }
  // Inverse of lowering the leftmost 1.
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != 0) continue;
    std::vector<Value> c = s;
    c[i] = 1;
    consider(std::move(c));
  }
  // Inverse of removing the leftmost 1.
  for (std::size_t j = 0; j <= s.size(); ++j) {
    std::vector<Value> c = s;
    c.insert(c.begin() + static_cast<std::ptrdiff_t>(j), 1);
    consider(std::move(c));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

CountTable modified_tree_level_counts(std::size_t n_max) {
  std::vector<std::uint64_t> counts(n_max + 1, 0);
  std::function<void(const InversionSequence&)> walk = [&](const InversionSequence& node) {
    ++counts[node.size()];
    for (const auto& [kid, jump] : modified_children_010_102(node)) {
      if (kid.size() <= n_max) walk(kid);
    }
  };
  walk(InversionSequence{});
  return CountTable(counts.begin(), counts.end());
}

}  // namespace invseq
