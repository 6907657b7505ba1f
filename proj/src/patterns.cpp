#include "invseq/patterns.hpp"

#include <algorithm>

#include "invseq/errors.hpp"

namespace invseq {
namespace {

int sign(Value a, Value b) { return (a > b) - (a < b); }

// Extends `chosen` (indices into sigma) with one more index, keeping the
// chosen subsequence order-isomorphic to the first chosen.size() letters of
// rho. `last` pins the final index when nonnegative.
template <typename Visit>
bool backtrack(std::span<const Value> sigma, std::span<const Value> rho,
               std::vector<std::size_t>& chosen, std::ptrdiff_t last, Visit& visit) {
  const std::size_t j = chosen.size();
  if (j == rho.size()) return visit(chosen);
  const std::size_t lo = j == 0 ? 0 : chosen.back() + 1;
  const std::size_t remaining = rho.size() - j - 1;
  std::size_t hi = sigma.size() - remaining;  // exclusive
  if (last >= 0) hi = std::min<std::size_t>(hi, static_cast<std::size_t>(last) - remaining + 1);
  for (std::size_t q = lo; q < hi; ++q) {
    if (last >= 0 && j + 1 == rho.size() && q != static_cast<std::size_t>(last)) continue;
    bool ok = true;
    for (std::size_t i = 0; i < j && ok; ++i) {
      ok = sign(sigma[chosen[i]], sigma[q]) == sign(rho[i], rho[j]);
    }
    if (!ok) continue;
    chosen.push_back(q);
    bool stop = backtrack(sigma, rho, chosen, last, visit);
    chosen.pop_back();
    if (stop) return true;
  }
  return false;
}

bool occurrence_ending_at_last(std::span<const Value> sigma, const Pattern& rho) {
  if (sigma.size() < rho.length()) return false;
  std::vector<std::size_t> chosen;
  auto found = [](const std::vector<std::size_t>&) { return true; };
  return backtrack(sigma, rho.word(), chosen, static_cast<std::ptrdiff_t>(sigma.size()) - 1,
                   found);
}

// Values y in [0, 64) with sign(y, w) == rel.
std::uint64_t relation_mask(Value w, int rel) {
  const std::uint64_t below = w >= 64 ? ~0ULL : ((1ULL << w) - 1);
  const std::uint64_t at = w >= 64 ? 0ULL : (1ULL << w);
  if (rel < 0) return below;
  if (rel == 0) return at;
  return ~(below | at);
}

}  // namespace

OccurrenceList occurrences(std::span<const Value> sigma, const Pattern& rho, std::size_t limit) {
  OccurrenceList out;
  if (sigma.size() < rho.length()) return out;
  std::vector<std::size_t> chosen;
  auto collect = [&](const std::vector<std::size_t>& idx) {
    if (out.tuples.size() >= limit) {
      out.truncated = true;
      return true;
    }
    PositionSet tuple(idx.size());
    std::transform(idx.begin(), idx.end(), tuple.begin(), [](std::size_t q) { return q + 1; });
    out.tuples.push_back(std::move(tuple));
    return false;
  };
  backtrack(sigma, rho.word(), chosen, -1, collect);
  return out;
}

bool contains(std::span<const Value> sigma, const Pattern& rho) {
  if (sigma.size() < rho.length()) return false;
  std::vector<std::size_t> chosen;
  auto found = [](const std::vector<std::size_t>&) { return true; };
  return backtrack(sigma, rho.word(), chosen, -1, found);
}

AvoidanceScanner::AvoidanceScanner(const PatternSet& patterns) {
  auto rules = std::make_shared<Rules>();
  rules->patterns = patterns;
  for (std::size_t i = 0; i < patterns.size(); ++i) {
    const Pattern& p = patterns[i];
    if (p.length() == 3) {
      rules->triples.push_back({sign(p[0], p[1]), sign(p[0], p[2]), sign(p[1], p[2])});
    } else if (p.is_constant()) {
      rules->constant_lengths.push_back(p.length());
    } else {
      rules->general.push_back(i);
    }
  }
  rules_ = std::move(rules);
}

bool AvoidanceScanner::accepts(Value v) const {
  if (overflow_ || v >= kMaskValues) {
    std::vector<Value> extended = prefix_;
    extended.push_back(v);
    return std::none_of(rules_->patterns.begin(), rules_->patterns.end(), [&](const Pattern& p) {
      return occurrence_ending_at_last(extended, p);
    });
  }
  for (const Triple& t : rules_->triples) {
    std::uint64_t xs = seen_ & relation_mask(v, t.ac);
    const std::uint64_t y_vs_v = relation_mask(v, t.bc);
    while (xs != 0) {
      const Value x = __builtin_ctzll(xs);
      xs &= xs - 1;
      if ((pairs_[x] & y_vs_v & relation_mask(x, -t.ab)) != 0) return false;
    }
  }
  for (std::size_t k : rules_->constant_lengths) {
    if (counts_[v] + 1 >= k) return false;
  }
  if (!rules_->general.empty()) {
    std::vector<Value> extended = prefix_;
    extended.push_back(v);
    for (std::size_t i : rules_->general) {
      if (occurrence_ending_at_last(extended, rules_->patterns[i])) return false;
    }
  }
  return true;
}

void AvoidanceScanner::push(Value v) {
  prefix_.push_back(v);
  if (overflow_ || v >= kMaskValues) {
    overflow_ = true;
    return;
  }
  std::uint64_t xs = seen_;
  while (xs != 0) {
    const Value x = __builtin_ctzll(xs);
    xs &= xs - 1;
    pairs_[x] |= 1ULL << v;
  }
  seen_ |= 1ULL << v;
  ++counts_[v];
}

bool avoids_all(std::span<const Value> sigma, const PatternSet& patterns) {
  AvoidanceScanner scan(patterns);
  for (Value v : sigma) {
    if (!scan.accepts(v)) return false;
    scan.push(v);
  }
  return true;
}

namespace {

void extend(std::size_t n, const AvoidanceScanner& scan,
            const std::function<void(std::span<const Value>)>& visit,
            std::vector<std::uint64_t>* per_size) {
  const std::size_t m = scan.prefix().size();
  if (per_size != nullptr) ++(*per_size)[m];
  if (m == n) {
    if (visit) visit(scan.prefix());
    return;
  }
  for (Value v = 0; v <= static_cast<Value>(m); ++v) {
    if (!scan.accepts(v)) continue;
    AvoidanceScanner next = scan;
    next.push(v);
    extend(n, next, visit, per_size);
  }
}

}  // namespace

void for_each_avoider(std::size_t n, const PatternSet& patterns,
                      const std::function<void(std::span<const Value>)>& visit) {
  extend(n, AvoidanceScanner(patterns), visit, nullptr);
}

std::vector<InversionSequence> enumerate_avoiders(std::size_t n, const PatternSet& patterns) {
  std::vector<InversionSequence> out;
  for_each_avoider(n, patterns, [&](std::span<const Value> s) {
    out.push_back(InversionSequence::from_trusted({s.begin(), s.end()}));
  });
  return out;
}

std::vector<std::uint64_t> count_avoiders(std::size_t n_max, const PatternSet& patterns) {
  std::vector<std::uint64_t> counts(n_max + 1, 0);
  extend(n_max, AvoidanceScanner(patterns), {}, &counts);
  return counts;
}

std::vector<InversionSequence> all_inversion_sequences(std::size_t n) {
  return enumerate_avoiders(n, {});
}

}  // namespace invseq
