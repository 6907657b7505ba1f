#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <functional>
#include <span>
#include <vector>

#include "invseq/sequence.hpp"

namespace invseq {

/// Occurrences of a pattern, each one a strictly increasing tuple of
/// 1-based positions.
struct OccurrenceList {
  std::vector<PositionSet> tuples;
  bool truncated = false;
};

inline constexpr std::size_t kDefaultOccurrenceLimit = 1'000'000;

/// All occurrences of `rho` in `sigma`, in lexicographic order of the
/// position tuples. Stops after `limit` tuples and sets `truncated`.
OccurrenceList occurrences(std::span<const Value> sigma, const Pattern& rho,
                           std::size_t limit = kDefaultOccurrenceLimit);
inline OccurrenceList occurrences(const InversionSequence& sigma, const Pattern& rho,
                                  std::size_t limit = kDefaultOccurrenceLimit) {
  return occurrences(sigma.entries(), rho, limit);
}

bool contains(std::span<const Value> sigma, const Pattern& rho);
inline bool contains(const InversionSequence& sigma, const Pattern& rho) {
  return contains(sigma.entries(), rho);
}
inline bool avoids(const InversionSequence& sigma, const Pattern& rho) {
  return !contains(sigma, rho);
}

/// True when `sigma` avoids every pattern. Uses the left-to-right scanner.
bool avoids_all(std::span<const Value> sigma, const PatternSet& patterns);
inline bool avoids_all(const InversionSequence& sigma, const PatternSet& patterns) {
  return avoids_all(sigma.entries(), patterns);
}

/// Left-to-right scan state that rejects, in time linear in the number of
/// distinct values, an appended entry closing an occurrence of a pattern.
///
/// Length-3 patterns keep the set of value pairs (x, y) seen as a
/// subsequence; constant patterns keep per-value multiplicities. Any other
/// pattern, or values beyond the mask width, fall back to a backtracking
/// search anchored at the new entry.
class AvoidanceScanner {
 public:
  static constexpr Value kMaskValues = 64;

  explicit AvoidanceScanner(const PatternSet& patterns);

  /// Whether appending `v` to the scanned prefix keeps every pattern avoided.
  bool accepts(Value v) const;

  /// Appends `v` unconditionally.
  void push(Value v);

  std::span<const Value> prefix() const noexcept { return prefix_; }

 private:
  struct Triple {
    int ab, ac, bc;  // sign of rho_a - rho_b etc.
  };
  struct Rules {
    PatternSet patterns;
    std::vector<Triple> triples;
    std::vector<std::size_t> constant_lengths;
    std::vector<std::size_t> general;  // indices into patterns
  };

  std::shared_ptr<const Rules> rules_;
  std::vector<Value> prefix_;
  std::uint64_t seen_ = 0;
  std::array<std::uint64_t, kMaskValues> pairs_{};
  std::array<std::uint32_t, kMaskValues> counts_{};
  bool overflow_ = false;
};

/// Calls `visit` for every member of I_n(P), in lexicographic order.
void for_each_avoider(std::size_t n, const PatternSet& patterns,
                      const std::function<void(std::span<const Value>)>& visit);

/// Members of I_n(P), in lexicographic order of entries.
std::vector<InversionSequence> enumerate_avoiders(std::size_t n, const PatternSet& patterns);

/// |I_n(P)| for every n in [0, n_max], from one depth-first pass.
std::vector<std::uint64_t> count_avoiders(std::size_t n_max, const PatternSet& patterns);

/// All of I_n, unrestricted, in lexicographic order.
std::vector<InversionSequence> all_inversion_sequences(std::size_t n);

}  // namespace invseq
