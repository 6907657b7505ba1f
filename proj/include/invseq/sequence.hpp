#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace invseq {

using Value = int;

/// 1-based position inside a sequence.
using Position = std::size_t;

/// Sorted, duplicate-free set of 1-based positions.
using PositionSet = std::vector<Position>;

/// A sequence (s_1, ..., s_n) with 0 <= s_i <= i - 1.
///
/// Entries are stored 0-based; every accessor that takes a Position is
/// 1-based. Ordering is lexicographic on the entries.
class InversionSequence {
 public:
  InversionSequence() = default;
  explicit InversionSequence(std::vector<Value> entries);
  InversionSequence(std::initializer_list<Value> entries);

  /// Skips validation. Callers must guarantee the positional bound.
  static InversionSequence from_trusted(std::vector<Value> entries);

  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }

  /// Entry at 1-based position `i`.
  Value at(Position i) const { return entries_.at(i - 1); }

  std::span<const Value> entries() const noexcept { return entries_; }
  const std::vector<Value>& values() const noexcept { return entries_; }

  bool contains_value(Value v) const noexcept;

  friend bool operator==(const InversionSequence&, const InversionSequence&) = default;
  friend std::strong_ordering operator<=>(const InversionSequence& a,
                                          const InversionSequence& b) {
    return a.entries_ <=> b.entries_;
  }

 private:
  std::vector<Value> entries_;
};

/// True when `entries` satisfies the positional bound.
bool is_inversion_sequence(std::span<const Value> entries) noexcept;

/// A classical pattern: a nonempty word whose value set is [0, m].
class Pattern {
 public:
  /// Throws NotAPattern unless the value set is an interval starting at 0.
  explicit Pattern(std::vector<Value> word);
  Pattern(std::initializer_list<Value> word);

  std::size_t length() const noexcept { return word_.size(); }
  std::span<const Value> word() const noexcept { return word_; }
  Value operator[](std::size_t k) const { return word_[k]; }
  Value max_value() const noexcept { return max_; }

  /// True for the constant patterns 0^k.
  bool is_constant() const noexcept { return max_ == 0; }

  friend bool operator==(const Pattern&, const Pattern&) = default;
  friend std::strong_ordering operator<=>(const Pattern& a, const Pattern& b) {
    return a.word_ <=> b.word_;
  }

 private:
  std::vector<Value> word_;
  Value max_ = 0;
};

using PatternSet = std::vector<Pattern>;

/// Validating constructor as a free function, for symmetry with the CLI.
Pattern validate_pattern(std::span<const Value> word);

/// Parses "0021" or "0,1,10". The empty string and "e" denote the empty
/// sequence. Throws ParseError on malformed text.
std::vector<Value> parse_word(std::string_view text);

InversionSequence parse_sequence(std::string_view text);
Pattern parse_pattern(std::string_view text);

/// Parses "201,210" style pattern lists; "" and "none" give the empty set.
/// Multi-digit patterns inside a list are not supported.
PatternSet parse_pattern_set(std::string_view text);

/// Digit string when every entry is <= 9, comma-separated otherwise.
/// The empty sequence renders as "e".
std::string to_literal(std::span<const Value> entries);
inline std::string to_literal(const InversionSequence& s) { return to_literal(s.entries()); }
inline std::string to_literal(const Pattern& p) { return to_literal(p.word()); }
std::string to_literal(const PatternSet& patterns);

std::ostream& operator<<(std::ostream& os, const InversionSequence& s);
std::ostream& operator<<(std::ostream& os, const Pattern& p);

}  // namespace invseq
