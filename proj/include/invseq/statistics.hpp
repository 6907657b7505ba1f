#pragma once

#include <compare>
#include <cstddef>
#include <set>
#include <span>

#include "invseq/sequence.hpp"

namespace invseq {

/// An integer value extended by +infinity. Used for the minimum of an empty
/// segment so that `min(empty) >= max(anything)` holds without borrowing a
/// machine extreme.
class ExtendedValue {
 public:
  constexpr ExtendedValue(Value v) noexcept : value_(v), infinite_(false) {}  // NOLINT
  static constexpr ExtendedValue plus_infinity() noexcept { return ExtendedValue(); }

  constexpr bool is_infinite() const noexcept { return infinite_; }
  /// Only meaningful when finite.
  constexpr Value value() const noexcept { return value_; }

  friend constexpr bool operator==(ExtendedValue, ExtendedValue) = default;
  friend constexpr std::strong_ordering operator<=>(ExtendedValue a, ExtendedValue b) noexcept {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    return a.value_ <=> b.value_;
  }

 private:
  constexpr ExtendedValue() noexcept : value_(0), infinite_(true) {}
  Value value_;
  bool infinite_;
};

/// Minimum over a segment; +infinity when empty.
ExtendedValue segment_min(std::span<const Value> segment) noexcept;
/// Maximum over a segment; -1 when empty.
Value segment_max(std::span<const Value> segment) noexcept;

struct SequenceStats {
  std::size_t size = 0;
  PositionSet zeros;           // Zeros(s)
  std::size_t z = 0;           // |Zeros(s)|
  std::size_t prefix_zeros = 0;
  std::size_t suffix_zeros = 0;
  PositionSet leading;         // L(s): zeros with only zeros to their left
  PositionSet trailing;        // R(s) = Zeros(s) \ L(s)
  std::size_t ell = 0;         // |L(s)|
  std::size_t s201210 = 0;     // ell + [R(s) nonempty]
  std::set<Value> vals;
  ExtendedValue min_val = ExtendedValue::plus_infinity();
  Value max_val = -1;
  bool constant = true;        // every entry equal (vacuous for the empty sequence)
};

SequenceStats statistics(std::span<const Value> sigma);
inline SequenceStats statistics(const InversionSequence& sigma) {
  return statistics(sigma.entries());
}

/// Positions where inserting the value 1 keeps a {010,102}-avoider without
/// 1-entries inside I(010,102). Closed form: i in [z+1, n+1] with
/// min(s_{z+1..i-1}) >= max(s_{i..n}).
///
/// Throws PreconditionViolated if sigma is empty, contains the value 1, or
/// contains 010 or 102.
PositionSet active_sites(const InversionSequence& sigma);

/// Insertion oracle: tries the value 1 at every position in [2, n+1] and
/// keeps those giving a {010,102}-avoider. Requires sigma to avoid both.
PositionSet active_sites_oracle(const InversionSequence& sigma);

/// s_1..s_{i-1} . 1 . s_i..s_n for 1-based `i` in [2, n+1].
InversionSequence insert_one(const InversionSequence& sigma, Position i);

/// The patterns 010 and 102, used throughout the {010,102} machinery.
const PatternSet& patterns_010_102();
/// The patterns 201 and 210.
const PatternSet& patterns_201_210();

}  // namespace invseq
