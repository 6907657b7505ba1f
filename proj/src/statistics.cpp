#include "invseq/statistics.hpp"

#include <algorithm>

#include "invseq/errors.hpp"
#include "invseq/patterns.hpp"

namespace invseq {

ExtendedValue segment_min(std::span<const Value> segment) noexcept {
  if (segment.empty()) return ExtendedValue::plus_infinity();
  return *std::min_element(segment.begin(), segment.end());
}

Value segment_max(std::span<const Value> segment) noexcept {
  if (segment.empty()) return -1;
  return *std::max_element(segment.begin(), segment.end());
}

SequenceStats statistics(std::span<const Value> sigma) {
  SequenceStats st;
  st.size = sigma.size();
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (sigma[i] == 0) st.zeros.push_back(i + 1);
    st.vals.insert(sigma[i]);
  }
  st.z = st.zeros.size();
  while (st.prefix_zeros < sigma.size() && sigma[st.prefix_zeros] == 0) ++st.prefix_zeros;
  while (st.suffix_zeros < sigma.size() && sigma[sigma.size() - 1 - st.suffix_zeros] == 0) {
    ++st.suffix_zeros;
  }
  for (Position p : st.zeros) {
    (p <= st.prefix_zeros ? st.leading : st.trailing).push_back(p);
  }
  st.ell = st.leading.size();
  st.s201210 = st.ell + (st.trailing.empty() ? 0 : 1);
  st.min_val = segment_min(sigma);
  st.max_val = segment_max(sigma);
  st.constant = st.vals.size() <= 1;
  return st;
}

const PatternSet& patterns_010_102() {
  static const PatternSet set{Pattern{0, 1, 0}, Pattern{1, 0, 2}};
  return set;
}

const PatternSet& patterns_201_210() {
  static const PatternSet set{Pattern{2, 0, 1}, Pattern{2, 1, 0}};
  return set;
}

InversionSequence insert_one(const InversionSequence& sigma, Position i) {
  if (i < 2 || i > sigma.size() + 1) {
    throw PreconditionViolated("insertion position out of range [2, n+1]");
  }
  std::vector<Value> out(sigma.values());
  out.insert(out.begin() + static_cast<std::ptrdiff_t>(i - 1), 1);
  return InversionSequence::from_trusted(std::move(out));
}

PositionSet active_sites(const InversionSequence& sigma) {
  if (sigma.empty()) throw PreconditionViolated("active_sites: empty sequence");
  if (sigma.contains_value(1)) {
    throw PreconditionViolated("active_sites: " + to_literal(sigma) + " contains the value 1");
  }
  if (!avoids_all(sigma, patterns_010_102())) {
    throw PreconditionViolated("active_sites: " + to_literal(sigma) + " contains 010 or 102");
  }
  const std::span<const Value> s = sigma.entries();
  const std::size_t n = s.size();
  const std::size_t z = static_cast<std::size_t>(std::count(s.begin(), s.end(), 0));

  // suffix_max[i - 1] = max(s_i..s_n) for i in [1, n+1].
  std::vector<Value> suffix_max(n + 1, -1);
  for (std::size_t i = n; i-- > 0;) suffix_max[i] = std::max(suffix_max[i + 1], s[i]);

  PositionSet sites;
  ExtendedValue running_min = ExtendedValue::plus_infinity();  // min(s_{z+1..i-1})
  for (Position i = z + 1; i <= n + 1; ++i) {
    if (i > z + 1) running_min = std::min(running_min, ExtendedValue(s[i - 2]));
    if (running_min >= ExtendedValue(suffix_max[i - 1])) sites.push_back(i);
  }
  return sites;
}

PositionSet active_sites_oracle(const InversionSequence& sigma) {
  PositionSet sites;
  for (Position i = 2; i <= sigma.size() + 1; ++i) {
    if (avoids_all(insert_one(sigma, i), patterns_010_102())) sites.push_back(i);
  }
  return sites;
}

}  // namespace invseq
