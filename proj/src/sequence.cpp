#include "invseq/sequence.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "invseq/errors.hpp"

namespace invseq {

bool is_inversion_sequence(std::span<const Value> entries) noexcept {
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i] < 0 || entries[i] > static_cast<Value>(i)) return false;
  }
  return true;
}

InversionSequence::InversionSequence(std::vector<Value> entries) : entries_(std::move(entries)) {
  if (!is_inversion_sequence(entries_)) {
    throw InvalidSequence("not an inversion sequence: " + to_literal(entries_));
  }
}

InversionSequence::InversionSequence(std::initializer_list<Value> entries)
    : InversionSequence(std::vector<Value>(entries)) {}

InversionSequence InversionSequence::from_trusted(std::vector<Value> entries) {
  InversionSequence s;
  s.entries_ = std::move(entries);
  return s;
}

bool InversionSequence::contains_value(Value v) const noexcept {
  return std::find(entries_.begin(), entries_.end(), v) != entries_.end();
}

Pattern::Pattern(std::vector<Value> word) : word_(std::move(word)) {
  if (word_.empty()) throw NotAPattern("pattern must be nonempty");
  std::vector<Value> vals = word_;
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  for (std::size_t k = 0; k < vals.size(); ++k) {
    if (vals[k] != static_cast<Value>(k)) {
      throw NotAPattern("value set of " + to_literal(word_) + " is not an interval [0,m]");
    }
  }
  max_ = vals.back();
}

Pattern::Pattern(std::initializer_list<Value> word) : Pattern(std::vector<Value>(word)) {}

Pattern validate_pattern(std::span<const Value> word) {
  return Pattern(std::vector<Value>(word.begin(), word.end()));
}

std::vector<Value> parse_word(std::string_view text) {
  std::vector<Value> out;
  if (text.empty() || text == "e") return out;
  auto parse_int = [&](std::string_view tok) {
    Value v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size() || v < 0) {
      throw ParseError("malformed sequence literal: '" + std::string(text) + "'");
    }
    return v;
  };
  if (text.find(',') == std::string_view::npos) {
    for (char c : text) out.push_back(parse_int(std::string_view(&c, 1)));
    return out;
  }
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    out.push_back(parse_int(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

InversionSequence parse_sequence(std::string_view text) {
  return InversionSequence(parse_word(text));
}

Pattern parse_pattern(std::string_view text) { return Pattern(parse_word(text)); }

PatternSet parse_pattern_set(std::string_view text) {
  PatternSet out;
  if (text.empty() || text == "none") return out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string_view tok = text.substr(start, comma - start);
    if (tok.empty()) throw ParseError("empty pattern in list '" + std::string(text) + "'");
    std::vector<Value> word;
    for (char c : tok) {
      if (c < '0' || c > '9') throw ParseError("malformed pattern '" + std::string(tok) + "'");
      word.push_back(c - '0');
    }
    out.emplace_back(std::move(word));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string to_literal(std::span<const Value> entries) {
  if (entries.empty()) return "e";
  bool small = std::all_of(entries.begin(), entries.end(), [](Value v) { return v <= 9; });
  std::string out;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (!small && i > 0) out += ',';
    out += std::to_string(entries[i]);
  }
  return out;
}

std::string to_literal(const PatternSet& patterns) {
  if (patterns.empty()) return "none";
  std::string out;
  for (std::size_t i = 0; i < patterns.size(); ++i) {
    if (i > 0) out += ',';
    out += to_literal(patterns[i]);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const InversionSequence& s) {
  return os << to_literal(s);
}

std::ostream& operator<<(std::ostream& os, const Pattern& p) { return os << to_literal(p); }

}  // namespace invseq
