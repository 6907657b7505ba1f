#include <doctest.h>

#include <algorithm>

#include "invseq/patterns.hpp"
#include "oracle.hpp"

using namespace invseq;

namespace {

const std::vector<const char*> kLength3 = {"000", "001", "010", "011", "012", "021", "100",
                                           "101", "102", "110", "120", "201", "210"};

oracle::Word to_word(std::span<const Value> s) { return {s.begin(), s.end()}; }

}  // namespace

TEST_CASE("occurrences on the worked sequence") {
  const InversionSequence sigma{0, 1, 0, 3, 0, 2, 3};
  const OccurrenceList occ = occurrences(sigma, parse_pattern("021"));
  REQUIRE_FALSE(occ.tuples.empty());
  // (0,3,2) at positions 1,4,6
  CHECK(std::find(occ.tuples.begin(), occ.tuples.end(), PositionSet{1, 4, 6}) != occ.tuples.end());
  for (const PositionSet& t : occ.tuples) {
    REQUIRE(t.size() == 3);
    CHECK(oracle::order_isomorphic({sigma.at(t[0]), sigma.at(t[1]), sigma.at(t[2])}, oracle::word("021")));
  }
  CHECK(occurrences(sigma, parse_pattern("110")).tuples.empty());
  CHECK(avoids(sigma, parse_pattern("110")));
  CHECK(occurrences(InversionSequence{}, parse_pattern("0")).tuples.empty());
}

TEST_CASE("occurrence lists are complete and can be truncated") {
  const InversionSequence sigma{0, 0, 0, 0, 0};
  CHECK(occurrences(sigma, parse_pattern("000")).tuples.size() == 10);
  const OccurrenceList cut = occurrences(sigma, parse_pattern("000"), 3);
  CHECK(cut.tuples.size() == 3);
  CHECK(cut.truncated);
}

TEST_CASE("contains agrees with the subset oracle") {
  std::vector<const char*> patterns = kLength3;
  for (const char* extra : {"0", "00", "01", "0000", "0102", "1032", "2013", "0021"}) patterns.push_back(extra);
  for (std::size_t n = 0; n <= 6; ++n) {
    for (const InversionSequence& s : all_inversion_sequences(n)) {
      for (const char* p : patterns) {
        CHECK_MESSAGE(contains(s, parse_pattern(p)) == oracle::contains(s.values(), oracle::word(p)),
                      to_literal(s), " vs ", p);
      }
    }
  }
}

TEST_CASE("scanner counts agree with the oracle for every length-3 class and pair") {
  std::vector<std::vector<const char*>> classes;
  for (const char* p : kLength3) classes.push_back({p});
  for (std::size_t i = 0; i < kLength3.size(); ++i) {
    for (std::size_t j = i + 1; j < kLength3.size(); j += 3) classes.push_back({kLength3[i], kLength3[j]});
  }
  classes.push_back({"0102"});
  classes.push_back({"0000", "012"});
  for (const auto& cls : classes) {
    PatternSet ps;
    std::vector<oracle::Word> words;
    for (const char* p : cls) {
      ps.push_back(parse_pattern(p));
      words.push_back(oracle::word(p));
    }
    const auto got = count_avoiders(7, ps);
    const auto want = oracle::counts(7, words);
    CHECK_MESSAGE(got == want, to_literal(ps));
  }
}

TEST_CASE("enumerate_avoiders lists avoiders in lexicographic order") {
  const auto all3 = enumerate_avoiders(3, {});
  REQUIRE(all3.size() == 6);
  CHECK(to_literal(all3.front()) == "000");
  CHECK(to_literal(all3.back()) == "012");
  CHECK(std::is_sorted(all3.begin(), all3.end()));
  CHECK(enumerate_avoiders(3, parse_pattern_set("011")).size() == 5);
  CHECK(enumerate_avoiders(4, parse_pattern_set("201,210")).size() == 24);
  const auto avoiders = enumerate_avoiders(6, parse_pattern_set("010,102"));
  for (const auto& s : avoiders) CHECK(oracle::avoids_all(to_word(s.entries()), {oracle::word("010"), oracle::word("102")}));
  CHECK(avoiders.size() == oracle::avoiders(6, {oracle::word("010"), oracle::word("102")}).size());
}

TEST_CASE("all inversion sequences number n!") {
  std::size_t f = 1;
  for (std::size_t n = 0; n <= 7; ++n) {
    if (n > 0) f *= n;
    CHECK(all_inversion_sequences(n).size() == f);
  }
}

TEST_CASE("the scanner tracks a prefix") {
  AvoidanceScanner scan(parse_pattern_set("010"));
  scan.push(0);
  scan.push(1);
  CHECK_FALSE(scan.accepts(0));
  CHECK(scan.accepts(1));
  CHECK(scan.accepts(2));
  CHECK(to_literal(scan.prefix()) == "01");
}
