#include <doctest.h>

#include <sstream>

#include "invseq/errors.hpp"
#include "invseq/sequence.hpp"

using namespace invseq;

TEST_CASE("inversion sequences are validated") {
  CHECK_NOTHROW(InversionSequence({0, 1, 1, 3, 0, 2, 5}));
  CHECK_NOTHROW(InversionSequence{});
  CHECK_THROWS_AS(InversionSequence({1}), InvalidSequence);
  CHECK_THROWS_AS(InversionSequence({0, 2}), InvalidSequence);
  CHECK_THROWS_AS(InversionSequence({0, -1}), InvalidSequence);
  CHECK(is_inversion_sequence(std::vector<Value>{0, 0, 2}));
  CHECK_FALSE(is_inversion_sequence(std::vector<Value>{0, 0, 3}));
}

TEST_CASE("positions are 1-based") {
  const InversionSequence s{0, 1, 1, 3};
  CHECK(s.at(1) == 0);
  CHECK(s.at(4) == 3);
  CHECK(s.contains_value(3));
  CHECK_FALSE(s.contains_value(2));
}

TEST_CASE("patterns need the value set [0,m]") {
  CHECK(to_literal(validate_pattern(std::vector<Value>{1, 0, 2})) == "102");
  CHECK_THROWS_AS(validate_pattern(std::vector<Value>{0, 2, 2}), NotAPattern);
  CHECK_THROWS_AS(Pattern({1, 2, 3}), NotAPattern);
  CHECK_THROWS_AS(Pattern(std::vector<Value>{}), NotAPattern);
  const Pattern zero{0};
  CHECK(zero.length() == 1);
  CHECK(zero.is_constant());
  CHECK(Pattern({2, 1, 0}).max_value() == 2);
}

TEST_CASE("literals round-trip") {
  for (const char* text : {"e", "0", "0102", "0,1,2,3,4,5,6,7,8,9,10"}) {
    CHECK(to_literal(parse_sequence(text)) == text);
  }
  CHECK(parse_sequence("").empty());
  CHECK(parse_sequence("0,1,0") == InversionSequence{0, 1, 0});
  CHECK_THROWS_AS(parse_sequence("0x1"), ParseError);
  CHECK_THROWS_AS(parse_sequence("0,,1"), ParseError);
}

TEST_CASE("pattern sets are sorted and deduplicated") {
  const PatternSet ps = parse_pattern_set("210,201,210");
  REQUIRE(ps.size() == 2);
  CHECK(to_literal(ps) == "201,210");
  CHECK(parse_pattern_set("none").empty());
  CHECK(to_literal(PatternSet{}) == "none");
  CHECK_THROWS_AS(parse_pattern_set("201,,210"), ParseError);
  CHECK_THROWS_AS(parse_pattern_set("022"), NotAPattern);
}

TEST_CASE("sequences order lexicographically") {
  CHECK(InversionSequence{0, 0} < InversionSequence{0, 1});
  CHECK(InversionSequence{} < InversionSequence{0});
  std::ostringstream out;
  out << InversionSequence{0, 0, 2};
  CHECK(out.str() == "002");
}
