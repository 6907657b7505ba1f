#include <doctest.h>

#include "invseq/errors.hpp"
#include "invseq/patterns.hpp"
#include "invseq/statistics.hpp"
#include "oracle.hpp"

using namespace invseq;

TEST_CASE("statistics of (0,0,2,0)") {
  const SequenceStats st = statistics(InversionSequence{0, 0, 2, 0});
  CHECK(st.z == 3);
  CHECK(st.zeros == PositionSet{1, 2, 4});
  CHECK(st.leading == PositionSet{1, 2});
  CHECK(st.trailing == PositionSet{4});
  CHECK(st.ell == 2);
  CHECK(st.s201210 == 3);
  CHECK(st.prefix_zeros == 2);
  CHECK(st.suffix_zeros == 1);
  CHECK(st.max_val == 2);
  CHECK(st.min_val == ExtendedValue(0));
  CHECK_FALSE(st.constant);
}

TEST_CASE("statistics of the empty sequence use the sentinels") {
  const SequenceStats st = statistics(InversionSequence{});
  CHECK(st.z == 0);
  CHECK(st.min_val.is_infinite());
  CHECK(st.max_val == -1);
  CHECK(st.constant);
  CHECK(segment_min({}).is_infinite());
  CHECK(segment_max({}) == -1);
}

TEST_CASE("zeros of (0,1,1,3,0,2,5)") {
  CHECK(statistics(InversionSequence{0, 1, 1, 3, 0, 2, 5}).zeros == PositionSet{1, 5});
}

TEST_CASE("extended values order +infinity last") {
  CHECK(ExtendedValue(5) < ExtendedValue::plus_infinity());
  CHECK(ExtendedValue::plus_infinity() == ExtendedValue::plus_infinity());
  CHECK(ExtendedValue(2) < ExtendedValue(3));
}

TEST_CASE("active sites on small sequences") {
  CHECK(active_sites(InversionSequence{0, 0, 2}) == PositionSet{3, 4});
  CHECK(active_sites(InversionSequence{0, 0, 2, 2}) == PositionSet{3, 4, 5});
  CHECK(active_sites(InversionSequence{0, 0, 0, 2}) == PositionSet{4, 5});
  CHECK(active_sites_oracle(InversionSequence{0, 0, 2}) == PositionSet{3, 4});
  CHECK(active_sites_oracle(InversionSequence{0}) == PositionSet{2});
  CHECK(active_sites_oracle(InversionSequence{0, 0}) == PositionSet{3});
  CHECK_THROWS_AS(active_sites(InversionSequence{0, 1}), PreconditionViolated);
  CHECK_THROWS_AS(active_sites(InversionSequence{0, 1, 0}), PreconditionViolated);
}

TEST_CASE("insert_one places a 1 at the site") {
  CHECK(insert_one(InversionSequence{0, 0, 2}, 3) == InversionSequence{0, 0, 1, 2});
  CHECK(insert_one(InversionSequence{0, 0, 2}, 4) == InversionSequence{0, 0, 2, 1});
}

TEST_CASE("active sites match a definition-level oracle") {
  // Oracle in test code: i is a site when inserting 1 at i leaves an
  // avoider.
  const std::vector<oracle::Word> pats{oracle::word("010"), oracle::word("102")};
  for (std::size_t n = 1; n <= 7; ++n) {
    for (const InversionSequence& s : enumerate_avoiders(n, patterns_010_102())) {
      if (s.contains_value(1)) continue;
      PositionSet want;
      for (Position i = 2; i <= n + 1; ++i) {
        oracle::Word t(s.values().begin(), s.values().begin() + static_cast<long>(i - 1));
        t.push_back(1);
        for (std::size_t j = i - 1; j < n; ++j) t.push_back(s.values()[j]);
        if (oracle::avoids_all(t, pats)) want.push_back(i);
      }
      CHECK_MESSAGE(active_sites(s) == want, to_literal(s));
    }
  }
}
