#include <doctest.h>

#include <algorithm>
#include <set>

#include "invseq/errors.hpp"
#include "invseq/left_tree.hpp"
#include "invseq/patterns.hpp"
#include "invseq/statistics.hpp"
#include "oracle.hpp"

using namespace invseq;

namespace {

std::set<std::string> literals(const std::vector<InversionSequence>& xs) {
  std::set<std::string> out;
  for (const auto& x : xs) out.insert(to_literal(x));
  return out;
}

}  // namespace

TEST_CASE("child on the worked sequence") {
  const InversionSequence sigma{0, 1, 1, 3, 0, 2, 5};
  CHECK(child(sigma, PositionSet{1, 5}) == InversionSequence{0, 1, 2, 2, 4, 1, 3, 6});
  CHECK(child(sigma, PositionSet{}) == InversionSequence{0, 0, 2, 2, 4, 0, 3, 6});
  CHECK(child(InversionSequence{}, PositionSet{}) == InversionSequence{0});
  CHECK_THROWS_AS(child(sigma, PositionSet{2}), InvalidZeroSubset);
  CHECK_THROWS_AS(child(sigma, PositionSet{9}), InvalidZeroSubset);
}

TEST_CASE("parent inverts child") {
  CHECK(parent(InversionSequence{0, 0, 2, 1}) == InversionSequence{0, 1, 0});
  CHECK(parent(InversionSequence{0}) == InversionSequence{});
  CHECK(parent(InversionSequence{0, 1, 2, 2, 4, 1, 3, 6}) == InversionSequence{0, 1, 1, 3, 0, 2, 5});
  CHECK_THROWS_AS(parent(InversionSequence{}), EmptySequence);
  for (std::size_t n = 0; n <= 5; ++n) {
    for (const InversionSequence& s : all_inversion_sequences(n)) {
      const auto subsets = zero_subsets(s);
      CHECK(subsets.size() == (std::size_t{1} << statistics(s).z));
      std::set<InversionSequence> kids;
      for (const PositionSet& z : subsets) {
        const InversionSequence c = child(s, z);
        CHECK(parent(c) == s);
        kids.insert(c);
      }
      CHECK(kids.size() == subsets.size());
    }
  }
}

TEST_CASE("every sequence of size n+1 is a child of exactly one node") {
  for (std::size_t n = 0; n <= 5; ++n) {
    std::map<InversionSequence, int> hits;
    for (const InversionSequence& s : all_inversion_sequences(n)) {
      for (const InversionSequence& c : children(s, {})) ++hits[c];
    }
    CHECK(hits.size() == all_inversion_sequences(n + 1).size());
    CHECK(std::all_of(hits.begin(), hits.end(), [](const auto& kv) { return kv.second == 1; }));
  }
}

TEST_CASE("the first levels of the unrestricted tree") {
  CHECK(literals(children(InversionSequence{0, 0}, {})) == std::set<std::string>{"000", "010", "001", "011"});
  CHECK(literals(children(InversionSequence{0, 1}, {})) == std::set<std::string>{"002", "012"});
  CHECK(restricted_level_counts({}, 6) == CountTable{1, 1, 2, 6, 24, 120, 720});
}

TEST_CASE("children under 201,210 of (0,0,2)") {
  // z = 2 gives four zero subsets; the oracle decides which children avoid.
  const InversionSequence sigma{0, 0, 2};
  std::size_t want = 0;
  for (const PositionSet& z : zero_subsets(sigma)) {
    if (oracle::avoids_all(child(sigma, z).values(), {oracle::word("201"), oracle::word("210")})) ++want;
  }
  CHECK(want == 4);
  CHECK(children(sigma, patterns_201_210()).size() == want);
}

TEST_CASE("valid zero subsets for 201,210") {
  const InversionSequence s{0, 0, 2, 0};
  const auto valid = valid_zero_subsets_201210(s);
  CHECK(valid.size() == 8);
  std::size_t oracle_count = 0;
  for (const PositionSet& z : zero_subsets(s)) {
    const bool ok = oracle::avoids_all(child(s, z).values(), {oracle::word("201"), oracle::word("210")});
    oracle_count += ok;
    CHECK(ok == (std::find(valid.begin(), valid.end(), z) != valid.end()));
  }
  CHECK(oracle_count == 8);
  CHECK(valid_zero_subsets_201210(InversionSequence{0, 0}).size() == 4);
  CHECK(valid_zero_subsets_201210(InversionSequence{}) == std::vector<PositionSet>{PositionSet{}});
  for (std::size_t n = 0; n <= 6; ++n) {
    for (const InversionSequence& t : enumerate_avoiders(n, patterns_201_210())) {
      CHECK(valid_zero_subsets_201210(t).size() == (std::size_t{1} << statistics(t).s201210));
    }
  }
}

TEST_CASE("closure classification") {
  const std::set<std::string> closed{"001", "011", "012", "021", "101", "102", "110", "120", "201", "210"};
  for (const char* w : {"000", "001", "010", "011", "012", "021", "100", "101", "102", "110", "120", "201", "210"}) {
    const Pattern rho = parse_pattern(w);
    CHECK(predicted_closed(rho) == (closed.count(w) == 1));
    const ClosureVerdict v = closure_check(rho, 6);
    CHECK_MESSAGE(v.matches_prediction(), w);
    if (!v.closed) {
      REQUIRE(v.counterexample);
      const auto& cx = *v.counterexample;
      CHECK(oracle::contains(cx.sigma.values(), oracle::word(w)));
      CHECK_FALSE(oracle::contains(cx.tau.values(), oracle::word(w)));
      CHECK(child(cx.sigma, cx.zero_subset) == cx.tau);
    }
  }
}

TEST_CASE("closure counterexamples for 010 and 000") {
  const ClosureVerdict v = closure_check(parse_pattern("010"), 4);
  REQUIRE(v.counterexample);
  CHECK(v.counterexample->sigma == InversionSequence{0, 1, 0});
  CHECK(v.counterexample->tau == InversionSequence{0, 0, 2, 1});
  CHECK(is_closure_counterexample(parse_pattern("000"), InversionSequence{0, 0, 1, 1, 2, 2, 0}, PositionSet{1, 2}));
  CHECK_FALSE(is_closure_counterexample(parse_pattern("001"), InversionSequence{0, 0, 1}, PositionSet{}));
  CHECK(closure_check(parse_pattern("201"), 7).closed);
}

TEST_CASE("restricted tree levels equal brute force") {
  for (const char* cls : {"101", "201,210", "012", "120"}) {
    const PatternSet ps = parse_pattern_set(cls);
    std::vector<oracle::Word> words;
    for (const Pattern& p : ps) words.emplace_back(p.word().begin(), p.word().end());
    const auto want = oracle::counts(6, words);
    CHECK_MESSAGE(restricted_level_counts(ps, 6) == CountTable(want.begin(), want.end()), cls);
  }
  CHECK_THROWS_AS(restricted_level_counts(parse_pattern_set("010"), 4), NotClosedUnderTree);
}

TEST_CASE("modified parent moves") {
  const auto a = modified_parent_010_102(InversionSequence{0, 0, 2, 1});
  CHECK(a.parent == InversionSequence{0, 0, 2});
  CHECK(a.jump == 1);
  CHECK(a.rule == ModifiedRule::RemoveOne);
  const auto b = modified_parent_010_102(InversionSequence{0, 0, 1});
  CHECK(b.parent == InversionSequence{0, 0, 0});
  CHECK(b.jump == 0);
  CHECK(b.rule == ModifiedRule::LowerLeftmostOne);
  const auto c = modified_parent_010_102(InversionSequence{0, 1, 1});
  CHECK(c.parent == InversionSequence{0, 0, 1});
  CHECK(c.jump == 0);
  const auto d = modified_parent_010_102(InversionSequence{0, 0, 2});
  CHECK(d.parent == InversionSequence{0, 1});
  CHECK(d.rule == ModifiedRule::Unpush);
  CHECK_THROWS_AS(modified_parent_010_102(InversionSequence{0, 1, 0}), PreconditionViolated);
  CHECK_THROWS_AS(modified_parent_010_102(InversionSequence{}), EmptySequence);
}

TEST_CASE("modified tree spans the class") {
  const ModifiedTreeReport r = verify_modified_tree(7);
  CHECK(r.is_tree);
  CHECK(r.levels_match_sizes);
  const auto want = oracle::counts(7, {oracle::word("010"), oracle::word("102")});
  CHECK(r.counts == CountTable(want.begin(), want.end()));
  CHECK(modified_tree_level_counts(7) == r.counts);
  CHECK(modified_tree_level_counts(3) == CountTable{1, 1, 2, 5});
  const ModifiedEdges edges = modified_tree_edges(5);
  for (const auto& [node, kids] : edges) {
    if (node.size() < 5) CHECK(modified_children_010_102(node) == kids);
  }
}
