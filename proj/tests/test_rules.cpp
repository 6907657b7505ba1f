#include <doctest.h>

#include <map>

#include "invseq/errors.hpp"
#include "invseq/left_tree.hpp"
#include "invseq/rules.hpp"
#include "oracle.hpp"

using namespace invseq;

namespace {

std::vector<ProductionItem> items(std::initializer_list<std::tuple<Label, long, int>> xs) {
  std::vector<ProductionItem> out;
  for (const auto& [l, m, j] : xs) out.push_back({l, BigInt(m), j});
  return out;
}

CountTable oracle_counts(std::size_t n, const PatternSet& ps) {
  std::vector<oracle::Word> words;
  for (const Pattern& p : ps) words.emplace_back(p.word().begin(), p.word().end());
  const auto c = oracle::counts(n, words);
  return CountTable(c.begin(), c.end());
}

// Level-by-level tree nodes, grown with child() and kept while `keep` holds.
template <typename Keep>
std::vector<std::vector<InversionSequence>> grow(std::size_t n_max, Keep keep) {
  std::vector<std::vector<InversionSequence>> levels{{InversionSequence{}}};
  for (std::size_t n = 0; n < n_max; ++n) {
    std::vector<InversionSequence> next;
    for (const InversionSequence& s : levels.back()) {
      for (const PositionSet& z : zero_subsets(s)) {
        InversionSequence c = child(s, z);
        if (keep(c)) next.push_back(std::move(c));
      }
    }
    levels.push_back(std::move(next));
  }
  return levels;
}

}  // namespace

TEST_CASE("production examples") {
  CHECK(production(RuleId{RuleKind::Omega201_210}, make_label({2}), 10) ==
        items({{make_label({1}), 1, 1}, {make_label({2}), 2, 1}, {make_label({3}), 1, 1}}));
  CHECK(production(RuleId{RuleKind::OmegaLeft}, make_label({2}), 10) ==
        items({{make_label({1}), 1, 1}, {make_label({2}), 2, 1}, {make_label({3}), 1, 1}}));
  CHECK(production(RuleId{RuleKind::Omega010_102}, make_label('C', {2}), 10) ==
        items({{make_label('B', {1, 2}), 1, 0}, {make_label('C', {3}), 1, 1}}));
  CHECK(production(RuleId{RuleKind::Omega000}, make_label({3}), 10) ==
        items({{make_label({2}), 3, 1}, {make_label({3}), 3, 1}, {make_label({4}), 1, 1}}));
  CHECK(production(RuleId{RuleKind::OmegaPCat}, make_label({0}), 10) == items({{make_label({1}), 1, 1}}));
}

TEST_CASE("production rejects foreign labels") {
  CHECK_THROWS_AS(production(RuleId{RuleKind::OmegaLeft}, make_label('C', {1}), 3), UnknownLabel);
  CHECK_THROWS_AS(production(RuleId{RuleKind::Omega102}, make_label({1}), 3), UnknownLabel);
  CHECK_THROWS_AS(production(RuleId{RuleKind::Omega120}, make_label({1}), 3), UnknownLabel);
  CHECK_THROWS_AS(production(RuleId{RuleKind::OmegaLeft}, make_label({-1}), 3), UnreachableParams);
  CHECK_THROWS_AS(production(RuleId{RuleKind::Omega102}, make_label({3, 2}), 3), UnreachableParams);
  CHECK_THROWS_AS(production(RuleId{RuleKind::Omega010_102}, make_label('P', {1, 2}), 3), UnreachableParams);
}

TEST_CASE("production drops jumps beyond the budget") {
  const auto all = production(RuleId{RuleKind::Omega120doubleprime}, make_label({3}), 5);
  const auto cut = production(RuleId{RuleKind::Omega120doubleprime}, make_label({3}), 2);
  CHECK(cut.size() < all.size());
  for (const ProductionItem& it : cut) CHECK(it.jump <= 2);
  CHECK(production(RuleId{RuleKind::OmegaLeft}, make_label({2}), 0).empty());
}

TEST_CASE("rule catalog and lookup") {
  const auto catalog = rule_catalog();
  CHECK(catalog.size() == 20);
  for (const RuleInfo& info : catalog) {
    CHECK(parse_rule_id(info.name) == info.id);
    CHECK_FALSE(info.anchor.empty());
  }
  CHECK(parse_rule_id("Omega0k:5") == omega_0k(5));
  CHECK_THROWS_AS(parse_rule_id("Omega999"), ParseError);
  CHECK_THROWS_AS(parse_rule_id("Omega0k:x"), ParseError);
  CHECK_THROWS_AS(omega_0k(1), UnsupportedCombination);
  CHECK(rule_for_class(parse_pattern_set("210,201")) == RuleId{RuleKind::Omega201_210});
  CHECK(rule_for_class(parse_pattern_set("0000")) == omega_0k(4));
  CHECK(rule_for_class(parse_pattern_set("210")) == RuleId{RuleKind::Omega201_210_table});
  CHECK_FALSE(rule_for_class(parse_pattern_set("011,012")).has_value());
}

TEST_CASE("level counts on small cases") {
  CHECK(level_counts(RuleId{RuleKind::OmegaLeft}, 5).totals == CountTable{1, 1, 2, 6, 24, 120});
  CHECK(level_counts(RuleId{RuleKind::Omega201_210}, 4).totals == CountTable{1, 1, 2, 6, 24});
  CHECK(level_counts(RuleId{RuleKind::Omega011}, 4).totals == CountTable{1, 1, 2, 5, 15});
  CHECK_THROWS_AS(level_counts(RuleId{RuleKind::Omega120}, 19), LimitExceeded);
}

TEST_CASE("counted levels equal the oracle for every rule") {
  for (const RuleInfo& info : rule_catalog()) {
    for (const PatternSet& cls : info.classes) {
      CHECK_MESSAGE(counted_levels(info.id, 7).totals == oracle_counts(7, cls), info.name, " ", to_literal(cls));
    }
  }
}

TEST_CASE("labels of sequences") {
  CHECK(label_of_sequence(RuleId{RuleKind::OmegaLeft}, InversionSequence{0, 1, 0, 3, 0, 2, 3}) == make_label({3}));
  CHECK(label_of_sequence(RuleId{RuleKind::Omega201_210}, InversionSequence{0, 0, 2, 0}) == make_label({3}));
  CHECK(label_of_sequence(RuleId{RuleKind::Omega120}, InversionSequence{0, 0, 2, 0, 0, 3}) == make_composition({2, 2}));
  CHECK(label_of_sequence(RuleId{RuleKind::Omega120}, InversionSequence{}) == axiom(RuleId{RuleKind::Omega120}));
  CHECK_THROWS_AS(label_of_sequence(RuleId{RuleKind::Omega010}, InversionSequence{0}), UnsupportedCombination);
  CHECK_FALSE(has_statistic_labels(RuleId{RuleKind::Omega010_102}));
  CHECK(to_string(make_label('B', {1, 2})) == "(B,1,2)");
  CHECK(to_string(make_composition({2, 2})) == "(2,2)");
}

TEST_CASE("rule label distributions match the statistic on tree nodes") {
  struct Case {
    RuleId rule;
    const char* cls;
    bool phantom;  // nodes whose nonzero entries avoid the pattern
  };
  const std::vector<Case> cases{
      {RuleId{RuleKind::OmegaLeft}, "none", false},    {RuleId{RuleKind::OmegaPCat}, "101", false},
      {RuleId{RuleKind::Omega201_210}, "201,210", false}, {RuleId{RuleKind::Omega001}, "001", false},
      {RuleId{RuleKind::Omega011}, "011", false},      {RuleId{RuleKind::Omega012}, "012", false},
      {RuleId{RuleKind::Omega021}, "021", false},      {RuleId{RuleKind::Omega101_110}, "110", false},
      {RuleId{RuleKind::Omega102}, "102", false},      {RuleId{RuleKind::Omega201_210_table}, "201", false},
      {RuleId{RuleKind::Omega201_210_table}, "210", false}, {RuleId{RuleKind::Omega120}, "120", false},
      {RuleId{RuleKind::Omega000}, "000", true},       {omega_0k(4), "0000", true},
      {RuleId{RuleKind::Omega100}, "100", true},
  };
  const std::size_t n_max = 6;
  for (const Case& c : cases) {
    std::vector<oracle::Word> words;
    for (const Pattern& p : parse_pattern_set(c.cls)) words.emplace_back(p.word().begin(), p.word().end());
    const auto levels = grow(n_max, [&](const InversionSequence& s) {
      oracle::Word w;
      for (Value v : s.entries()) {
        if (!c.phantom || v > 0) w.push_back(v);
      }
      return oracle::avoids_all(w, words);
    });
    const LevelCounts dp = level_counts(c.rule, n_max, true);
    for (std::size_t n = 0; n <= n_max; ++n) {
      std::map<Label, BigInt> seen;
      for (const InversionSequence& s : levels[n]) seen[label_of_sequence(c.rule, s)] += 1;
      CHECK_MESSAGE(seen == dp.distribution[n], rule_info(c.rule).name, " ", c.cls, " n=", n);
    }
  }
}

TEST_CASE("zero-length edges close within a level") {
  const LevelCounts lc = level_counts(RuleId{RuleKind::Omega010_102}, 6, true);
  CHECK(lc.totals == CountTable{1, 1, 2, 5, 15, 51, 186});
  BigInt sum = 0;
  for (const auto& [label, count] : lc.distribution[4]) sum += count;
  CHECK(sum == 15);
}

TEST_CASE("multiplicity tables") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(-1, 0) == 0);
  CHECK(binomial(3, 4) == 0);
  CHECK(binomial(3, -1) == 0);
  for (long n = 0; n <= 10; ++n) CHECK(stirling1(n, n) == 1);
  // Unsigned Stirling numbers as coefficients of x(x+1)...(x+n-1).
  std::vector<BigInt> poly{1};
  for (long n = 1; n <= 12; ++n) {
    std::vector<BigInt> next(poly.size() + 1, 0);
    for (std::size_t k = 0; k < poly.size(); ++k) {
      next[k + 1] += poly[k];
      next[k] += poly[k] * (n - 1);
    }
    poly = std::move(next);
    for (long k = 0; k <= n; ++k) CHECK(stirling1(n, k) == poly[static_cast<std::size_t>(k)]);
  }
  const BigIntTable pascal = multiplicity_tables(TableKind::Binomial, 6, 6);
  CHECK(pascal[6][3] == 20);
  const BigIntTable a = multiplicity_tables(TableKind::ALk, 5, 5);
  CHECK(a[4] == std::vector<BigInt>{8, 18, 16, 5, 0, 0});
  CHECK(a[5] == std::vector<BigInt>{16, 56, 82, 55, 14, 0});
  const BigIntTable b = multiplicity_tables(TableKind::BLk, 5, 5);
  CHECK(b[2] == std::vector<BigInt>{0, 2, 1, 1, 1, 1});
  CHECK(b[5] == std::vector<BigInt>{0, 16, 56, 138, 275, 481});
  const BigIntTable big = multiplicity_tables(TableKind::ALk, 20, 3);
  CHECK(big.size() == 21);
  CHECK(big[5][3] == 55);
}
