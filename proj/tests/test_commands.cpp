#include <doctest.h>

#include <regex>
#include <set>
#include <sstream>

#include <json.hpp>

#include "invseq/commands.hpp"
#include "invseq/errors.hpp"
#include "invseq/patterns.hpp"
#include "oracle.hpp"

using namespace invseq;

namespace {

std::set<std::string> text_nodes(const std::string& text) {
  std::set<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    std::string literal;
    fields >> literal;
    out.insert(literal);
  }
  return out;
}

}  // namespace

TEST_CASE("count through each method") {
  const ClassSpec pair = parse_class("201,210");
  const auto want = oracle::counts(8, {oracle::word("201"), oracle::word("210")});
  const CountTable brute(want.begin(), want.end());
  CHECK(cmd_count(pair, CountMethod::Rule, 8).counts == brute);
  CHECK(cmd_count(pair, CountMethod::Brute, 8).counts == brute);
  CHECK(cmd_count(pair, CountMethod::Tree, 8).counts == brute);
  CHECK(cmd_count(pair, CountMethod::Series, 8).counts == brute);
  CHECK(cmd_count(parse_class("none"), CountMethod::Tree, 6).counts == CountTable{1, 1, 2, 6, 24, 120, 720});
  const ClassSpec other = parse_class("010,102");
  CHECK(cmd_count(other, CountMethod::Recurrence, 12).counts == cmd_count(other, CountMethod::Rule, 12).counts);
  CHECK(cmd_count(other, CountMethod::Series, 12).counts == cmd_count(other, CountMethod::Rule, 12).counts);
  CHECK(cmd_count(other, CountMethod::Tree, 7).counts == cmd_count(other, CountMethod::Brute, 7).counts);
  CHECK(cmd_count(parse_class("Omega0k:4"), CountMethod::Rule, 6).counts ==
        cmd_count(parse_class("0000"), CountMethod::Brute, 6).counts);
}

TEST_CASE("count rejects unsupported requests") {
  CHECK_THROWS_AS(cmd_count(parse_class("011"), CountMethod::Recurrence, 5), UnsupportedCombination);
  CHECK_THROWS_AS(cmd_count(parse_class("011,012"), CountMethod::Rule, 5), UnsupportedCombination);
  CHECK_THROWS_AS(cmd_count(parse_class("011"), CountMethod::Brute, kBruteLimit + 1), LimitExceeded);
  CHECK_THROWS_AS(cmd_count(parse_class("010"), CountMethod::Tree, 5), NotClosedUnderTree);
  CHECK_THROWS_AS(parse_count_method("magic"), ParseError);
}

TEST_CASE("count output is deterministic") {
  const CountReport r = cmd_count(parse_class("010,102"), CountMethod::Recurrence, 5, true);
  const std::string j = render(r, OutputFormat::Json);
  CHECK(j == render(cmd_count(parse_class("010,102"), CountMethod::Recurrence, 5, true), OutputFormat::Json));
  const auto parsed = nlohmann::json::parse(j);
  CHECK(parsed["counts"][5] == "51");
  CHECK(parsed["b"].size() == 7);
  CHECK(parsed["class"] == "010,102");
  const std::string csv = render(r, OutputFormat::Csv);
  CHECK(csv.rfind("n,count,b\n0,1,0\n", 0) == 0);
}

TEST_CASE("verify suites pass") {
  const VerifyReport closure = cmd_verify(VerifySuite::Closure, 6);
  CHECK(closure.ok());
  std::size_t not_closed = 0;
  for (const CheckResult& c : closure.checks) not_closed += c.detail.rfind("not closed", 0) == 0;
  CHECK(not_closed == 3);
  CHECK(cmd_verify(VerifySuite::Sites, 7).ok());
  const VerifyReport gf = cmd_verify(VerifySuite::Gf, 20);
  CHECK(gf.ok());
  CHECK(render(gf, OutputFormat::Table).find("residual order") != std::string::npos);
  CHECK(nlohmann::json::parse(render(gf, OutputFormat::Json))["ok"] == true);
}

TEST_CASE("tree dumps") {
  const std::string text = cmd_tree({}, 3, TreeFormat::Text);
  CHECK(text_nodes(text) ==
        std::set<std::string>{"e", "0", "00", "01", "000", "010", "001", "011", "002", "012"});
  std::set<std::string> brute;
  for (std::size_t n = 0; n <= 4; ++n) {
    for (const auto& s : enumerate_avoiders(n, parse_pattern_set("010,102"))) brute.insert(to_literal(s));
  }
  const std::string modified = cmd_tree(parse_pattern_set("010,102"), 4, TreeFormat::Text);
  CHECK(text_nodes(modified) == brute);
  CHECK(modified.find("001 ~0 *") != std::string::npos);
  const std::string dot = cmd_tree(parse_pattern_set("010,102"), 3, TreeFormat::Dot);
  // Every line is a header, a node, an edge or the closing brace.
  const std::regex line_re(
      R"(digraph tree \{|  node \[.*\];|  n\d+ \[label="[0-9e,]+"(, style=filled, fillcolor=gray80)?\];|  n\d+ -> n\d+( \[label="\d+", style=dashed\])?;|\})");
  std::istringstream in(dot);
  std::string line;
  std::size_t lines = 0;
  while (std::getline(in, line)) {
    CHECK_MESSAGE(std::regex_match(line, line_re), line);
    ++lines;
  }
  CHECK(lines > 10);
  CHECK_THROWS_AS(cmd_tree(parse_pattern_set("000"), 3, TreeFormat::Text), NotClosedUnderTree);
}

TEST_CASE("series and rule listings") {
  CHECK(cmd_series("A201210", 4, OutputFormat::Table) == "0\t1\n1\t1\n2\t2\n3\t6\n4\t24\n");
  const auto j = nlohmann::json::parse(cmd_series("a_lk", 5, OutputFormat::Json));
  CHECK(j["table"][4][1] == "18");
  CHECK_THROWS_AS(cmd_series("nope", 4, OutputFormat::Table), ParseError);
  CHECK(cmd_rules_list(OutputFormat::Table).find("Omega120doubleprime") != std::string::npos);
  CHECK(nlohmann::json::parse(cmd_rules_list(OutputFormat::Json)).size() == rule_catalog().size());
}

TEST_CASE("the OEIS table covers every catalogued class") {
  for (const OeisEntry& e : oeis_table()) {
    CHECK(is_oeis_id(e.id));
    CHECK_NOTHROW(cmd_count(parse_class(e.descriptor), CountMethod::Rule, 3));
  }
}
