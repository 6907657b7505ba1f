// invseq: counting and cross-checking pattern-avoiding inversion sequences.

#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "invseq/commands.hpp"
#include "invseq/errors.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNetwork = 3;

invseq::OutputFormat format_of(bool json, bool csv) {
  if (json) return invseq::OutputFormat::Json;
  if (csv) return invseq::OutputFormat::Csv;
  return invseq::OutputFormat::Table;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Counting and cross-checking pattern-avoiding inversion sequences"};
  app.require_subcommand(1);

  bool json = false;
  bool csv = false;
  auto add_format = [&](CLI::App* cmd) {
    auto* j = cmd->add_flag("--json", json, "JSON output");
    auto* c = cmd->add_flag("--csv", csv, "CSV output");
    j->excludes(c);
  };

  std::string cls;
  std::string method = "rule";
  std::size_t n = 10;
  bool with_b = false;
  bool timing = false;
  auto* count = app.add_subcommand("count", "count a class level by level");
  count->add_option("--class", cls, "pattern set (e.g. 201,210 or none) or rule name")->required();
  count->add_option("--method", method, "brute, tree, rule, recurrence or series")->capture_default_str();
  count->add_option("--n", n, "largest size")->capture_default_str();
  count->add_flag("--with-b", with_b, "also print b_n (recurrence method)");
  count->add_flag("--timing", timing, "print elapsed time on stderr");
  add_format(count);

  std::string suite = "all";
  std::size_t verify_n = 7;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", suite, "closure, rules, sites, b-table, gf or all")->capture_default_str();
  verify->add_option("--n", verify_n, "size bound")->capture_default_str();
  add_format(verify);

  std::string gf;
  int order = 20;
  auto* series = app.add_subcommand("series", "print generating function coefficients");
  series->add_option("--gf", gf, "A201210, F010102, a_lk or b_lk")->required();
  series->add_option("--order", order, "truncation order")->capture_default_str();
  add_format(series);

  std::string tree_class;
  std::size_t tree_n = 3;
  std::string tree_format = "text";
  auto* tree = app.add_subcommand("tree", "dump the generating tree");
  tree->add_option("--class", tree_class, "pattern set")->required();
  tree->add_option("--n", tree_n, "deepest level")->capture_default_str();
  tree->add_option("--format", tree_format, "text or dot")
      ->check(CLI::IsMember({"text", "dot"}))
      ->capture_default_str();

  std::string oeis_id;
  bool offline = false;
  bool oeis_check = false;
  std::size_t max_terms = 0;
  auto* oeis = app.add_subcommand("oeis", "fetch an OEIS b-file, or cross-check the catalogued classes");
  auto* id_opt = oeis->add_option("--id", oeis_id, "sequence id, e.g. A000110");
  auto* check_opt = oeis->add_flag("--check", oeis_check, "compare every catalogued class with its b-file");
  id_opt->excludes(check_opt);
  oeis->add_flag("--offline", offline, "serve from the cache only");
  oeis->add_option("--max-terms", max_terms, "keep at most this many terms");
  add_format(oeis);

  auto* rules = app.add_subcommand("rules", "succession rules");
  auto* rules_list = rules->add_subcommand("list", "list every rule");
  rules->require_subcommand(1);
  add_format(rules_list);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const invseq::OutputFormat fmt = format_of(json, csv);
  try {
    if (count->parsed()) {
      const auto report = invseq::cmd_count(invseq::parse_class(cls), invseq::parse_count_method(method), n, with_b);
      std::cout << invseq::render(report, fmt);
      if (timing) std::cerr << "elapsed " << report.elapsed_seconds << " s\n";
      return kExitOk;
    }
    if (verify->parsed()) {
      const auto report = invseq::cmd_verify(invseq::parse_suite(suite), verify_n);
      std::cout << invseq::render(report, fmt);
      return report.ok() ? kExitOk : kExitFailed;
    }
    if (series->parsed()) {
      std::cout << invseq::cmd_series(gf, order, fmt);
      return kExitOk;
    }
    if (tree->parsed()) {
      const auto format = tree_format == "dot" ? invseq::TreeFormat::Dot : invseq::TreeFormat::Text;
      std::cout << invseq::cmd_tree(invseq::parse_pattern_set(tree_class), tree_n, format);
      return kExitOk;
    }
    if (oeis->parsed()) {
      invseq::OeisOptions options = invseq::oeis_options_from_env();
      if (offline) options.allow_network = false;
      options.max_terms = max_terms;
      if (oeis_check) {
        const auto checks = invseq::oeis_crosscheck(options);
        std::cout << invseq::render(checks, fmt);
        bool network_error = false;
        bool failed = false;
        for (const auto& c : checks) {
          network_error = network_error || (!c.error.empty() && !c.passed());
          failed = failed || !c.passed();
        }
        if (network_error) return kExitNetwork;
        return failed ? kExitFailed : kExitOk;
      }
      if (oeis_id.empty()) {
        std::cerr << "oeis: give --id or --check\n";
        return kExitUsage;
      }
      std::cout << invseq::render(invseq::oeis_fetch(oeis_id, options), fmt);
      return kExitOk;
    }
    if (rules_list->parsed()) {
      std::cout << invseq::cmd_rules_list(fmt);
      return kExitOk;
    }
  } catch (const invseq::NetworkDisabled& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNetwork;
  } catch (const invseq::HttpFailure& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNetwork;
  } catch (const invseq::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    // Bad input of any kind is a usage error; anything else is a failure.
    if (dynamic_cast<const invseq::ParseError*>(&e) || dynamic_cast<const invseq::NotAPattern*>(&e) ||
        dynamic_cast<const invseq::InvalidSequence*>(&e) ||
        dynamic_cast<const invseq::UnsupportedCombination*>(&e) ||
        dynamic_cast<const invseq::LimitExceeded*>(&e) ||
        dynamic_cast<const invseq::NotClosedUnderTree*>(&e)) {
      return kExitUsage;
    }
    return kExitFailed;
  }
  return kExitUsage;
}
