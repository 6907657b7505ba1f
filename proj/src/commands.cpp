#include "invseq/commands.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <sstream>

#include <json.hpp>

#include "invseq/errors.hpp"
#include "invseq/left_tree.hpp"
#include "invseq/patterns.hpp"
#include "invseq/recurrences.hpp"
#include "invseq/series.hpp"
#include "invseq/statistics.hpp"

namespace invseq {

using nlohmann::json;

namespace {

json decimal_array(const CountTable& xs) {
  json out = json::array();
  for (const BigInt& x : xs) out.push_back(to_decimal(x));
  return out;
}

std::string join(const CountTable& xs, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += to_decimal(xs[i]);
  }
  return out;
}

std::string positions(const PositionSet& ps) {
  std::string out = "{";
  for (std::size_t i = 0; i < ps.size(); ++i) out += (i ? "," : "") + std::to_string(ps[i]);
  return out + "}";
}

CountTable to_counts(const std::vector<std::uint64_t>& xs) { return CountTable(xs.begin(), xs.end()); }

CountTable brute_counts(const PatternSet& patterns, std::size_t n_max) {
  return to_counts(count_avoiders(n_max, patterns));
}

CountTable series_counts(const PowerSeries& s) {
  if (!s.is_integral()) throw SeriesExpansionError("counting series has a non-integer coefficient");
  return s.integer_coefficients();
}

bool is_class(const PatternSet& patterns, const PatternSet& target) { return patterns == target; }

}  // namespace

// ---------------------------------------------------------------------------
// count

CountMethod parse_count_method(std::string_view name) {
  if (name == "brute") return CountMethod::Brute;
  if (name == "tree") return CountMethod::Tree;
  if (name == "rule") return CountMethod::Rule;
  if (name == "recurrence") return CountMethod::Recurrence;
  if (name == "series") return CountMethod::Series;
  throw ParseError("unknown method '" + std::string(name) + "'");
}

std::string to_string(CountMethod method) {
  switch (method) {
    case CountMethod::Brute: return "brute";
    case CountMethod::Tree: return "tree";
    case CountMethod::Rule: return "rule";
    case CountMethod::Recurrence: return "recurrence";
    case CountMethod::Series: return "series";
  }
  return "?";
}

ClassSpec parse_class(std::string_view text) {
  ClassSpec cls;
  if (text.starts_with("Omega")) {
    const RuleId id = parse_rule_id(text);
    const RuleInfo info = rule_info(id);
    cls.descriptor = info.name;
    cls.rule = id;
    cls.patterns = info.classes.front();
    return cls;
  }
  cls.patterns = parse_pattern_set(text);
  cls.descriptor = to_literal(cls.patterns);
  return cls;
}

CountReport cmd_count(const ClassSpec& cls, CountMethod method, std::size_t n_max, bool with_b) {
  const auto start = std::chrono::steady_clock::now();
  CountReport report;
  report.descriptor = cls.descriptor;
  report.method = method;
  report.n_max = n_max;
  const bool pair_010_102 = is_class(cls.patterns, patterns_010_102());
  const bool pair_201_210 = is_class(cls.patterns, patterns_201_210());
  auto unsupported = [&] {
    return UnsupportedCombination("method " + to_string(method) + " cannot count class " + cls.descriptor);
  };
  if (with_b && method != CountMethod::Recurrence) {
    throw UnsupportedCombination("the b column is only available with --method recurrence");
  }
  switch (method) {
    case CountMethod::Brute:
      if (n_max > kBruteLimit) throw LimitExceeded("brute force is limited to n <= " + std::to_string(kBruteLimit));
      report.counts = brute_counts(cls.patterns, n_max);
      break;
    case CountMethod::Tree:
      if (n_max > kBruteLimit) throw LimitExceeded("tree traversal is limited to n <= " + std::to_string(kBruteLimit));
      report.counts = pair_010_102 ? modified_tree_level_counts(n_max)
                                   : restricted_level_counts(cls.patterns, n_max);
      break;
    case CountMethod::Rule: {
      const std::optional<RuleId> rule = cls.rule ? cls.rule : rule_for_class(cls.patterns);
      if (!rule) throw unsupported();
      report.counts = counted_levels(*rule, n_max).totals;
      break;
    }
    case CountMethod::Recurrence:
      if (!pair_010_102) throw unsupported();
      if (with_b) {
        report.b = b_totals_streaming(n_max + 1);
        report.counts.resize(n_max + 1);
        for (std::size_t n = 0; n <= n_max; ++n) report.counts[n] = (*report.b)[n + 1] + 1;
      } else {
        report.counts = count_010_102(n_max);
      }
      break;
    case CountMethod::Series:
      if (pair_201_210) {
        report.counts = series_counts(gf_a_201_210(static_cast<int>(n_max)));
      } else if (pair_010_102) {
        report.counts = series_counts(gf_f_010_102(static_cast<int>(n_max)));
      } else {
        throw unsupported();
      }
      break;
  }
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::string render(const CountReport& r, OutputFormat format) {
  std::ostringstream out;
  switch (format) {
    case OutputFormat::Json: {
      json j{{"class", r.descriptor}, {"method", to_string(r.method)}, {"n_max", r.n_max},
             {"counts", decimal_array(r.counts)}};
      if (r.b) j["b"] = decimal_array(*r.b);
      out << j.dump(2) << '\n';
      break;
    }
    case OutputFormat::Csv:
      out << "n,count" << (r.b ? ",b" : "") << '\n';
      for (std::size_t n = 0; n < r.counts.size(); ++n) {
        out << n << ',' << to_decimal(r.counts[n]);
        if (r.b) out << ',' << to_decimal((*r.b)[n]);
        out << '\n';
      }
      break;
    case OutputFormat::Table:
      out << "# class " << r.descriptor << ", method " << to_string(r.method) << '\n';
      for (std::size_t n = 0; n < r.counts.size(); ++n) {
        out << n << '\t' << to_decimal(r.counts[n]);
        if (r.b) out << '\t' << to_decimal((*r.b)[n]);
        out << '\n';
      }
      break;
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// verify

VerifySuite parse_suite(std::string_view name) {
  if (name == "closure") return VerifySuite::Closure;
  if (name == "rules") return VerifySuite::Rules;
  if (name == "sites") return VerifySuite::Sites;
  if (name == "b-table") return VerifySuite::BTable;
  if (name == "gf") return VerifySuite::Gf;
  if (name == "all") return VerifySuite::All;
  throw ParseError("unknown suite '" + std::string(name) + "'");
}

bool VerifyReport::ok() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

namespace {

class Recorder {
 public:
  Recorder(VerifyReport& report, std::string suite) : report_(report), suite_(std::move(suite)) {}

  // Runs `body`; an exception counts as a failed check.
  void check(const std::string& name, const std::string& anchor,
             const std::function<bool(std::string&)>& body) {
    CheckResult r{suite_, name, anchor, false, {}};
    try {
      r.passed = body(r.detail);
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("exception: ") + e.what();
    }
    report_.checks.push_back(std::move(r));
  }

 private:
  VerifyReport& report_;
  std::string suite_;
};

std::string compare_detail(const CountTable& got, const CountTable& want) {
  if (got == want) return join(got, ",");
  return "got " + join(got, ",") + " expected " + join(want, ",");
}

const std::vector<Pattern>& length3_patterns() {
  static const std::vector<Pattern> all = [] {
    std::vector<Pattern> out;
    for (const char* w : {"000", "001", "010", "011", "012", "021", "100", "101", "102", "110",
                          "120", "201", "210"}) {
      out.push_back(parse_pattern(w));
    }
    return out;
  }();
  return all;
}

void verify_closure(VerifyReport& report, std::size_t n_max) {
  Recorder rec(report, "closure");
  const std::string anchor = "closed iff one zero, or exactly two zeros and starts 00";
  for (const Pattern& rho : length3_patterns()) {
    rec.check(to_literal(rho), anchor, [&](std::string& detail) {
      const ClosureVerdict v = closure_check(rho, n_max);
      if (v.closed) {
        detail = "closed through n=" + std::to_string(v.n_checked);
        return v.matches_prediction();
      }
      const ClosureCounterexample& cx = *v.counterexample;
      detail = "not closed: sigma=" + to_literal(cx.sigma) + " Z=" + positions(cx.zero_subset) +
               " tau=" + to_literal(cx.tau) + " occurrence " + positions(cx.occurrence);
      return v.matches_prediction() && is_closure_counterexample(rho, cx.sigma, cx.zero_subset);
    });
  }
  rec.check("000 witness", "sigma=0011220, Z={1,2} leaves I(000)", [](std::string& detail) {
    const PositionSet z{1, 2};
    const InversionSequence sigma{0, 0, 1, 1, 2, 2, 0};
    detail = "tau=" + to_literal(child(sigma, z));
    return is_closure_counterexample(parse_pattern("000"), sigma, z);
  });
}

void verify_rules(VerifyReport& report, std::size_t n_max) {
  Recorder rec(report, "rules");
  const std::size_t n = std::min(n_max, kBruteLimit);
  for (const RuleInfo& info : rule_catalog()) {
    std::size_t m = n;
    if (info.level_limit) m = std::min(m, *info.level_limit);
    for (const PatternSet& cls : info.classes) {
      rec.check(info.name + " vs I(" + to_literal(cls) + ")", info.counted, [&](std::string& detail) {
        const CountTable got = counted_levels(info.id, m).totals;
        const CountTable want = brute_counts(cls, m);
        detail = compare_detail(got, want);
        return got == want;
      });
    }
  }
  rec.check("Omega000 = Omega0k:3", "same rule at k=3", [&](std::string& detail) {
    const std::size_t m = std::max<std::size_t>(n_max, 20);
    const CountTable a = counted_levels(RuleId{RuleKind::Omega000, 0}, m).totals;
    const CountTable b = counted_levels(omega_0k(3), m).totals;
    detail = compare_detail(a, b);
    return a == b;
  });
  rec.check("201,210 out-degree", "children = 2^s, s = |L| + [R nonempty]", [&](std::string& detail) {
    std::size_t nodes = 0;
    bool ok = true;
    traverse_restricted_tree(patterns_201_210(), std::min<std::size_t>(n, 9),
                             [&](const InversionSequence& node, std::optional<std::size_t> degree) {
                               if (!degree) return;
                               ++nodes;
                               const std::size_t s = statistics(node).s201210;
                               if (*degree != (std::size_t{1} << s)) ok = false;
                             });
    detail = std::to_string(nodes) + " nodes";
    return ok;
  });
  rec.check("120 rules agree", "Omega120, Omega120prime, Omega120doubleprime", [&](std::string& detail) {
    const std::size_t m = std::min<std::size_t>(std::max<std::size_t>(n_max, 12), 18);
    const CountTable a = counted_levels(RuleId{RuleKind::Omega120, 0}, m).totals;
    const CountTable b = counted_levels(RuleId{RuleKind::Omega120prime, 0}, m).totals;
    const CountTable c = counted_levels(RuleId{RuleKind::Omega120doubleprime, 0}, m).totals;
    detail = compare_detail(a, b);
    return a == b && b == c;
  });
}

void verify_sites(VerifyReport& report, std::size_t n_max) {
  Recorder rec(report, "sites");
  for (std::size_t n = 1; n <= std::min(n_max, kBruteLimit); ++n) {
    rec.check("n=" + std::to_string(n), "sites = {i > z : min before i >= max from i}", [&](std::string& detail) {
      std::size_t checked = 0;
      bool ok = true;
      for_each_avoider(n, patterns_010_102(), [&](std::span<const Value> e) {
        if (std::find(e.begin(), e.end(), 1) != e.end()) return;
        const InversionSequence sigma = InversionSequence::from_trusted({e.begin(), e.end()});
        ++checked;
        if (active_sites(sigma) != active_sites_oracle(sigma)) {
          if (ok) detail = "mismatch at " + to_literal(sigma) + "; ";
          ok = false;
        }
      });
      detail += std::to_string(checked) + " sequences";
      return ok;
    });
  }
}

void verify_b_table(VerifyReport& report, std::size_t n_max) {
  Recorder rec(report, "b-table");
  const std::size_t n = std::min(n_max, kBruteCensusLimit);
  std::optional<BCensusReport> census;
  rec.check("census n<=" + std::to_string(n), "b(n,z,s) recurrence", [&](std::string& detail) {
    census = brute_b_check(n);
    detail = census->tables_equal ? std::to_string(census->census.size()) + " nonzero cells"
                                  : census->mismatches.front();
    return census->tables_equal;
  });
  rec.check("support", "n>=3, 2<=z<=n-1, 2<=s<=n-z+1", [&](std::string&) { return census && census->support_ok; });
  rec.check("prefix 00", "sequences begin 0,0", [&](std::string&) { return census && census->starts_with_00; });
  rec.check("end sites", "z+1 and n+1 are active", [&](std::string&) { return census && census->ends_active; });
  const std::size_t big = std::max<std::size_t>(n_max, 40);
  rec.check("marginals", "sum_s b(n,z,s) = b(n,z), sum_z b(n,z) = b(n)", [&](std::string& detail) {
    const BTable table = build_b_table(big);
    const CountTable streamed = b_totals_streaming(big);
    bool ok = streamed == table.totals();
    for (long m = 0; m <= static_cast<long>(big); ++m) {
      BigInt sum = 0;
      for (long z = 0; z <= m + 1; ++z) sum += table.b(m, z);
      ok = ok && sum == table.b(m);
    }
    for (long m = 3; m < static_cast<long>(big); ++m) ok = ok && table.b(m + 1) >= table.b(m);
    detail = "n<=" + std::to_string(big) + ", b(" + std::to_string(big) + ")=" + to_decimal(table.b(static_cast<long>(big)));
    return ok;
  });
  rec.check("four-way 010,102", "brute = modified tree = rule = recurrence", [&](std::string& detail) {
    const std::size_t m = std::min<std::size_t>(n_max, 10);
    const CountTable brute = brute_counts(patterns_010_102(), m);
    const CountTable tree = modified_tree_level_counts(m);
    const CountTable rule = counted_levels(RuleId{RuleKind::Omega010_102, 0}, big).totals;
    const CountTable rec_counts = count_010_102(big);
    detail = compare_detail(CountTable(rec_counts.begin(), rec_counts.begin() + static_cast<std::ptrdiff_t>(m + 1)), brute);
    return brute == tree && rule == rec_counts &&
           std::equal(brute.begin(), brute.end(), rule.begin());
  });
}

void verify_gf(VerifyReport& report, std::size_t n_max) {
  Recorder rec(report, "gf");
  const int order = static_cast<int>(std::max<std::size_t>(n_max, 40));
  rec.check("A201210", "(2 - t - t sqrt(1-8t)) / (4t^2 - 4t + 2)", [&](std::string& detail) {
    const PowerSeries a = gf_a_201_210(order);
    const CountTable dp = counted_levels(RuleId{RuleKind::Omega201_210, 0}, static_cast<std::size_t>(order)).totals;
    const bool ok = a.is_integral() && a.integer_coefficients() == dp;
    detail = "order " + std::to_string(order) + (ok ? ", equals the rule" : ", differs from the rule");
    return ok;
  });
  rec.check("F cubic", "minimal polynomial of F", [&](std::string& detail) {
    const int r = residual_order(f_010_102_cubic(), f_series_from_recurrence(order));
    detail = "residual order " + std::to_string(r) + " on order " + std::to_string(order);
    return r > order;
  });
  rec.check("B cubic", "(t^3 - 2t^2 + 2t - 1) B^3 + ...", [&](std::string& detail) {
    const int r = residual_order(b_010_102_cubic(), b_series(order));
    detail = "residual order " + std::to_string(r) + " on order " + std::to_string(order);
    return r > order;
  });
  rec.check("F from cubic", "series root with seed 1 + t", [&](std::string& detail) {
    const PowerSeries solved = gf_f_010_102(order);
    const PowerSeries rec_series = f_series_from_recurrence(order);
    detail = "order " + std::to_string(order);
    return solved == rec_series;
  });
  for (auto [name, kind] : {std::pair{"a_lk", TableKind::ALk}, std::pair{"b_lk", TableKind::BLk}}) {
    rec.check(name, "nonnegative integer coefficients", [&, kind = kind](std::string& detail) {
      const BivariateSeries s = kind == TableKind::ALk ? gf_a_lk(20, 20) : gf_b_lk(20, 20);
      detail = "20x20";
      return s.is_integral() && s.is_nonnegative();
    });
  }
}

}  // namespace

VerifyReport cmd_verify(VerifySuite suite, std::size_t n_max) {
  VerifyReport report;
  const bool all = suite == VerifySuite::All;
  if (all || suite == VerifySuite::Closure) verify_closure(report, n_max);
  if (all || suite == VerifySuite::Rules) verify_rules(report, n_max);
  if (all || suite == VerifySuite::Sites) verify_sites(report, n_max);
  if (all || suite == VerifySuite::BTable) verify_b_table(report, n_max);
  if (all || suite == VerifySuite::Gf) verify_gf(report, n_max);
  return report;
}

std::string render(const VerifyReport& report, OutputFormat format) {
  std::ostringstream out;
  if (format == OutputFormat::Json) {
    json checks = json::array();
    for (const CheckResult& c : report.checks) {
      checks.push_back({{"suite", c.suite}, {"name", c.name}, {"anchor", c.anchor},
                        {"passed", c.passed}, {"detail", c.detail}});
    }
    out << json{{"ok", report.ok()}, {"checks", checks}}.dump(2) << '\n';
    return out.str();
  }
  if (format == OutputFormat::Csv) out << "suite,name,passed,detail\n";
  std::size_t failed = 0;
  for (const CheckResult& c : report.checks) {
    failed += c.passed ? 0 : 1;
    if (format == OutputFormat::Csv) {
      out << c.suite << ",\"" << c.name << "\"," << (c.passed ? "pass" : "FAIL") << ",\"" << c.detail << "\"\n";
    } else {
      out << (c.passed ? "PASS " : "FAIL ") << c.suite << ": " << c.name << " [" << c.anchor << "] " << c.detail << '\n';
    }
  }
  if (format == OutputFormat::Table) {
    out << report.checks.size() - failed << "/" << report.checks.size() << " checks passed\n";
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// series

std::string cmd_series(std::string_view gf, int order, OutputFormat format) {
  GfId id;
  if (gf == "A201210") id = GfId::A201210;
  else if (gf == "F010102" || gf == "F010102_series") id = GfId::F010102;
  else if (gf == "a_lk" || gf == "a_lk_gf") id = GfId::ALk;
  else if (gf == "b_lk" || gf == "b_lk_gf") id = GfId::BLk;
  else throw ParseError("unknown generating function '" + std::string(gf) + "'");
  const auto value = gf_eval(id, order);
  std::ostringstream out;
  if (const auto* s = std::get_if<PowerSeries>(&value)) {
    json coeffs = json::array();
    for (std::size_t n = 0; n < s->size(); ++n) {
      const std::string c = to_decimal((*s)[n]);
      if (format == OutputFormat::Json) coeffs.push_back(c);
      else if (format == OutputFormat::Csv) out << (n ? "" : "n,coefficient\n") << n << ',' << c << '\n';
      else out << n << '\t' << c << '\n';
    }
    if (format == OutputFormat::Json) out << json{{"gf", gf}, {"order", order}, {"coefficients", coeffs}}.dump(2) << '\n';
    return out.str();
  }
  const auto& b = std::get<BivariateSeries>(value);
  json rows = json::array();
  if (format == OutputFormat::Csv) out << "l,k,coefficient\n";
  for (int l = 0; l <= b.order_t(); ++l) {
    json row = json::array();
    if (format == OutputFormat::Table) out << l << ':';
    for (int k = 0; k <= b.order_u(); ++k) {
      const std::string c = to_decimal(b.coeff(static_cast<std::size_t>(l), static_cast<std::size_t>(k)));
      if (format == OutputFormat::Json) row.push_back(c);
      else if (format == OutputFormat::Csv) out << l << ',' << k << ',' << c << '\n';
      else out << ' ' << c;
    }
    if (format == OutputFormat::Table) out << '\n';
    if (format == OutputFormat::Json) rows.push_back(row);
  }
  if (format == OutputFormat::Json) out << json{{"gf", gf}, {"order", order}, {"table", rows}}.dump(2) << '\n';
  return out.str();
}

// ---------------------------------------------------------------------------
// tree

std::string cmd_tree(const PatternSet& patterns, std::size_t n_max, TreeFormat format) {
  const bool modified = is_class(patterns, patterns_010_102());
  if (!modified) {
    for (const Pattern& rho : patterns) {
      if (!predicted_closed(rho)) {
        throw NotClosedUnderTree("no tree for I(" + to_literal(patterns) + "): " + to_literal(rho) +
                                 " is not closed under the left-growing tree");
      }
    }
  }
  auto kids_of = [&](const InversionSequence& node) {
    std::vector<std::pair<InversionSequence, int>> out;
    if (modified) {
      for (auto& [kid, jump] : modified_children_010_102(node)) {
        if (kid.size() <= n_max) out.emplace_back(std::move(kid), jump);
      }
    } else if (node.size() < n_max) {
      for (auto& kid : children(node, patterns)) out.emplace_back(std::move(kid), 1);
    }
    return out;
  };
  std::ostringstream out;
  std::size_t next_id = 0;
  if (format == TreeFormat::Dot) {
    out << "digraph tree {\n  node [shape=box, fontname=\"monospace\"];\n";
  } else if (modified) {
    out << "# * contains 1; ~0 edge of length 0\n";
  }
  std::function<void(const InversionSequence&, std::size_t, int, std::optional<std::size_t>)> walk =
      [&](const InversionSequence& node, std::size_t depth, int jump, std::optional<std::size_t> parent_id) {
        const std::size_t id = next_id++;
        const bool gray = modified && node.contains_value(1);
        if (format == TreeFormat::Dot) {
          out << "  n" << id << " [label=\"" << to_literal(node) << "\""
              << (gray ? ", style=filled, fillcolor=gray80" : "") << "];\n";
          if (parent_id) {
            out << "  n" << *parent_id << " -> n" << id;
            if (jump != 1) out << " [label=\"" << jump << "\", style=dashed]";
            out << ";\n";
          }
        } else {
          out << std::string(2 * depth, ' ') << to_literal(node);
          if (parent_id && jump != 1) out << " ~" << jump;
          if (gray) out << " *";
          out << '\n';
        }
        for (const auto& [kid, j] : kids_of(node)) walk(kid, depth + 1, j, id);
      };
  walk(InversionSequence{}, 0, 1, std::nullopt);
  if (format == TreeFormat::Dot) out << "}\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// rules list

std::string cmd_rules_list(OutputFormat format) {
  std::ostringstream out;
  json list = json::array();
  for (const RuleInfo& info : rule_catalog()) {
    std::string classes;
    for (const PatternSet& c : info.classes) classes += (classes.empty() ? "" : " ") + to_literal(c);
    if (format == OutputFormat::Json) {
      list.push_back({{"name", info.name}, {"anchor", info.anchor}, {"counted", info.counted}, {"classes", classes}});
    } else if (format == OutputFormat::Csv) {
      out << info.name << ",\"" << info.anchor << "\",\"" << info.counted << "\"," << classes << '\n';
    } else {
      out << info.name << "  [" << classes << "; " << info.counted << "]\n    " << info.anchor << '\n';
    }
  }
  if (format == OutputFormat::Json) out << list.dump(2) << '\n';
  return out.str();
}

// ---------------------------------------------------------------------------
// OEIS

const std::vector<OeisEntry>& oeis_table() {
  static const std::vector<OeisEntry> table{
      {"001", "A011782"}, {"011", "A000110"}, {"012", "A001519"}, {"021", "A155069"},
      {"101", "A113227"}, {"110", "A113227"}, {"102", "A200753"}, {"201", "A263777"},
      {"210", "A263777"}, {"000", "A000111"}, {"010", "A263780"}, {"100", "A263779"},
      {"120", "A263778"}, {"201,210", "A212198"}, {"010,102", "A374553"},
  };
  return table;
}

std::vector<OeisCheck> oeis_crosscheck(const OeisOptions& options, std::size_t n_max) {
  std::vector<OeisCheck> out;
  for (const OeisEntry& entry : oeis_table()) {
    OeisCheck check{entry, {}, std::nullopt, std::nullopt, {}};
    const ClassSpec cls = parse_class(entry.descriptor);
    check.local = cmd_count(cls, CountMethod::Rule, n_max).counts;
    try {
      const OeisSequence seq = oeis_fetch(entry.id, options);
      check.source = seq.source;
      check.alignment = align_prefix(seq, check.local);
    } catch (const Error& e) {
      check.error = e.what();
    }
    out.push_back(std::move(check));
  }
  return out;
}

std::string render(const OeisSequence& sequence, OutputFormat format) {
  std::ostringstream out;
  const char* source = sequence.source == OeisSource::Cache ? "cache" : "network";
  if (format == OutputFormat::Json) {
    json terms = json::array();
    for (const auto& [i, v] : sequence.terms) terms.push_back({i, to_decimal(v)});
    out << json{{"id", sequence.id}, {"source", source}, {"terms", terms}}.dump(2) << '\n';
    return out.str();
  }
  if (format == OutputFormat::Csv) out << "index,value\n";
  else out << "# " << sequence.id << " (" << source << ")\n";
  for (const auto& [i, v] : sequence.terms) out << i << (format == OutputFormat::Csv ? "," : " ") << to_decimal(v) << '\n';
  return out.str();
}

std::string render(const std::vector<OeisCheck>& checks, OutputFormat format) {
  std::ostringstream out;
  json list = json::array();
  for (const OeisCheck& c : checks) {
    std::string status = c.passed() ? "match, offset " + std::to_string(c.alignment->delta) + ", " +
                                          std::to_string(c.alignment->compared) + " terms"
                                    : (c.error.empty() ? "no alignment matches" : c.error);
    if (format == OutputFormat::Json) {
      list.push_back({{"class", c.entry.descriptor}, {"id", c.entry.id}, {"passed", c.passed()},
                      {"status", status}, {"local", decimal_array(c.local)}});
    } else {
      out << (c.passed() ? "PASS " : "FAIL ") << c.entry.descriptor << " " << c.entry.id << ": " << status << '\n';
    }
  }
  if (format == OutputFormat::Json) out << list.dump(2) << '\n';
  return out.str();
}

}  // namespace invseq
