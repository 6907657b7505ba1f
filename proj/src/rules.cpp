#include "invseq/rules.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

#include "invseq/errors.hpp"
#include "invseq/series.hpp"
#include "invseq/statistics.hpp"

namespace invseq {

// ---------------------------------------------------------------------------
// Labels

Label make_label(std::initializer_list<long> params) { return Label{0, params, {}}; }

Label make_label(char tag, std::initializer_list<long> params) { return Label{tag, params, {}}; }

Label make_composition(std::vector<long> parts) { return Label{0, {}, std::move(parts)}; }

std::string to_string(const Label& label) {
  std::string out = "(";
  bool first = true;
  auto put = [&](const std::string& s) {
    if (!first) out += ',';
    out += s;
    first = false;
  };
  if (label.tag != 0) put(std::string(1, label.tag));
  for (long p : label.params) put(std::to_string(p));
  for (long p : label.composition) put(std::to_string(p));
  return out + ")";
}

// ---------------------------------------------------------------------------
// Multiplicities

BigInt binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

namespace {

BigInt pow2(long e) {
  BigInt r = 1;
  mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), static_cast<mp_bitcnt_t>(e));
  return r;
}

struct TableCache {
  std::mutex mutex;
  BigIntTable stirling;
  BigIntTable a_lk;
  BigIntTable b_lk;
};

TableCache& cache() {
  static TableCache c;
  return c;
}

bool covers(const BigIntTable& t, std::size_t max_l, std::size_t max_k) {
  return t.size() > max_l && !t.empty() && t[0].size() > max_k;
}

BigIntTable crop(const BigIntTable& t, std::size_t max_l, std::size_t max_k) {
  BigIntTable out(max_l + 1);
  for (std::size_t l = 0; l <= max_l; ++l) out[l].assign(t[l].begin(), t[l].begin() + static_cast<std::ptrdiff_t>(max_k + 1));
  return out;
}

BigIntTable table_from_series(const BivariateSeries& s, const char* what) {
  if (!s.is_integral()) throw SeriesExpansionError(std::string(what) + " has non-integer coefficients");
  BigIntTable out(static_cast<std::size_t>(s.order_t() + 1));
  for (std::size_t l = 0; l < out.size(); ++l) {
    for (std::size_t k = 0; k <= static_cast<std::size_t>(s.order_u()); ++k) {
      out[l].push_back(s.coeff(l, k).get_num());
    }
  }
  return out;
}

// Grow-only cached table lookup. Sizes are rounded up so repeated small
// extensions do not recompute the closed forms each time.
const BigIntTable& cached(TableKind kind, std::size_t max_l, std::size_t max_k) {
  TableCache& c = cache();
  const std::size_t size = std::max<std::size_t>({max_l, max_k, 15}) + 1;
  switch (kind) {
    case TableKind::Stirling1:
      if (!covers(c.stirling, max_l, max_k)) {
        BigIntTable t(size, std::vector<BigInt>(size, 0));
        t[0][0] = 1;
        for (std::size_t n = 1; n < size; ++n) {
          for (std::size_t k = 1; k <= n; ++k) {
            t[n][k] = t[n - 1][k - 1] + BigInt(static_cast<unsigned long>(n - 1)) * t[n - 1][k];
          }
        }
        c.stirling = std::move(t);
      }
      return c.stirling;
    case TableKind::ALk:
      if (!covers(c.a_lk, max_l, max_k)) {
        c.a_lk = table_from_series(gf_a_lk(static_cast<int>(size - 1), static_cast<int>(size - 1)), "a_lk");
      }
      return c.a_lk;
    case TableKind::BLk:
      if (!covers(c.b_lk, max_l, max_k)) {
        c.b_lk = table_from_series(gf_b_lk(static_cast<int>(size - 1), static_cast<int>(size - 1)), "b_lk");
      }
      return c.b_lk;
    case TableKind::Binomial:
      break;
  }
  throw UnsupportedCombination("no cached table for this kind");
}

}  // namespace

BigIntTable multiplicity_tables(TableKind kind, std::size_t max_l, std::size_t max_k) {
  if (kind == TableKind::Binomial) {
    BigIntTable out(max_l + 1);
    for (std::size_t l = 0; l <= max_l; ++l) {
      for (std::size_t k = 0; k <= max_k; ++k) {
        out[l].push_back(binomial(static_cast<long>(l), static_cast<long>(k)));
      }
    }
    return out;
  }
  std::lock_guard lock(cache().mutex);
  return crop(cached(kind, max_l, max_k), max_l, max_k);
}

BigInt stirling1(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  std::lock_guard lock(cache().mutex);
  return cached(TableKind::Stirling1, static_cast<std::size_t>(n), static_cast<std::size_t>(n))
      [static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

namespace {

BigInt table_entry(TableKind kind, long l, long k) {
  std::lock_guard lock(cache().mutex);
  return cached(kind, static_cast<std::size_t>(l), static_cast<std::size_t>(k))
      [static_cast<std::size_t>(l)][static_cast<std::size_t>(k)];
}

// ---------------------------------------------------------------------------
// Productions

class Emitter {
 public:
  explicit Emitter(std::size_t budget) : budget_(budget) {}

  void add(Label label, const BigInt& multiplicity, int jump = 1) {
    if (multiplicity == 0 || static_cast<std::size_t>(jump) > budget_) return;
    merged_[{std::move(label), jump}] += multiplicity;
  }
  void add(Label label, long multiplicity = 1, int jump = 1) { add(std::move(label), BigInt(multiplicity), jump); }

  std::vector<ProductionItem> items() && {
    std::vector<ProductionItem> out;
    out.reserve(merged_.size());
    for (auto& [key, m] : merged_) out.push_back({key.first, m, key.second});
    return out;
  }

 private:
  std::size_t budget_;
  std::map<std::pair<Label, int>, BigInt> merged_;
};

void expect_shape(const Label& label, char tag, std::size_t params, const RuleId& rule) {
  if (label.tag != tag || label.params.size() != params || !label.composition.empty()) {
    throw UnknownLabel("label " + to_string(label) + " does not belong to rule " + rule_info(rule).name);
  }
}

void expect(bool reachable, const Label& label, const RuleId& rule) {
  if (!reachable) {
    throw UnreachableParams("label " + to_string(label) + " is unreachable in rule " + rule_info(rule).name);
  }
}

// The q-compositions used by the composition-labelled 120 rule: sequences
// (q_0..q_r) of parts in [1, part_max] whose binomial weight is nonzero.
template <typename Visit>
void for_each_parts(long part_max, long room, std::vector<long>& parts, long sum, Visit&& visit) {
  if (!parts.empty()) visit(parts, sum);
  for (long q = 1; q <= part_max; ++q) {
    // Each extra part raises r by one, and the weight needs room - sum >= r.
    if (sum + q + static_cast<long>(parts.size()) > room) break;
    parts.push_back(q);
    for_each_parts(part_max, room, parts, sum + q, visit);
    parts.pop_back();
  }
}

std::vector<ProductionItem> produce(RuleId rule, const Label& l, std::size_t budget) {
  Emitter e(budget);
  const auto& p = l.params;
  switch (rule.kind) {
    case RuleKind::OmegaLeft: {
      expect_shape(l, 0, 1, rule);
      const long k = p[0];
      expect(k >= 0, l, rule);
      for (long i = 0; i <= k; ++i) e.add(make_label({i + 1}), binomial(k, i));
      break;
    }
    case RuleKind::OmegaPCat:
    case RuleKind::Omega101_110: {
      expect_shape(l, 0, 1, rule);
      const long k = p[0];
      expect(k >= 0, l, rule);
      e.add(make_label({k + 1}));
      for (long i = 1; i <= k; ++i) e.add(make_label({i}), i);
      break;
    }
    case RuleKind::Omega201_210: {
      expect_shape(l, 0, 1, rule);
      const long s = p[0];
      expect(s >= 0, l, rule);
      for (long i = 1; i <= s + 1; ++i) e.add(make_label({i}));
      for (long i = 1; i <= s - 1; ++i) e.add(make_label({i + 1}), pow2(s - i) - 1);
      break;
    }
    case RuleKind::Omega010_102: {
      switch (l.tag) {
        case 'C': {
          expect_shape(l, 'C', 1, rule);
          const long z = p[0];
          expect(z >= 0, l, rule);
          e.add(make_label('C', {z + 1}), 1, 1);
          if (z >= 2) e.add(make_label('B', {z - 1, 2}), 1, 0);
          break;
        }
        case 'B': {
          expect_shape(l, 'B', 2, rule);
          const long z = p[0], s = p[1];
          expect(z >= 1 && s >= 2, l, rule);
          e.add(make_label('P', {z + 1, s}), 1, 1);
          if (z >= 2) e.add(make_label('B', {z - 1, s + 1}), 1, 0);
          break;
        }
        case 'P': {
          expect_shape(l, 'P', 2, rule);
          const long z = p[0], s = p[1];
          expect(z >= 2 && s >= 2, l, rule);
          e.add(make_label('P', {z + 1, s}), 1, 1);
          e.add(make_label('R', {z, s + 1}), 1, 1);
          for (long i = 3; i <= s; ++i) e.add(make_label('M', {z, i}), 1, 1);
          e.add(make_label('L', {z - 1}), 1, 0);
          break;
        }
        case 'L': {
          expect_shape(l, 'L', 1, rule);
          const long z = p[0];
          expect(z >= 1, l, rule);
          e.add(make_label('P', {z + 1, 2}), 1, 1);
          if (z >= 2) e.add(make_label('L', {z - 1}), 1, 0);
          break;
        }
        case 'R': {
          expect_shape(l, 'R', 2, rule);
          const long z = p[0], s = p[1];
          expect(z >= 2 && s >= 3, l, rule);
          e.add(make_label('P', {z + 1, s}), 1, 1);
          e.add(make_label('R', {z, s + 1}), 1, 1);
          break;
        }
        case 'M': {
          expect_shape(l, 'M', 2, rule);
          const long z = p[0], s = p[1];
          expect(z >= 2 && s >= 3, l, rule);
          e.add(make_label('P', {z + 1, s}), 1, 1);
          e.add(make_label('M', {z, s}), 1, 1);
          break;
        }
        default:
          throw UnknownLabel("label " + to_string(l) + " does not belong to rule Omega010_102");
      }
      break;
    }
    case RuleKind::Omega001: {
      if (l.tag == 'A') {
        expect_shape(l, 'A', 1, rule);
        const long z = p[0];
        expect(z >= 0, l, rule);
        e.add(make_label('A', {z + 1}));
        for (long i = 1; i <= z; ++i) e.add(make_label('B', {i}));
      } else {
        expect_shape(l, 'B', 1, rule);
        const long z = p[0];
        expect(z >= 1, l, rule);
        for (long i = 1; i <= z; ++i) e.add(make_label('B', {i}));
      }
      break;
    }
    case RuleKind::Omega011: {
      expect_shape(l, 0, 1, rule);
      const long z = p[0];
      expect(z >= 0, l, rule);
      e.add(make_label({z}), z);
      e.add(make_label({z + 1}));
      break;
    }
    case RuleKind::Omega012: {
      if (l.tag == 'A') {
        expect_shape(l, 'A', 1, rule);
        const long z = p[0];
        expect(z >= 0, l, rule);
        e.add(make_label('A', {z + 1}));
        for (long i = 0; i <= z - 1; ++i) e.add(make_label('B', {i}), pow2(z - 1 - i));
      } else {
        expect_shape(l, 'B', 1, rule);
        const long s = p[0];
        expect(s >= 0, l, rule);
        e.add(make_label('B', {s}));
        for (long i = 0; i <= s - 1; ++i) e.add(make_label('B', {i}), pow2(s - 1 - i));
      }
      break;
    }
    case RuleKind::Omega021: {
      expect_shape(l, 0, 1, rule);
      const long q = p[0];
      expect(q >= 0, l, rule);
      e.add(make_label({q + 1}));
      for (long i = 1; i <= q; ++i) e.add(make_label({i}), pow2(q - i));
      break;
    }
    case RuleKind::Omega102: {
      expect_shape(l, 0, 2, rule);
      const long s = p[0], z = p[1];
      expect(s >= 0 && s <= z, l, rule);
      if (s == z) {
        e.add(make_label({z + 1, z + 1}));
        for (long i = 0; i <= z - 1; ++i) {
          for (long j = i + 1; j <= z; ++j) e.add(make_label({i, j}), binomial(z - i - 1, z - j));
        }
      } else {
        for (long j = s + 1; j <= z + 1; ++j) e.add(make_label({s, j}));
        for (long i = 0; i <= s - 1; ++i) {
          for (long j = i + 1; j <= z; ++j) {
            BigInt m = 0;
            for (long k = s - j; k <= z - j; ++k) m += binomial(s - i - 1, k);
            e.add(make_label({i, j}), m);
          }
        }
      }
      break;
    }
    case RuleKind::Omega201_210_table: {
      expect_shape(l, 0, 2, rule);
      const long q = p[0], z = p[1];
      expect(q <= z && (q >= 1 || (q == 0 && z == 0)), l, rule);
      for (long j = q + 1; j <= z + 1; ++j) e.add(make_label({q + 1, j}));
      for (long i = 1; i <= q; ++i) {
        for (long j = i; j <= z; ++j) {
          BigInt m = 0;
          for (long k = q - j; k <= z - j; ++k) m += binomial(q - i, k);
          e.add(make_label({i, j}), m);
        }
      }
      break;
    }
    case RuleKind::Omega000:
    case RuleKind::Omega0k: {
      expect_shape(l, 0, 1, rule);
      const long z = p[0];
      expect(z >= 0, l, rule);
      const long k = rule.kind == RuleKind::Omega000 ? 3 : rule.k;
      for (long i = 0; i <= k - 1; ++i) e.add(make_label({z + 1 - i}), binomial(z, i));
      break;
    }
    case RuleKind::Omega100: {
      expect_shape(l, 0, 2, rule);
      const long q = p[0], z = p[1];
      expect(q <= z && (q >= 1 || (q == 0 && z == 0)), l, rule);
      e.add(make_label({q + 1, z + 1}));
      e.add(make_label({q + 1, z}), z - q);
      for (long i = 1; i <= q; ++i) {
        for (long j = i; j <= z; ++j) e.add(make_label({i, j}), binomial(q - i, z - j));
        for (long j = i; j <= z - 1; ++j) {
          e.add(make_label({i, j}), binomial(q - i, z - j - 1) * (z - q));
        }
      }
      break;
    }
    case RuleKind::Omega010: {
      expect_shape(l, 0, 2, rule);
      const long q = p[0], c = p[1];
      expect(q >= 0 && c >= 0, l, rule);
      e.add(make_label({q + 1, c}));
      if (c > 0) e.add(make_label({q + 1, c - 1}));
      for (long ell = 1; ell <= q; ++ell) {
        for (long k = 0; k < ell; ++k) {
          e.add(make_label({q + 1 - ell, c + k}), binomial(c + k, k) * stirling1(ell, ell - k));
        }
      }
      break;
    }
    case RuleKind::Omega120: {
      if (l.tag != 0 || !l.params.empty() || l.composition.empty()) {
        throw UnknownLabel("label " + to_string(l) + " is not a zero-factor composition");
      }
      const auto& parts_in = l.composition;
      const long l0 = parts_in[0];
      const bool root = parts_in.size() == 1 && l0 == 0;
      expect(root || (l0 >= 1 && std::all_of(parts_in.begin() + 1, parts_in.end(),
                                             [](long x) { return x >= 1; })),
             l, rule);
      std::vector<long> parts;
      for_each_parts(l0 + 1, l0 + 1, parts, 0, [&](const std::vector<long>& q, long sum) {
        const long r = static_cast<long>(q.size()) - 1;
        e.add(make_composition(q), binomial(l0 + 1 - sum, r));
      });
      for (std::size_t i = 1; i < parts_in.size(); ++i) {
        const long li = parts_in[i];
        std::vector<long> prefix{l0 + 1};
        prefix.insert(prefix.end(), parts_in.begin() + 1, parts_in.begin() + static_cast<std::ptrdiff_t>(i));
        for_each_parts(li, li, parts, 0, [&](const std::vector<long>& q, long sum) {
          const long r = static_cast<long>(q.size()) - 1;
          std::vector<long> out = prefix;
          out.insert(out.end(), q.begin(), q.end());
          e.add(make_composition(std::move(out)), binomial(li + 1 - sum, r + 1));
        });
      }
      break;
    }
    case RuleKind::Omega120prime: {
      expect_shape(l, 0, 2, rule);
      const long q = p[0], c = p[1];
      expect(q >= 0 && c >= 0, l, rule);
      e.add(make_label({q + 1, c}));
      if (c > 0) e.add(make_label({q + 1, c - 1}));
      if (c == 0) {
        for (long ell = 1; ell <= q; ++ell) {
          for (long k = 0; k < ell; ++k) e.add(make_label({q + 1 - ell, k}), table_entry(TableKind::ALk, ell, k));
        }
      }
      break;
    }
    case RuleKind::Omega120doubleprime: {
      expect_shape(l, 0, 1, rule);
      const long q = p[0];
      expect(q >= 0, l, rule);
      e.add(make_label({q + 1}), 1, 1);
      for (long k = 1; k <= static_cast<long>(budget); ++k) {
        for (long ell = 1; ell <= q; ++ell) {
          e.add(make_label({q + k - ell}), table_entry(TableKind::BLk, ell, k), static_cast<int>(k));
        }
      }
      break;
    }
  }
  return std::move(e).items();
}

}  // namespace

std::vector<ProductionItem> production(RuleId rule, const Label& label, std::size_t level_budget) {
  return produce(rule, label, level_budget);
}

// ---------------------------------------------------------------------------
// Catalog

RuleId omega_0k(int k) {
  if (k < 2) throw UnsupportedCombination("Omega0k needs k >= 2");
  return RuleId{RuleKind::Omega0k, k};
}

namespace {

PatternSet ps(std::initializer_list<const char*> words) {
  PatternSet out;
  for (const char* w : words) out.push_back(parse_pattern(w));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

RuleInfo rule_info(RuleId id) {
  switch (id.kind) {
    case RuleKind::OmegaLeft:
      return {id, "OmegaLeft", "(0); (k) -> (i+1)^C(k,i) for i in [0,k]", "all nodes", {{}}, {}};
    case RuleKind::OmegaPCat:
      return {id, "OmegaPCat", "(0); (k) -> (k+1), (i)^i for i in [1,k]", "all nodes",
              {ps({"101"}), ps({"110"})}, {}};
    case RuleKind::Omega201_210:
      return {id, "Omega201_210",
              "(0); (s) -> (i) for i in [1,s+1], (i+1)^(2^(s-i)-1) for i in [1,s-1]", "all nodes",
              {ps({"201", "210"})}, {}};
    case RuleKind::Omega010_102:
      return {id, "Omega010_102",
              "(C,0); (C,z) ~1> (C,z+1), ~0> (B,z-1,2) if z>=2; (B,z,s) ~1> (P,z+1,s), ~0> (B,z-1,s+1) "
              "if z>=2; (P,z,s) ~1> (P,z+1,s), (R,z,s+1), (M,z,i) i in [3,s], ~0> (L,z-1); "
              "(L,z) ~1> (P,z+1,2), ~0> (L,z-1) if z>=2; (R,z,s) ~1> (P,z+1,s), (R,z,s+1); "
              "(M,z,s) ~1> (P,z+1,s), (M,z,s)",
              "all nodes", {ps({"010", "102"})}, {}};
    case RuleKind::Omega001:
      return {id, "Omega001", "(A,0); (A,z) -> (A,z+1), (B,i) i in [1,z]; (B,z) -> (B,i) i in [1,z]",
              "all nodes", {ps({"001"})}, {}};
    case RuleKind::Omega011:
      return {id, "Omega011", "(0); (z) -> (z)^z, (z+1)", "all nodes", {ps({"011"})}, {}};
    case RuleKind::Omega012:
      return {id, "Omega012",
              "(A,0); (A,z) -> (A,z+1), (B,i)^(2^(z-1-i)) i in [0,z-1]; (B,s) -> (B,s), "
              "(B,i)^(2^(s-1-i)) i in [0,s-1]",
              "all nodes", {ps({"012"})}, {}};
    case RuleKind::Omega021:
      return {id, "Omega021", "(0); (p) -> (p+1), (i)^(2^(p-i)) i in [1,p]", "all nodes",
              {ps({"021"})}, {}};
    case RuleKind::Omega101_110:
      return {id, "Omega101_110", "(0); (z) -> (z+1), (i)^i i in [1,z]", "all nodes",
              {ps({"101"}), ps({"110"})}, {}};
    case RuleKind::Omega102:
      return {id, "Omega102",
              "(0,0); (z,z) -> (z+1,z+1), (i,j)^C(z-i-1,z-j); s!=z: (s,z) -> (s,j) j in [s+1,z+1], "
              "(i,j)^sum_{k=s-j}^{z-j} C(s-i-1,k)",
              "all nodes", {ps({"102"})}, {}};
    case RuleKind::Omega201_210_table:
      return {id, "Omega201_210_table",
              "(0,0); (p,z) -> (p+1,j) j in [p+1,z+1], (i,j)^sum_{k=p-j}^{z-j} C(p-i,k) i in [1,p], j in [i,z]",
              "all nodes", {ps({"201"}), ps({"210"})}, {}};
    case RuleKind::Omega000:
      return {id, "Omega000", "(0); (z) -> (z-1)^C(z,2), (z)^z, (z+1)", "labels (0), (1), (2)",
              {ps({"000"})}, {}};
    case RuleKind::Omega0k: {
      PatternSet cls{Pattern(std::vector<Value>(static_cast<std::size_t>(id.k), 0))};
      return {id, "Omega0k:" + std::to_string(id.k), "(0); (z) -> (z+1-i)^C(z,i) for i in [0,k-1]",
              "labels (z) with z < " + std::to_string(id.k), {cls}, {}};
    }
    case RuleKind::Omega100:
      return {id, "Omega100",
              "(0,0); (p,z) -> (p+1,z+1), (p+1,z)^(z-p), (i,j)^C(p-i,z-j), (i,j)^(C(p-i,z-j-1)(z-p))",
              "labels (p,z) with z-p in {0,1}", {ps({"100"})}, {}};
    case RuleKind::Omega010:
      return {id, "Omega010",
              "(0,0); (p,c) -> (p+1,c), (p+1,c-1) if c>0, (p+1-l,c+k)^(C(c+k,k) [l,l-k]) 0<=k<l<=p",
              "labels (p,0)", {ps({"010"})}, {}};
    case RuleKind::Omega120:
      return {id, "Omega120",
              "(0); (l0..lk) -> (q0..qr)^C(l0+1-sum q, r), (l0+1,l1..l(i-1),q0..qr)^C(li+1-sum q, r+1)",
              "all nodes", {ps({"120"})}, std::size_t{18}};
    case RuleKind::Omega120prime:
      return {id, "Omega120prime",
              "(0,0); (p,c) -> (p+1,c), (p+1,c-1) if c>0, (p+1-l,k)^a(l,k) if c=0, 0<=k<l<=p",
              "labels (p,0)", {ps({"120"})}, {}};
    case RuleKind::Omega120doubleprime:
      return {id, "Omega120doubleprime", "(0); (p) ~1> (p+1), ~k> (p+k-l)^b(l,k) 1<=l<=p, k>=1",
              "all nodes", {ps({"120"})}, {}};
  }
  throw UnsupportedCombination("unknown rule");
}

std::vector<RuleInfo> rule_catalog() {
  std::vector<RuleInfo> out;
  for (RuleKind kind :
       {RuleKind::OmegaLeft, RuleKind::OmegaPCat, RuleKind::Omega201_210, RuleKind::Omega010_102,
        RuleKind::Omega001, RuleKind::Omega011, RuleKind::Omega012, RuleKind::Omega021,
        RuleKind::Omega101_110, RuleKind::Omega102, RuleKind::Omega201_210_table, RuleKind::Omega000}) {
    out.push_back(rule_info(RuleId{kind, 0}));
  }
  for (int k = 2; k <= 4; ++k) out.push_back(rule_info(omega_0k(k)));
  for (RuleKind kind : {RuleKind::Omega100, RuleKind::Omega010, RuleKind::Omega120,
                        RuleKind::Omega120prime, RuleKind::Omega120doubleprime}) {
    out.push_back(rule_info(RuleId{kind, 0}));
  }
  return out;
}

RuleId parse_rule_id(std::string_view name) {
  if (name.starts_with("Omega0k:")) {
    const std::string digits(name.substr(8));
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
      throw ParseError("malformed rule id '" + std::string(name) + "'");
    }
    return omega_0k(std::stoi(digits));
  }
  for (const RuleInfo& info : rule_catalog()) {
    if (info.id.kind != RuleKind::Omega0k && info.name == name) return info.id;
  }
  throw ParseError("unknown rule id '" + std::string(name) + "'");
}

std::optional<RuleId> rule_for_class(const PatternSet& patterns) {
  PatternSet sorted = patterns;
  std::sort(sorted.begin(), sorted.end());
  const std::string key = to_literal(sorted);
  if (key == "none") return RuleId{RuleKind::OmegaLeft, 0};
  if (key == "201,210") return RuleId{RuleKind::Omega201_210, 0};
  if (key == "010,102") return RuleId{RuleKind::Omega010_102, 0};
  if (key == "001") return RuleId{RuleKind::Omega001, 0};
  if (key == "011") return RuleId{RuleKind::Omega011, 0};
  if (key == "012") return RuleId{RuleKind::Omega012, 0};
  if (key == "021") return RuleId{RuleKind::Omega021, 0};
  if (key == "101" || key == "110") return RuleId{RuleKind::Omega101_110, 0};
  if (key == "102") return RuleId{RuleKind::Omega102, 0};
  if (key == "201" || key == "210") return RuleId{RuleKind::Omega201_210_table, 0};
  if (key == "000") return RuleId{RuleKind::Omega000, 0};
  if (key == "100") return RuleId{RuleKind::Omega100, 0};
  if (key == "010") return RuleId{RuleKind::Omega010, 0};
  if (key == "120") return RuleId{RuleKind::Omega120prime, 0};
  if (sorted.size() == 1 && sorted[0].is_constant() && sorted[0].length() >= 2) {
    return omega_0k(static_cast<int>(sorted[0].length()));
  }
  return std::nullopt;
}

Label axiom(RuleId rule) {
  switch (rule.kind) {
    case RuleKind::Omega010_102: return make_label('C', {0});
    case RuleKind::Omega001:
    case RuleKind::Omega012: return make_label('A', {0});
    case RuleKind::Omega102:
    case RuleKind::Omega201_210_table:
    case RuleKind::Omega100:
    case RuleKind::Omega010:
    case RuleKind::Omega120prime: return make_label({0, 0});
    case RuleKind::Omega120: return make_composition({0});
    default: return make_label({0});
  }
}

bool counted(RuleId rule, const Label& label) {
  switch (rule.kind) {
    case RuleKind::Omega000: return label.params.at(0) < 3;
    case RuleKind::Omega0k: return label.params.at(0) < rule.k;
    case RuleKind::Omega100: {
      const long d = label.params.at(1) - label.params.at(0);
      return d == 0 || d == 1;
    }
    case RuleKind::Omega010:
    case RuleKind::Omega120prime: return label.params.at(1) == 0;
    default: return true;
  }
}

// ---------------------------------------------------------------------------
// Level counting

namespace {

bool has_zero_jumps(RuleId rule) { return rule.kind == RuleKind::Omega010_102; }

LevelCounts run_levels(RuleId rule, std::size_t n_max, bool keep_distribution, bool filtered) {
  if (auto limit = rule_info(rule).level_limit; limit && n_max > *limit) {
    throw LimitExceeded(rule_info(rule).name + " is limited to " + std::to_string(*limit) + " levels");
  }
  std::vector<std::map<Label, BigInt>> levels(n_max + 1);
  levels[0][axiom(rule)] = 1;
  LevelCounts out;
  out.totals.assign(n_max + 1, 0);
  for (std::size_t n = 0; n <= n_max; ++n) {
    const std::size_t budget = n_max - n;
    auto& here = levels[n];
    if (has_zero_jumps(rule)) {
      std::map<Label, BigInt> frontier = here;
      // Zero-length edges lower the zero count, so at most n + 1 rounds.
      for (std::size_t round = 0; !frontier.empty(); ++round) {
        if (round > n + 1) throw Error("zero-length edges did not reach a fixpoint");
        std::map<Label, BigInt> next;
        for (const auto& [label, count] : frontier) {
          for (const ProductionItem& item : production(rule, label, budget)) {
            if (item.jump == 0) next[item.label] += count * item.multiplicity;
          }
        }
        for (const auto& [label, count] : next) here[label] += count;
        frontier = std::move(next);
      }
    }
    for (const auto& [label, count] : here) {
      if (!filtered || counted(rule, label)) out.totals[n] += count;
      if (n == n_max) continue;
      for (const ProductionItem& item : production(rule, label, budget)) {
        if (item.jump == 0) continue;
        levels[n + static_cast<std::size_t>(item.jump)][item.label] += count * item.multiplicity;
      }
    }
    if (keep_distribution) {
      if (filtered) std::erase_if(here, [&](const auto& kv) { return !counted(rule, kv.first); });
      out.distribution.push_back(std::move(here));
    }
    here.clear();
  }
  return out;
}

}  // namespace

LevelCounts level_counts(RuleId rule, std::size_t n_max, bool keep_distribution) {
  return run_levels(rule, n_max, keep_distribution, false);
}

LevelCounts counted_levels(RuleId rule, std::size_t n_max, bool keep_distribution) {
  return run_levels(rule, n_max, keep_distribution, true);
}

// ---------------------------------------------------------------------------
// Statistic labels

bool has_statistic_labels(RuleId rule) {
  switch (rule.kind) {
    case RuleKind::Omega010:
    case RuleKind::Omega120prime:
    case RuleKind::Omega120doubleprime:
    case RuleKind::Omega010_102: return false;
    default: return true;
  }
}

Label label_of_sequence(RuleId rule, const InversionSequence& sigma) {
  if (!has_statistic_labels(rule)) {
    throw UnsupportedCombination("NotApplicable: " + rule_info(rule).name +
                                 " labels are not sequence statistics");
  }
  const SequenceStats st = statistics(sigma);
  const auto z = static_cast<long>(st.z);
  const auto pre = static_cast<long>(st.prefix_zeros);
  const auto suf = static_cast<long>(st.suffix_zeros);
  switch (rule.kind) {
    case RuleKind::OmegaLeft:
    case RuleKind::OmegaPCat:
    case RuleKind::Omega101_110:
    case RuleKind::Omega011:
    case RuleKind::Omega000:
    case RuleKind::Omega0k: return make_label({z});
    case RuleKind::Omega201_210: return make_label({static_cast<long>(st.s201210)});
    case RuleKind::Omega021: return make_label({pre});
    case RuleKind::Omega001: return make_label(st.constant ? 'A' : 'B', {z});
    case RuleKind::Omega012: return st.constant ? make_label('A', {z}) : make_label('B', {suf});
    case RuleKind::Omega102: return make_label({suf, z});
    case RuleKind::Omega201_210_table:
    case RuleKind::Omega100: return make_label({pre, z});
    case RuleKind::Omega120: {
      if (sigma.empty()) return make_composition({0});
      std::vector<long> parts;
      long run = 0;
      for (Value v : sigma.entries()) {
        if (v == 0) {
          ++run;
        } else if (run > 0) {
          parts.push_back(run);
          run = 0;
        }
      }
      if (run > 0) parts.push_back(run);
      return make_composition(std::move(parts));
    }
    default: break;
  }
  throw UnsupportedCombination("NotApplicable");
}

}  // namespace invseq
