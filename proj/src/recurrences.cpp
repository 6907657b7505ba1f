#include "invseq/recurrences.hpp"

#include <algorithm>

#include "invseq/errors.hpp"
#include "invseq/patterns.hpp"
#include "invseq/statistics.hpp"

namespace invseq {

namespace {

const BigInt& zero() {
  static const BigInt z = 0;
  return z;
}

bool in_support(long n, long z, long s) {
  return n >= 3 && z >= 2 && z <= n - 1 && s >= 2 && s <= n - z + 1;
}

// Rolling state for one level n: the table slice b(n,.,.), the diagonal sums
// D(n,z,s) = sum_{k>=0} b(n-k,z,s-k), the cumulative tail sums
// S3(n,z,s) = sum_{n'<=n} sum_{s'>=s} b(n',z,s'), and suffix marginals
// S1(n,z) = sum_{z'>=z} b(n,z').
struct Slice {
  std::size_t width = 0;  // z and s both range over [0, width)
  std::vector<BigInt> b, diag, tail;
  std::vector<BigInt> s1;

  explicit Slice(std::size_t w) : width(w), b(w * w), diag(w * w), tail(w * w), s1(w + 1) {}

  static const BigInt& get(const std::vector<BigInt>& v, std::size_t w, long z, long s) {
    if (z < 0 || s < 0 || static_cast<std::size_t>(z) >= w || static_cast<std::size_t>(s) >= w) return zero();
    return v[static_cast<std::size_t>(z) * w + static_cast<std::size_t>(s)];
  }
  const BigInt& b_at(long z, long s) const { return get(b, width, z, s); }
  const BigInt& diag_at(long z, long s) const { return get(diag, width, z, s); }
  const BigInt& tail_at(long z, long s) const { return get(tail, width, z, s); }
  const BigInt& s1_at(long z) const {
    if (z < 0) return s1[0];
    return static_cast<std::size_t>(z) < s1.size() ? s1[static_cast<std::size_t>(z)] : zero();
  }
};

// Fills slice n from slices n-1 and n-2. `prev2` may be null for n < 2.
void fill_slice(long n, const Slice* prev1, const Slice* prev2, Slice& out) {
  const std::size_t w = out.width;
  for (long z = 2; z <= n - 1; ++z) {
    for (long s = 2; s <= n - z + 1; ++s) {
      BigInt v = prev1 ? prev1->b_at(z - 1, s) : BigInt(0);
      if (z + s == n + 1) v += 1;
      if (s == 2 && prev1) v += prev1->s1_at(z);
      if (prev2) {
        // sum_{k>=1} b(n-k-1, z-1, s-k) runs down the diagonal through (n-2, z-1, s-1).
        v += prev2->diag_at(z - 1, s - 1);
        if (s >= 3) v += prev2->tail_at(z - 1, s);
      }
      out.b[static_cast<std::size_t>(z) * w + static_cast<std::size_t>(s)] = std::move(v);
    }
  }
  for (std::size_t z = 0; z < w; ++z) {
    BigInt row_tail = 0;
    for (std::size_t s = w; s-- > 0;) {
      const std::size_t i = z * w + s;
      row_tail += out.b[i];
      out.tail[i] = row_tail + (prev1 ? prev1->tail_at(static_cast<long>(z), static_cast<long>(s)) : zero());
      out.diag[i] = out.b[i] + (prev1 ? prev1->diag_at(static_cast<long>(z), static_cast<long>(s) - 1) : zero());
    }
  }
  out.s1[w] = 0;
  for (std::size_t z = w; z-- > 0;) {
    BigInt row = 0;
    for (std::size_t s = 0; s < w; ++s) row += out.b[z * w + s];
    out.s1[z] = out.s1[z + 1] + row;
  }
}

BigInt slice_total(const Slice& s) { return s.s1[0]; }

// Runs the recurrence for n = 0..n_max, handing each finished slice to `keep`.
template <typename Keep>
void run_recurrence(std::size_t n_max, Keep&& keep) {
  const std::size_t w = n_max + 2;
  std::array<Slice, 3> ring{Slice(w), Slice(w), Slice(w)};
  for (std::size_t n = 0; n <= n_max; ++n) {
    Slice& cur = ring[n % 3];
    cur = Slice(w);
    const Slice* prev1 = n >= 1 ? &ring[(n + 2) % 3] : nullptr;
    const Slice* prev2 = n >= 2 ? &ring[(n + 1) % 3] : nullptr;
    fill_slice(static_cast<long>(n), prev1, prev2, cur);
    keep(n, cur);
  }
}

}  // namespace

BTable::BTable(std::size_t n_max)
    : n_max_(n_max),
      stride_z_(n_max + 2),
      stride_s_(n_max + 2),
      cells_((n_max + 1) * (n_max + 2) * (n_max + 2)),
      totals_(n_max + 1, 0) {}

const BigInt& BTable::b(long n, long z, long s) const {
  if (n < 0 || z < 0 || s < 0 || static_cast<std::size_t>(n) > n_max_ ||
      static_cast<std::size_t>(z) >= stride_z_ || static_cast<std::size_t>(s) >= stride_s_) {
    return zero();
  }
  return cells_[index(static_cast<std::size_t>(n), static_cast<std::size_t>(z), static_cast<std::size_t>(s))];
}

BigInt BTable::b(long n, long z) const {
  BigInt sum = 0;
  for (long s = 0; s < static_cast<long>(stride_s_); ++s) sum += b(n, z, s);
  return sum;
}

BTable build_b_table(std::size_t n_max) {
  BTable table(n_max);
  run_recurrence(n_max, [&](std::size_t n, const Slice& slice) {
    for (std::size_t z = 0; z < slice.width; ++z) {
      for (std::size_t s = 0; s < slice.width; ++s) table.at(n, z, s) = slice.b[z * slice.width + s];
    }
    table.totals_[n] = slice_total(slice);
  });
  return table;
}

CountTable b_totals_streaming(std::size_t n_max) {
  CountTable out(n_max + 1);
  run_recurrence(n_max, [&](std::size_t n, const Slice& slice) { out[n] = slice_total(slice); });
  return out;
}

CountTable count_010_102(std::size_t n_max) {
  const CountTable b = b_totals_streaming(n_max + 1);
  CountTable out(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) out[n] = b[n + 1] + 1;
  return out;
}

BCensusReport brute_b_check(std::size_t n_max) {
  if (n_max > kBruteCensusLimit) {
    throw LimitExceeded("brute_b_check is limited to n <= " + std::to_string(kBruteCensusLimit));
  }
  BCensusReport report;
  report.n_max = n_max;
  for (std::size_t n = 0; n <= n_max; ++n) {
    for_each_avoider(n, patterns_010_102(), [&](std::span<const Value> entries) {
      bool has_one = false;
      bool constant = true;
      for (Value v : entries) {
        has_one = has_one || v == 1;
        constant = constant && v == entries[0];
      }
      if (has_one || constant) return;
      const InversionSequence sigma = InversionSequence::from_trusted({entries.begin(), entries.end()});
      const SequenceStats st = statistics(sigma);
      const PositionSet sites = active_sites(sigma);
      const long z = static_cast<long>(st.z);
      const long s = static_cast<long>(sites.size());
      report.census[{static_cast<long>(n), z, s}] += 1;
      if (n < 2 || entries[0] != 0 || entries[1] != 0) report.starts_with_00 = false;
      auto has = [&](Position p) { return std::find(sites.begin(), sites.end(), p) != sites.end(); };
      if (!has(st.z + 1) || !has(n + 1)) report.ends_active = false;
    });
  }
  const BTable table = build_b_table(n_max);
  for (const auto& [key, count] : report.census) {
    if (!in_support(key[0], key[1], key[2])) report.support_ok = false;
  }
  for (long n = 0; n <= static_cast<long>(n_max); ++n) {
    for (long z = 0; z <= n + 1; ++z) {
      for (long s = 0; s <= n + 1; ++s) {
        auto it = report.census.find({n, z, s});
        const BigInt expected = it == report.census.end() ? BigInt(0) : it->second;
        const BigInt& got = table.b(n, z, s);
        if (got != 0 && !in_support(n, z, s)) report.support_ok = false;
        if (got != expected) {
          report.tables_equal = false;
          report.mismatches.push_back("b(" + std::to_string(n) + "," + std::to_string(z) + "," +
                                      std::to_string(s) + ") = " + to_decimal(got) + ", census " +
                                      to_decimal(expected));
        }
      }
    }
  }
  return report;
}

PowerSeries b_series(int order) {
  if (order < 0) return PowerSeries();
  return PowerSeries::from_integers(b_totals_streaming(static_cast<std::size_t>(order)), order);
}

PowerSeries f_series_from_recurrence(int order) {
  if (order < 0) return PowerSeries();
  const int m = order + 1;
  const PowerSeries b = b_series(m);
  const PowerSeries one = PowerSeries::constant(1, m);
  const PowerSeries geometric = one / (one - PowerSeries::from_integers({0, 1}, m));
  return (b + geometric - one).shifted_down(1);
}

}  // namespace invseq
