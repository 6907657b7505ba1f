#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "invseq/bigint.hpp"
#include "invseq/series.hpp"

namespace invseq {

/// b_{n,z,s}: sequences of size n avoiding 010 and 102, with no entry 1,
/// not constant, with z zeros and s active sites. Stored densely for
/// n <= n_max, z <= n, s <= n + 1.
class BTable {
 public:
  BTable() = default;
  explicit BTable(std::size_t n_max);

  std::size_t n_max() const noexcept { return n_max_; }

  /// Zero outside the stored range.
  const BigInt& b(long n, long z, long s) const;
  BigInt b(long n, long z) const;
  const BigInt& b(long n) const { return totals_.at(static_cast<std::size_t>(n)); }
  const CountTable& totals() const noexcept { return totals_; }

 private:
  friend BTable build_b_table(std::size_t n_max);

  std::size_t index(std::size_t n, std::size_t z, std::size_t s) const noexcept {
    return (n * stride_z_ + z) * stride_s_ + s;
  }
  BigInt& at(std::size_t n, std::size_t z, std::size_t s) { return cells_[index(n, z, s)]; }

  std::size_t n_max_ = 0;
  std::size_t stride_z_ = 0;
  std::size_t stride_s_ = 0;
  std::vector<BigInt> cells_;
  CountTable totals_;
};

BTable build_b_table(std::size_t n_max);

/// b_0..b_{n_max} keeping only the slices the recurrence reads, for sizes
/// where the full table is too large.
CountTable b_totals_streaming(std::size_t n_max);

/// |I_n(010,102)| = b_{n+1} + 1 for n <= n_max.
CountTable count_010_102(std::size_t n_max);

struct BCensusReport {
  std::size_t n_max = 0;
  /// (n, z, s) -> number of enumerated sequences.
  std::map<std::array<long, 3>, BigInt> census;
  std::vector<std::string> mismatches;
  bool tables_equal = true;
  bool support_ok = true;      // every census key inside the recurrence support
  bool starts_with_00 = true;  // every enumerated sequence begins 0,0
  bool ends_active = true;     // z+1 and n+1 are active sites

  bool ok() const noexcept { return tables_equal && support_ok && starts_with_00 && ends_active; }
};

inline constexpr std::size_t kBruteCensusLimit = 11;

/// Enumerates the sequences behind b_{n,z,s} directly and compares with
/// build_b_table. Throws LimitExceeded above kBruteCensusLimit.
BCensusReport brute_b_check(std::size_t n_max);

/// sum b_n t^n to order N.
PowerSeries b_series(int order);

/// F = (B + 1/(1-t) - 1) / t to order N.
PowerSeries f_series_from_recurrence(int order);

}  // namespace invseq
