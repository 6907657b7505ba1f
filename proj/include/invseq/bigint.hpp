#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace invseq {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Level (or size) indexed counts.
using CountTable = std::vector<BigInt>;

inline std::string to_decimal(const BigInt& x) { return x.get_str(10); }

/// "p" for integers, "p/q" otherwise.
inline std::string to_decimal(const Rational& x) {
  return x.get_den() == 1 ? x.get_num().get_str(10) : x.get_str(10);
}

}  // namespace invseq
