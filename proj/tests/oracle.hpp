#pragma once
// Definition-level oracles for the tests: plain loops over index subsets,
// sharing no code with the library's scanner or trees.

#include <cstdint>
#include <functional>
#include <vector>

namespace oracle {

using Word = std::vector<int>;

inline bool order_isomorphic(const Word& a, const Word& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      if ((a[i] < a[j]) != (b[i] < b[j]) || (a[i] == a[j]) != (b[i] == b[j])) return false;
    }
  }
  return true;
}

// Every increasing index tuple of length |rho|.
inline bool contains(const Word& sigma, const Word& rho) {
  const std::size_t k = rho.size();
  if (k > sigma.size()) return false;
  Word sub(k);
  std::function<bool(std::size_t, std::size_t)> pick = [&](std::size_t from, std::size_t depth) {
    if (depth == k) return order_isomorphic(sub, rho);
    for (std::size_t i = from; i + (k - depth) <= sigma.size(); ++i) {
      sub[depth] = sigma[i];
      if (pick(i + 1, depth + 1)) return true;
    }
    return false;
  };
  return pick(0, 0);
}

inline bool avoids_all(const Word& sigma, const std::vector<Word>& patterns) {
  for (const Word& rho : patterns) {
    if (contains(sigma, rho)) return false;
  }
  return true;
}

// Odometer over [0,0] x [0,1] x ... x [0,n-1].
inline void for_each_inversion_sequence(std::size_t n, const std::function<void(const Word&)>& visit) {
  Word s(n, 0);
  while (true) {
    visit(s);
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (s[i] < static_cast<int>(i)) {
        ++s[i];
        break;
      }
      s[i] = 0;
      if (i == 0) return;
    }
    if (n == 0) return;
  }
}

inline std::vector<Word> avoiders(std::size_t n, const std::vector<Word>& patterns) {
  std::vector<Word> out;
  for_each_inversion_sequence(n, [&](const Word& s) {
    if (avoids_all(s, patterns)) out.push_back(s);
  });
  return out;
}

inline std::vector<std::uint64_t> counts(std::size_t n_max, const std::vector<Word>& patterns) {
  std::vector<std::uint64_t> out;
  for (std::size_t n = 0; n <= n_max; ++n) out.push_back(avoiders(n, patterns).size());
  return out;
}

inline Word word(const char* digits) {
  Word w;
  for (const char* p = digits; *p; ++p) w.push_back(*p - '0');
  return w;
}

}  // namespace oracle
