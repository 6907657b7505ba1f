#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "invseq/bigint.hpp"

namespace invseq {

enum class OeisSource { Cache, Network };

struct OeisSequence {
  std::string id;  // "A000110"
  std::vector<std::pair<long, BigInt>> terms;  // strictly increasing indices
  OeisSource source = OeisSource::Cache;
};

struct OeisOptions {
  bool allow_network = true;
  std::filesystem::path cache_dir;
  std::size_t max_terms = 0;  // 0 keeps every term
};

/// Cache directory from INVSEQ_OEIS_CACHE, else $XDG_CACHE_HOME/invseq/oeis,
/// else ~/.cache/invseq/oeis. Networking is off when INVSEQ_OFFLINE is set
/// to anything but "" or "0".
OeisOptions oeis_options_from_env();

bool is_oeis_id(std::string_view id) noexcept;

/// Parses b-file text. Blank lines and '#' comments are skipped; any other
/// line must be "<index> <value>". Throws ParseError.
std::vector<std::pair<long, BigInt>> parse_b_file(std::string_view body);

/// Serves the cache when it has the id, otherwise downloads the b-file and
/// stores the raw body. Throws NetworkDisabled, HttpFailure or ParseError.
OeisSequence oeis_fetch(std::string_view id, const OeisOptions& options);

struct OeisAlignment {
  int delta = 0;             // local[n] is compared with the term indexed n + delta
  std::size_t compared = 0;  // number of terms compared
};

/// Tries delta = 0, -1, +1 in that order and returns the first alignment
/// under which every overlapping term agrees, with at least `min_overlap`
/// terms compared.
std::optional<OeisAlignment> align_prefix(const OeisSequence& sequence, const CountTable& local,
                                          std::size_t min_overlap = 5);

}  // namespace invseq
