#include "invseq/oeis.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "invseq/errors.hpp"

#ifdef INVSEQ_HAVE_HTTPS
#include <httplib.h>
#endif

namespace invseq {

namespace {

std::string env_or_empty(const char* name) {
  const char* v = std::getenv(name);
  return v ? std::string(v) : std::string();
}

std::string fetch_body(const std::string& id) {
#ifdef INVSEQ_HAVE_HTTPS
  httplib::SSLClient client("oeis.org", 443);
  client.set_follow_location(true);
  client.set_connection_timeout(15);
  client.set_read_timeout(30);
  const std::string path = "/" + id + "/b" + id.substr(1) + ".txt";
  auto res = client.Get(path);
  if (!res) throw HttpFailure("GET https://oeis.org" + path + ": " + httplib::to_string(res.error()));
  if (res->status != 200) {
    throw HttpFailure("GET https://oeis.org" + path + ": HTTP " + std::to_string(res->status));
  }
  return res->body;
#else
  throw NetworkDisabled("built without HTTPS support, cannot fetch " + id);
#endif
}

}  // namespace

OeisOptions oeis_options_from_env() {
  OeisOptions options;
  const std::string offline = env_or_empty("INVSEQ_OFFLINE");
  options.allow_network = offline.empty() || offline == "0";
  if (std::string dir = env_or_empty("INVSEQ_OEIS_CACHE"); !dir.empty()) {
    options.cache_dir = dir;
  } else if (std::string xdg = env_or_empty("XDG_CACHE_HOME"); !xdg.empty()) {
    options.cache_dir = std::filesystem::path(xdg) / "invseq" / "oeis";
  } else {
    const std::string home = env_or_empty("HOME");
    options.cache_dir = std::filesystem::path(home.empty() ? "." : home) / ".cache" / "invseq" / "oeis";
  }
  return options;
}

bool is_oeis_id(std::string_view id) noexcept {
  if (id.size() != 7 || id[0] != 'A') return false;
  for (char c : id.substr(1)) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

std::vector<std::pair<long, BigInt>> parse_b_file(std::string_view body) {
  std::vector<std::pair<long, BigInt>> terms;
  std::istringstream in{std::string(body)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    std::string index_text, value_text, extra;
    fields >> index_text >> value_text;
    auto bad = [&] { return ParseError("b-file line " + std::to_string(line_no) + ": '" + line + "'"); };
    if (value_text.empty() || (fields >> extra && extra[0] != '#')) throw bad();
    long index = 0;
    BigInt value;
    try {
      std::size_t used = 0;
      index = std::stol(index_text, &used);
      if (used != index_text.size()) throw bad();
    } catch (const std::logic_error&) {
      throw bad();
    }
    if (value.set_str(value_text, 10) != 0) throw bad();
    if (!terms.empty() && index <= terms.back().first) throw bad();
    terms.emplace_back(index, std::move(value));
  }
  return terms;
}

OeisSequence oeis_fetch(std::string_view id_view, const OeisOptions& options) {
  const std::string id(id_view);
  if (!is_oeis_id(id)) throw ParseError("not an OEIS id: '" + id + "'");
  OeisSequence seq;
  seq.id = id;
  const std::filesystem::path cached = options.cache_dir / (id + ".txt");
  std::string body;
  if (!options.cache_dir.empty() && std::filesystem::exists(cached)) {
    std::ifstream in(cached, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    body = buf.str();
    seq.source = OeisSource::Cache;
  } else {
    if (!options.allow_network) throw NetworkDisabled(id + " is not cached and networking is off");
    body = fetch_body(id);
    seq.source = OeisSource::Network;
    // Parse before caching so a malformed body is never stored.
    parse_b_file(body);
    if (!options.cache_dir.empty()) {
      std::filesystem::create_directories(options.cache_dir);
      std::ofstream out(cached, std::ios::binary);
      out << body;
    }
  }
  seq.terms = parse_b_file(body);
  if (options.max_terms != 0 && seq.terms.size() > options.max_terms) seq.terms.resize(options.max_terms);
  return seq;
}

std::optional<OeisAlignment> align_prefix(const OeisSequence& sequence, const CountTable& local,
                                          std::size_t min_overlap) {
  std::map<long, const BigInt*> by_index;
  for (const auto& [index, value] : sequence.terms) by_index[index] = &value;
  for (int delta : {0, -1, 1}) {
    OeisAlignment a{delta, 0};
    bool agree = true;
    for (std::size_t n = 0; n < local.size() && agree; ++n) {
      auto it = by_index.find(static_cast<long>(n) + delta);
      if (it == by_index.end()) continue;
      agree = *it->second == local[n];
      ++a.compared;
    }
    if (agree && a.compared >= min_overlap) return a;
  }
  return std::nullopt;
}

}  // namespace invseq
