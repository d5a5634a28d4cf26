#pragma once

// Line-delimited JSON for profiles and committees, and PrefLib SOC text.

#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "mwv/profile.hpp"
#include "mwv/random.hpp"

namespace mwv {

using Json = nlohmann::json;

// Calls fn(record, line_number) for each non-blank line. A line that is not
// complete JSON (including a truncated last line) raises ParseError before
// anything from it is handed on.
template <class Fn>
void for_each_json_line(std::istream& in, Fn&& fn) {
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    Json record;
    try {
      record = Json::parse(line);
    } catch (const Json::parse_error& e) {
      throw ParseError(number, std::string("malformed JSON record (") + e.what() + ")");
    }
    if (!record.is_object()) throw ParseError(number, "record is not a JSON object");
    fn(record, number);
  }
}

inline std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open '" + path + "' for reading");
  return in;
}

inline std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot open '" + path + "' for writing");
  return out;
}

namespace detail {

template <class T>
T field(const Json& record, const char* key, std::size_t line) {
  auto it = record.find(key);
  if (it == record.end()) throw ParseError(line, std::string("missing field '") + key + "'");
  try {
    return it->get<T>();
  } catch (const Json::exception&) {
    throw ParseError(line, std::string("field '") + key + "' has the wrong type");
  }
}

// Records carry their position as "index" (or "profile_index" in committee
// files); when present it must equal the record's position.
inline bool has_index(const Json& record) { return record.contains("index") || record.contains("profile_index"); }

inline void check_index(const Json& record, std::size_t expected, std::size_t line) {
  if (!has_index(record)) return;
  const auto index = field<long long>(record, record.contains("index") ? "index" : "profile_index", line);
  if (index < 0 || static_cast<std::size_t>(index) != expected) {
    throw ParseError(line, "expected index " + std::to_string(expected) + ", found " + std::to_string(index));
  }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Profiles: {"index", "m", "n", "dist"?, "seed"?, "rankings": [[...], ...]}

struct ProfileRecord {
  PreferenceProfile profile;
  std::optional<std::uint64_t> seed;
  std::string dist;
};

inline Json profile_to_json(const PreferenceProfile& p, std::size_t index,
                            std::optional<std::uint64_t> seed = std::nullopt, const std::string& dist = "") {
  Json j{{"index", index}, {"m", p.num_alternatives()}, {"n", p.num_voters()}};
  if (!dist.empty()) j["dist"] = dist;
  if (seed) j["seed"] = *seed;
  j["rankings"] = p.rankings();
  return j;
}

inline void write_profiles(std::ostream& out, const std::vector<ProfileRecord>& records) {
  for (std::size_t i = 0; i < records.size(); ++i) {
    out << profile_to_json(records[i].profile, i, records[i].seed, records[i].dist).dump() << '\n';
  }
}

inline void write_profiles(std::ostream& out, const std::vector<PreferenceProfile>& profiles) {
  for (std::size_t i = 0; i < profiles.size(); ++i) out << profile_to_json(profiles[i], i).dump() << '\n';
}

inline std::vector<ProfileRecord> read_profile_records(std::istream& in) {
  std::vector<ProfileRecord> out;
  for_each_json_line(in, [&](const Json& r, std::size_t line) {
    detail::check_index(r, out.size(), line);
    const int m = detail::field<int>(r, "m", line);
    auto rankings = detail::field<std::vector<Ranking>>(r, "rankings", line);
    if (r.contains("n") && detail::field<std::size_t>(r, "n", line) != rankings.size()) {
      throw ParseError(line, "field 'n' does not match the number of rankings");
    }
    try {
      ProfileRecord rec{PreferenceProfile(m, std::move(rankings)), std::nullopt, ""};
      if (r.contains("seed")) rec.seed = detail::field<std::uint64_t>(r, "seed", line);
      if (r.contains("dist")) rec.dist = detail::field<std::string>(r, "dist", line);
      out.push_back(std::move(rec));
    } catch (const ParameterError& e) {
      throw ParseError(line, e.what());
    }
  });
  return out;
}

inline std::vector<PreferenceProfile> read_profiles(std::istream& in) {
  std::vector<PreferenceProfile> out;
  for (auto& r : read_profile_records(in)) out.push_back(std::move(r.profile));
  return out;
}

inline std::vector<PreferenceProfile> read_profiles(const std::string& path) {
  auto in = open_input(path);
  return read_profiles(in);
}

// ---------------------------------------------------------------------------
// Committees: {"profile_index": i, "rule"?, "committee": [...]}

inline Json committee_to_json(const Committee& c, std::size_t index) {
  return Json{{"profile_index", index}, {"committee", c.members()}};
}

inline void write_committees(std::ostream& out, const std::vector<Committee>& committees) {
  for (std::size_t i = 0; i < committees.size(); ++i) out << committee_to_json(committees[i], i).dump() << '\n';
}

// ---------------------------------------------------------------------------
// PrefLib SOC: '#' metadata lines, then "<count>: <a>,<b>,..." with 1-based ids.

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

inline std::optional<long> parse_long(std::string_view s) {
  s = trim(s);
  long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

}  // namespace detail

inline PreferenceProfile parse_soc(std::istream& in) {
  std::optional<int> declared_m;
  std::vector<Ranking> rankings;
  int m = 0;
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    std::string_view line = detail::trim(raw);
    if (line.empty()) continue;
    if (line.front() == '#') {
      constexpr std::string_view key = "NUMBER ALTERNATIVES:";
      if (auto pos = line.find(key); pos != std::string_view::npos) {
        auto v = detail::parse_long(line.substr(pos + key.size()));
        if (!v || *v < 2 || *v > kMaxAlternatives) throw ParseError(number, "invalid NUMBER ALTERNATIVES");
        declared_m = static_cast<int>(*v);
      }
      continue;
    }
    auto colon = line.find(':');
    if (colon == std::string_view::npos) throw ParseError(number, "expected '<count>: <ranking>'");
    auto count = detail::parse_long(line.substr(0, colon));
    if (!count || *count < 1) throw ParseError(number, "invalid voter count");
    Ranking r;
    std::string_view rest = line.substr(colon + 1);
    while (true) {
      auto comma = rest.find(',');
      auto token = rest.substr(0, comma);
      if (detail::trim(token).starts_with('{')) throw ParseError(number, "ties are not allowed in SOC data");
      auto id = detail::parse_long(token);
      if (!id) throw ParseError(number, "invalid alternative id '" + std::string(detail::trim(token)) + "'");
      r.push_back(static_cast<Alternative>(*id - 1));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (m == 0) m = declared_m.value_or(static_cast<int>(r.size()));
    for (Alternative a : r) {
      if (a < 0 || a >= m) throw ParseError(number, "unknown alternative id " + std::to_string(a + 1));
    }
    if (!PreferenceProfile::is_permutation(r, m)) {
      throw ParseError(number, "ranking is not a strict complete order of " + std::to_string(m) + " alternatives");
    }
    for (long i = 0; i < *count; ++i) rankings.push_back(r);
  }
  if (rankings.empty()) throw ParseError(number, "no preference data");
  try {
    return PreferenceProfile(m, std::move(rankings));
  } catch (const ParameterError& e) {
    throw ParseError(number, e.what());
  }
}

inline PreferenceProfile parse_soc(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_soc(in);
}

// Groups identical rankings, most frequent first (first occurrence on ties).
inline std::string write_soc(const PreferenceProfile& p) {
  std::vector<std::pair<Ranking, long>> groups;
  for (const auto& r : p.rankings()) {
    auto it = std::find_if(groups.begin(), groups.end(), [&](const auto& g) { return g.first == r; });
    if (it == groups.end()) {
      groups.emplace_back(r, 1);
    } else {
      ++it->second;
    }
  }
  std::stable_sort(groups.begin(), groups.end(), [](const auto& a, const auto& b) { return a.second > b.second; });
  std::ostringstream out;
  out << "# DATA TYPE: soc\n";
  out << "# NUMBER ALTERNATIVES: " << p.num_alternatives() << '\n';
  out << "# NUMBER VOTERS: " << p.num_voters() << '\n';
  out << "# NUMBER UNIQUE ORDERS: " << groups.size() << '\n';
  for (const auto& [r, count] : groups) {
    out << count << ':';
    for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : " ") << r[i] + 1;
    out << '\n';
  }
  return out.str();
}

}  // namespace mwv
