#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <istream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "thvg/ingest_io.hpp"
#include "text_util.hpp"

namespace thvg {
namespace {

using json = nlohmann::json;

enum class Column { Timestamp, Source, Rating, Message };

std::optional<Column> column_named(std::string_view name) {
  if (name == "timestamp") return Column::Timestamp;
  if (name == "source_id") return Column::Source;
  if (name == "rating") return Column::Rating;
  if (name == "message_id") return Column::Message;
  return std::nullopt;
}

double parse_rating(std::string_view text, std::size_t line) {
  const auto value = detail::parse_double(text);
  if (!value) throw ParseError(line, "rating '" + std::string(text) + "' is not a number");
  if (!std::isfinite(*value) || *value <= 0.0)
    throw ParseError(line, "rating " + std::string(text) + " must be positive");
  return *value;
}

Timestamp require_timestamp(std::string_view text, std::size_t line) {
  const auto t = parse_timestamp(text);
  if (!t) throw ParseError(line, "unknown timestamp format '" + std::string(text) + "'");
  return *t;
}

void finish_record(RawPublication& rec, std::size_t line,
                   const RatingPolicy& policy) {
  if (!valid_source_id(rec.source_id))
    throw ParseError(line, "invalid source_id '" + rec.source_id + "'");
  if (rec.message_id.empty())
    rec.message_id = rec.source_id + "#" + std::to_string(line);
  if (rec.message_id.find_first_of(",\n\r") != std::string::npos)
    throw ParseError(line, "message_id must not contain commas or line breaks");
  if (!rec.rating && policy.mode == RatingMode::Provided)
    throw ParseError(line, "missing rating (rating policy is 'provided')");
}

std::vector<RawPublication> parse_csv(std::istream& in,
                                      const RatingPolicy& policy) {
  std::vector<RawPublication> out;
  std::vector<Column> columns{Column::Timestamp, Column::Source, Column::Rating,
                              Column::Message};
  bool first = true;
  std::string text;
  for (std::size_t line = 1; std::getline(in, text); ++line) {
    const auto row = detail::trim(text);
    if (row.empty()) continue;
    const auto fields = detail::split(row, ',');

    if (first) {
      first = false;
      // A header names known columns; it is recognized by its first field.
      if (column_named(detail::trim(fields[0]))) {
        columns.clear();
        for (auto f : fields) {
          const auto c = column_named(detail::trim(f));
          if (!c) throw ParseError(line, "unknown column '" + std::string(f) + "'");
          if (std::find(columns.begin(), columns.end(), *c) != columns.end())
            throw ParseError(line, "duplicate column '" + std::string(f) + "'");
          columns.push_back(*c);
        }
        for (auto required : {Column::Timestamp, Column::Source})
          if (std::find(columns.begin(), columns.end(), required) == columns.end())
            throw ParseError(line, "header lacks timestamp or source_id");
        continue;
      }
    }

    if (fields.size() < 2 || fields.size() > columns.size())
      throw ParseError(line, "expected 2 to " + std::to_string(columns.size()) +
                                 " fields, found " + std::to_string(fields.size()));
    RawPublication rec;
    bool has_time = false, has_source = false;
    for (std::size_t k = 0; k < fields.size(); ++k) {
      const auto f = detail::trim(fields[k]);
      switch (columns[k]) {
        case Column::Timestamp:
          rec.timestamp = require_timestamp(f, line);
          has_time = true;
          break;
        case Column::Source:
          rec.source_id = std::string(f);
          has_source = true;
          break;
        case Column::Rating:
          if (!f.empty()) rec.rating = parse_rating(f, line);
          break;
        case Column::Message:
          rec.message_id = std::string(f);
          break;
      }
    }
    if (!has_time || !has_source)
      throw ParseError(line, "row lacks timestamp or source_id");
    finish_record(rec, line, policy);
    out.push_back(std::move(rec));
  }
  return out;
}

std::vector<RawPublication> parse_jsonl(std::istream& in,
                                        const RatingPolicy& policy) {
  std::vector<RawPublication> out;
  std::string text;
  for (std::size_t line = 1; std::getline(in, text); ++line) {
    if (detail::trim(text).empty()) continue;
    json obj;
    try {
      obj = json::parse(text);
    } catch (const json::parse_error& e) {
      throw ParseError(line, std::string("invalid JSON: ") + e.what());
    }
    if (!obj.is_object()) throw ParseError(line, "expected a JSON object");

    RawPublication rec;
    const auto ts = obj.find("timestamp");
    if (ts == obj.end()) throw ParseError(line, "missing field 'timestamp'");
    if (ts->is_number_integer()) {
      rec.timestamp = ts->get<Timestamp>();
    } else if (ts->is_number_float() &&
               std::trunc(ts->get<double>()) == ts->get<double>()) {
      rec.timestamp = static_cast<Timestamp>(ts->get<double>());
    } else if (ts->is_string()) {
      rec.timestamp = require_timestamp(ts->get_ref<const std::string&>(), line);
    } else {
      throw ParseError(line, "unknown timestamp format '" + ts->dump() + "'");
    }

    const auto src = obj.find("source_id");
    if (src == obj.end() || !src->is_string())
      throw ParseError(line, "field 'source_id' must be a string");
    rec.source_id = src->get<std::string>();

    const auto rating = obj.find("rating");
    if (rating != obj.end() && !rating->is_null()) {
      if (rating->is_number())
        rec.rating = parse_rating(rating->dump(), line);
      else if (rating->is_string())
        rec.rating = parse_rating(rating->get<std::string>(), line);
      else
        throw ParseError(line, "field 'rating' must be a number");
    }

    const auto mid = obj.find("message_id");
    if (mid != obj.end() && !mid->is_null()) {
      if (!mid->is_string())
        throw ParseError(line, "field 'message_id' must be a string");
      rec.message_id = mid->get<std::string>();
    }
    finish_record(rec, line, policy);
    out.push_back(std::move(rec));
  }
  return out;
}

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(),
                                   [](char c) { return c >= '0' && c <= '9'; });
}

template <typename T>
bool read_int(std::string_view s, T& out) {
  if (!all_digits(s)) return false;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && p == s.data() + s.size();
}

}  // namespace

InputFormat parse_input_format(std::string_view s) {
  if (s == "csv") return InputFormat::Csv;
  if (s == "jsonl") return InputFormat::Jsonl;
  throw ConfigError("unknown input format '" + std::string(s) + "'");
}

void RatingPolicy::validate() const {
  if (!(volume_weight >= 0.0) || !(rate_weight >= 0.0))
    throw ConfigError("rating weights must be nonnegative");
  if (mode == RatingMode::Estimate && !(volume_weight + rate_weight > 0.0))
    throw ConfigError("rating estimation needs a positive weight");
}

RatingMode parse_rating_mode(std::string_view s) {
  if (s == "provided") return RatingMode::Provided;
  if (s == "estimate") return RatingMode::Estimate;
  throw ConfigError("unknown rating policy '" + std::string(s) + "'");
}

std::string_view to_string(RatingMode m) {
  return m == RatingMode::Provided ? "provided" : "estimate";
}

std::optional<Timestamp> parse_timestamp(std::string_view text) {
  using namespace std::chrono;
  text = detail::trim(text);
  if (text.empty()) return std::nullopt;

  // Epoch seconds.
  {
    std::string_view digits = text;
    const bool negative = digits.front() == '-';
    if (negative) digits.remove_prefix(1);
    Timestamp v = 0;
    if (read_int(digits, v)) return negative ? -v : v;
  }

  // YYYY-MM-DD
  if (text.size() < 10 || text[4] != '-' || text[7] != '-') return std::nullopt;
  int y = 0;
  unsigned mo = 0, d = 0;
  if (!read_int(text.substr(0, 4), y) || !read_int(text.substr(5, 2), mo) ||
      !read_int(text.substr(8, 2), d))
    return std::nullopt;
  const year_month_day date{year{y}, month{mo}, day{d}};
  if (!date.ok()) return std::nullopt;
  Timestamp seconds = sys_days{date}.time_since_epoch().count() * 86400LL;
  std::string_view rest = text.substr(10);
  if (rest.empty()) return seconds;
  if (rest.front() != 'T' && rest.front() != 't' && rest.front() != ' ')
    return std::nullopt;
  rest.remove_prefix(1);

  // HH:MM[:SS[.fff]]
  unsigned hh = 0, mm = 0, ss = 0;
  if (rest.size() < 5 || rest[2] != ':' || !read_int(rest.substr(0, 2), hh) ||
      !read_int(rest.substr(3, 2), mm))
    return std::nullopt;
  rest.remove_prefix(5);
  if (!rest.empty() && rest.front() == ':') {
    if (rest.size() < 3 || !read_int(rest.substr(1, 2), ss)) return std::nullopt;
    rest.remove_prefix(3);
    if (!rest.empty() && (rest.front() == '.' || rest.front() == ',')) {
      std::size_t k = 1;
      while (k < rest.size() && rest[k] >= '0' && rest[k] <= '9') ++k;
      if (k == 1) return std::nullopt;
      rest.remove_prefix(k);
    }
  }
  if (hh > 23 || mm > 59 || ss > 60) return std::nullopt;
  seconds += hh * 3600LL + mm * 60LL + ss;

  // Zone designator; none means UTC.
  if (rest.empty() || rest == "Z" || rest == "z") return seconds;
  if (rest.front() != '+' && rest.front() != '-') return std::nullopt;
  const int sign = rest.front() == '+' ? 1 : -1;
  rest.remove_prefix(1);
  unsigned oh = 0, om = 0;
  if (rest.size() == 5 && rest[2] == ':') {
    if (!read_int(rest.substr(0, 2), oh) || !read_int(rest.substr(3, 2), om))
      return std::nullopt;
  } else if (rest.size() == 4) {
    if (!read_int(rest.substr(0, 2), oh) || !read_int(rest.substr(2, 2), om))
      return std::nullopt;
  } else if (rest.size() == 2) {
    if (!read_int(rest, oh)) return std::nullopt;
  } else {
    return std::nullopt;
  }
  if (oh > 23 || om > 59) return std::nullopt;
  return seconds - sign * (oh * 3600LL + om * 60LL);
}

bool valid_source_id(std::string_view id) {
  return !id.empty() && std::all_of(id.begin(), id.end(), [](char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
           (c >= '0' && c <= '9') || c == '.' || c == '_' || c == '-';
  });
}

std::vector<RawPublication> parse_publications(std::istream& in,
                                               InputFormat format,
                                               const RatingPolicy& policy) {
  policy.validate();
  return format == InputFormat::Csv ? parse_csv(in, policy)
                                    : parse_jsonl(in, policy);
}

std::vector<Publication> estimate_ratings(std::span<const RawPublication> raw,
                                          const RatingPolicy& policy) {
  policy.validate();
  std::vector<Publication> out;
  if (raw.empty()) return out;

  const auto [lo, hi] = std::minmax_element(
      raw.begin(), raw.end(), [](const auto& a, const auto& b) {
        return a.timestamp < b.timestamp;
      });
  const double span_days = static_cast<double>(hi->timestamp - lo->timestamp) / 86400.0;
  if (!(span_days > 0.0))
    throw ConfigError("rating estimation needs publications spanning a positive time");

  std::map<std::string, std::size_t> counts;
  for (const auto& r : raw) ++counts[r.source_id];

  std::map<std::string, double> score;
  for (const auto& [id, count] : counts) {
    const double c = static_cast<double>(count);
    score[id] = policy.volume_weight * std::log1p(c) +
                policy.rate_weight * (c / span_days);
  }
  const auto [min_it, max_it] = std::minmax_element(
      score.begin(), score.end(),
      [](const auto& a, const auto& b) { return a.second < b.second; });
  const double min = min_it->second;
  const double range = max_it->second - min;

  out.reserve(raw.size());
  for (const auto& r : raw) {
    const double rating =
        range > 0.0 ? 1.0 + 99.0 * (score[r.source_id] - min) / range : 50.0;
    out.push_back({r.message_id, r.source_id, r.timestamp, std::clamp(rating, 1.0, 100.0)});
  }
  return out;
}

std::vector<Publication> resolve_ratings(std::span<const RawPublication> raw,
                                         const RatingPolicy& policy) {
  if (policy.mode == RatingMode::Estimate) return estimate_ratings(raw, policy);
  std::vector<Publication> out;
  out.reserve(raw.size());
  for (const auto& r : raw) {
    if (!r.rating)
      throw ValidationError("publication '" + r.message_id + "' has no rating");
    out.push_back({r.message_id, r.source_id, r.timestamp, *r.rating});
  }
  return out;
}

EdgeSet read_edge_set(std::istream& in, bool allow_self_pairs) {
  EdgeSet out(allow_self_pairs);
  std::string text;
  bool first = true;
  for (std::size_t line = 1; std::getline(in, text); ++line) {
    const auto row = detail::trim(text);
    if (row.empty() || row.front() == '#') continue;
    const auto fields = detail::split(row, ',');
    if (fields.size() != 2)
      throw ParseError(line, "expected 2 fields (from_source,to_source)");
    const auto from = detail::trim(fields[0]);
    const auto to = detail::trim(fields[1]);
    if (first) {
      first = false;
      if (from == "from_source" || from == "from") continue;
    }
    if (!valid_source_id(from) || !valid_source_id(to))
      throw ParseError(line, "invalid source id");
    try {
      out.insert(std::string(from), std::string(to));
    } catch (const ValidationError& e) {
      throw ParseError(line, e.what());
    }
  }
  return out;
}

std::string write_edge_set(const EdgeSet& edges) {
  std::string out = "from_source,to_source\n";
  for (const auto& [a, b] : edges.pairs()) out += a + "," + b + "\n";
  return out;
}

std::string write_sweep_csv(std::span<const SweepPoint> points) {
  std::string out = "n,D\n";
  for (const auto& p : points)
    out += std::to_string(p.n) + "," + detail::fixed6(p.density) + "\n";
  return out;
}

}  // namespace thvg
