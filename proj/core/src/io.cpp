#include "rowinc/io.hpp"

#include <charconv>
#include <algorithm>

#include <nlohmann/json.hpp>
#include "rowinc/error.hpp"

namespace rowinc {

using ojson = nlohmann::ordered_json;

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

int parse_int(std::string_view token) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw InputError("not an integer: '" + std::string(token) + "'");
  }
  return v;
}

std::vector<int> parse_row(std::string_view line) {
  std::vector<int> row;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) row.push_back(parse_int(line.substr(i, j - i)));
    i = j;
  }
  return row;
}

}  // namespace

std::string to_text(const Tableau& t) {
  std::string out;
  for (int r = 0; r < 2; ++r) {
    bool first = true;
    for (int v : t.row(r)) {
      if (!first) out += ' ';
      out += std::to_string(v);
      first = false;
    }
    out += '\n';
  }
  return out;
}

std::string to_json(const Tableau& t) {
  ojson j;
  j["n"] = t.columns();
  j["k"] = t.doubled();
  j["m"] = t.offset();
  j["rows"] = ojson::array({ojson(std::vector<int>(t.top().begin(), t.top().end())),
                            ojson(std::vector<int>(t.bottom().begin(), t.bottom().end()))});
  return j.dump();
}

std::string format_tableau(const Tableau& t, TableauFormat format) {
  return format == TableauFormat::Json ? to_json(t) + "\n" : to_text(t);
}

Tableau parse_tableau_text(std::string_view text) {
  std::vector<std::vector<int>> rows;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const auto line = trim(text.substr(pos, end - pos));
    if (!line.empty()) rows.push_back(parse_row(line));
    pos = end + 1;
  }
  if (rows.size() != 2) {
    throw InputError("tableau text must have exactly 2 non-empty lines, got " +
                     std::to_string(rows.size()));
  }
  if (rows[0].empty() || rows[1].empty()) throw InputError("tableau has no columns");
  if (rows[0].size() == rows[1].size() && std::min(rows[0].front(), rows[1].front()) < 1) {
    throw InputError("entries must be positive integers");
  }
  return Tableau::from_rows(std::move(rows[0]), std::move(rows[1]));
}

Tableau parse_tableau_json(std::string_view text) {
  ojson j;
  try {
    j = ojson::parse(text);
  } catch (const ojson::parse_error& e) {
    throw InputError(std::string("malformed tableau JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("rows")) {
    throw InputError("tableau JSON must be an object with a \"rows\" field");
  }
  std::vector<std::vector<int>> rows;
  try {
    rows = j.at("rows").get<std::vector<std::vector<int>>>();
  } catch (const ojson::exception&) {
    throw InputError("\"rows\" must be an array of two integer arrays");
  }
  if (rows.size() != 2) throw InputError("\"rows\" must hold exactly 2 rows");
  auto field = [&](const char* name) -> std::optional<int> {
    if (!j.contains(name)) return std::nullopt;
    if (!j.at(name).is_number_integer()) {
      throw InputError(std::string("\"") + name + "\" must be an integer");
    }
    return j.at(name).get<int>();
  };
  const auto n = field("n");
  const auto k = field("k");
  const auto m = field("m");
  if (rows[0].size() != rows[1].size()) {
    throw InputError("rows have unequal length (" + std::to_string(rows[0].size()) + " vs " +
                     std::to_string(rows[1].size()) + ")");
  }
  if (rows[0].empty()) throw InputError("tableau has no columns (n must be at least 1)");
  if (n && *n != static_cast<int>(rows[0].size())) {
    throw InputError("\"n\" is " + std::to_string(*n) + " but rows have " +
                     std::to_string(rows[0].size()) + " columns");
  }
  const int offset = m ? *m : std::min(rows[0].front(), rows[1].front()) - 1;
  Tableau t(std::move(rows[0]), std::move(rows[1]), offset);
  if (k && *k != t.doubled()) {
    throw InputError("\"k\" is " + std::to_string(*k) + " but " + std::to_string(t.doubled()) +
                     " values appear twice");
  }
  return t;
}

ParsedTableau parse_tableau(std::string_view text) {
  const auto body = trim(text);
  if (!body.empty() && body.front() == '{') {
    return {parse_tableau_json(body), TableauFormat::Json};
  }
  return {parse_tableau_text(body), TableauFormat::Text};
}

std::string to_json(const QPoly& p) {
  ojson j;
  j["coeffs"] = std::vector<QPoly::Coeff>(p.coeffs().begin(), p.coeffs().end());
  return j.dump();
}

QPoly parse_poly_json(std::string_view text) {
  try {
    const auto j = ojson::parse(text);
    return QPoly(j.at("coeffs").get<std::vector<QPoly::Coeff>>());
  } catch (const ojson::exception& e) {
    throw InputError(std::string("malformed polynomial JSON: ") + e.what());
  }
}

std::string to_json(const StatProfile& p) {
  ojson j;
  j["descents"] = p.descents;
  j["ascents"] = p.ascents;
  j["maj"] = p.maj;
  j["amaj"] = p.amaj;
  return j.dump();
}

std::string to_json(const SkewProfile& p) {
  ojson j;
  j["descents"] = p.descents;
  j["ascents"] = p.ascents;
  j["d"] = p.d;
  j["x"] = p.x;
  j["y"] = p.y;
  return j.dump();
}

SchroederWord parse_word(std::string_view text) { return SchroederWord(std::string(trim(text))); }

SchroederPath parse_path(std::string_view text) { return SchroederPath(std::string(trim(text))); }

Partition parse_shape(std::string_view text) {
  const auto body = trim(text);
  std::vector<int> parts;
  if (body.empty()) return Partition{};
  std::size_t pos = 0;
  while (pos <= body.size()) {
    auto end = body.find(',', pos);
    if (end == std::string_view::npos) end = body.size();
    parts.push_back(parse_int(trim(body.substr(pos, end - pos))));
    pos = end + 1;
  }
  return Partition(std::move(parts));
}

}  // namespace rowinc
