#include "hl/text_io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "hl/errors.hpp"

namespace hl {

namespace {

std::string trim(const std::string& s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace((unsigned char)s[b])) ++b;
  while (e > b && std::isspace((unsigned char)s[e - 1])) --e;
  return s.substr(b, e - b);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

// Rows of letter codes (top row first) -> validated tableau of the shape.
Tableau tableau_from_rows(const Shape& s, const std::vector<std::vector<int>>& rows) {
  const std::vector<int> heights = s.column_heights();
  const int depth = heights.empty() ? 0 : heights.front();
  if ((int)rows.size() != depth) {
    throw usage_error("tableau has " + std::to_string(rows.size()) + " rows, shape needs " +
                      std::to_string(depth));
  }
  for (int k = 0; k < depth; ++k) {
    const size_t want = std::count_if(heights.begin(), heights.end(), [&](int h) { return h > k; });
    if (rows[k].size() != want) {
      throw usage_error("row " + std::to_string(k + 1) + " has " + std::to_string(rows[k].size()) +
                        " entries, shape needs " + std::to_string(want));
    }
  }
  Tableau t{s, {}};
  t.cols.resize(heights.size());
  for (size_t i = 0; i < heights.size(); ++i) {
    for (int k = 0; k < heights[i]; ++k) t.cols[i].codes.push_back(rows[k][i]);
  }
  if (!structurally_valid(t)) throw usage_error("entries do not form a valid tableau of the shape");
  return t;
}

}  // namespace

Rat parse_coord(const std::string& tok) {
  const std::string s = trim(tok);
  if (s.empty()) throw usage_error("empty coordinate");
  Rat r;
  try {
    r = Rat(s, 10);
  } catch (const std::invalid_argument&) {
    throw usage_error("malformed coordinate '" + tok + "'");
  }
  if (r.get_den() == 0) throw usage_error("malformed coordinate '" + tok + "'");
  r.canonicalize();
  if (r.get_den() != 1 && r.get_den() != 2) {
    throw usage_error("coordinate '" + tok + "' is not an integer or half-integer");
  }
  return r;
}

std::string coord_str(const Rat& c) { return c.get_str(); }

Vec parse_coords(const RootDatum& d, const std::string& csv) {
  const std::vector<std::string> toks = split(csv, ',');
  if ((int)toks.size() != d.dimension()) {
    throw usage_error("expected " + std::to_string(d.dimension()) + " coordinates, got " +
                      std::to_string(toks.size()));
  }
  Vec v;
  v.reserve(toks.size());
  for (const std::string& t : toks) v.push_back(parse_coord(t));
  return v;
}

std::string coords_str(const Vec& v) {
  std::ostringstream os;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << coord_str(v[i]);
  }
  return os.str();
}

int parse_letter(const RootDatum& d, const std::string& tok) {
  std::string s = trim(tok);
  bool barred = false;
  if (!s.empty() && s.back() == '\'') {
    barred = true;
    s.pop_back();
  }
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit((unsigned char)c); })) {
    throw usage_error("malformed letter '" + tok + "'");
  }
  return letter_code(d, Letter{std::stoi(s), barred});
}

std::string tableau_to_text(const Tableau& t) {
  std::ostringstream os;
  int depth = 0;
  for (const Column& c : t.cols) depth = std::max(depth, c.height());
  for (int k = 0; k < depth; ++k) {
    bool first = true;
    for (const Column& c : t.cols) {
      if (c.height() <= k) continue;
      if (!first) os << ',';
      os << letter_str(t.shape.datum, c.codes[k]);
      first = false;
    }
    os << '\n';
  }
  return os.str();
}

Tableau tableau_from_text(const Shape& s, const std::string& text) {
  std::vector<std::vector<int>> rows;
  for (std::string line : split(text, '\n')) {
    if (trim(line).empty()) continue;
    std::vector<int> row;
    for (const std::string& tok : split(line, ',')) row.push_back(parse_letter(s.datum, tok));
    rows.push_back(std::move(row));
  }
  return tableau_from_rows(s, rows);
}

Json poly_to_json(const HalfLaurent& p) {
  if (!p.is_q_polynomial()) {
    throw invariant_error("polynomial with negative or odd v-exponents cannot be emitted in q");
  }
  Json arr = Json::array();
  for (const auto& [e, c] : p.terms()) {
    Json coeff;
    if (c.fits_slong_p()) {
      coeff = (std::int64_t)c.get_si();
    } else {
      coeff = c.get_str();
    }
    arr.push_back(Json::array({e / 2, coeff}));
  }
  return arr;
}

HalfLaurent poly_from_json(const Json& j) {
  if (!j.is_array()) throw usage_error("polynomial JSON must be an array of [exponent, coefficient]");
  HalfLaurent p;
  for (const Json& item : j) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer()) {
      throw usage_error("polynomial JSON must be an array of [exponent, coefficient]");
    }
    const int e = item[0].get<int>();
    if (e < 0) throw usage_error("polynomial JSON has a negative exponent");
    Int c;
    if (item[1].is_number_integer()) {
      c = Int((long)item[1].get<std::int64_t>());
    } else if (item[1].is_string()) {
      try {
        c = Int(item[1].get<std::string>(), 10);
      } catch (const std::invalid_argument&) {
        throw usage_error("malformed polynomial coefficient");
      }
    } else {
      throw usage_error("polynomial coefficient must be an integer or decimal string");
    }
    p += HalfLaurent::q_pow(e, c);
  }
  return p;
}

Json coweight_to_json(const Vec& v) {
  Json arr = Json::array();
  for (const Rat& c : v) {
    if (c.get_den() == 1 && c.get_num().fits_slong_p()) {
      arr.push_back((std::int64_t)c.get_num().get_si());
    } else {
      arr.push_back(coord_str(c));
    }
  }
  return arr;
}

Vec coweight_from_json(const Json& j) {
  if (!j.is_array()) throw usage_error("coweight JSON must be an array");
  Vec v;
  for (const Json& item : j) {
    if (item.is_number_integer()) {
      v.emplace_back((long)item.get<std::int64_t>());
    } else if (item.is_string()) {
      v.push_back(parse_coord(item.get<std::string>()));
    } else {
      throw usage_error("coweight coordinate must be an integer or a string like \"3/2\"");
    }
  }
  return v;
}

Json tableau_to_json(const Tableau& t) {
  Json arr = Json::array();
  int depth = 0;
  for (const Column& c : t.cols) depth = std::max(depth, c.height());
  for (int k = 0; k < depth; ++k) {
    Json row = Json::array();
    for (const Column& c : t.cols) {
      if (c.height() > k) row.push_back(letter_str(t.shape.datum, c.codes[k]));
    }
    arr.push_back(std::move(row));
  }
  return arr;
}

Tableau tableau_from_json(const Shape& s, const Json& j) {
  if (!j.is_array()) throw usage_error("tableau JSON must be an array of rows");
  std::vector<std::vector<int>> rows;
  for (const Json& rj : j) {
    if (!rj.is_array()) throw usage_error("tableau JSON must be an array of rows");
    std::vector<int> row;
    for (const Json& tok : rj) {
      if (!tok.is_string()) throw usage_error("tableau entries must be letter strings");
      row.push_back(parse_letter(s.datum, tok.get<std::string>()));
    }
    rows.push_back(std::move(row));
  }
  return tableau_from_rows(s, rows);
}

}  // namespace hl
