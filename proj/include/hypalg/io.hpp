#pragma once

// Text and JSON formats:
//   point sets   "n=<int>" then one 0/1 string per line (character j is
//                coordinate j+1), or {"n": int, "points": ["010", ...]}
//   families     sorted list of sorted 1-based index lists, [[], [1], [1, 2]]
//   arrangements {"k": int, "normals": [["p/q", ...]], "offsets": ["p/q", ...]}
//   cells        one +/- string per line, sorted
//   phi          {"[1,2]": [1], ...} or [[[1,2],[1]], ...]

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "hypalg/arrangements.hpp"
#include "hypalg/core_sets.hpp"
#include "hypalg/error.hpp"
#include "hypalg/field.hpp"
#include "hypalg/matchings.hpp"

namespace hypalg::io {

using Json = nlohmann::json;

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

inline Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw DomainError(std::string("malformed JSON: ") + e.what());
  }
}

// ---------------------------------------------------------------- rationals

/// "p/q", "-p/q" or an integer.
inline Rational parse_rational(const std::string& raw) {
  const std::string text = trim(raw);
  const auto slash = text.find('/');
  auto parse_int = [&](const std::string& digits, bool allow_sign) {
    std::size_t start = 0;
    if (allow_sign && !digits.empty() && (digits[0] == '-' || digits[0] == '+')) start = 1;
    if (start == digits.size() ||
        !std::all_of(digits.begin() + static_cast<std::ptrdiff_t>(start), digits.end(),
                     [](unsigned char ch) { return std::isdigit(ch) != 0; })) {
      throw DomainError("malformed rational '" + raw + "'");
    }
    Integer v(digits.substr(start).c_str());
    return digits[0] == '-' ? Integer(-v) : v;
  };
  if (slash == std::string::npos) return Rational(parse_int(text, true));
  const Integer num = parse_int(text.substr(0, slash), true);
  const Integer den = parse_int(text.substr(slash + 1), false);
  if (den == 0) throw DomainError("zero denominator in '" + raw + "'");
  return Rational(num, den);
}

inline Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw DomainError("rationals must be integers or \"p/q\" strings, got " + j.dump());
}

inline std::string format_rational(const Rational& r) { return r.str(); }

// --------------------------------------------------------------- point sets

inline std::string format_point(Point p, int n) {
  std::string out(static_cast<std::size_t>(n), '0');
  for (int i = 1; i <= n; ++i) {
    if ((p >> (i - 1)) & 1U) out[static_cast<std::size_t>(i - 1)] = '1';
  }
  return out;
}

inline Point parse_point(const std::string& text, int n) {
  if (text.size() != static_cast<std::size_t>(n)) {
    throw DomainError("point '" + text + "' does not have length n=" + std::to_string(n));
  }
  Point p = 0;
  for (int i = 1; i <= n; ++i) {
    const char ch = text[static_cast<std::size_t>(i - 1)];
    if (ch == '1') {
      p |= coordinate_bit(i);
    } else if (ch != '0') {
      throw DomainError("point '" + text + "' may only contain '0' and '1'");
    }
  }
  return p;
}

inline PointSet point_set_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("points") || !j["n"].is_number_integer() ||
      !j["points"].is_array()) {
    throw DomainError("point set JSON needs integer \"n\" and array \"points\"");
  }
  const int n = j["n"].get<int>();
  if (n < 1 || n > kMaxDimension) throw DomainError("n must lie in [1, 30]");
  std::vector<Point> pts;
  for (const auto& p : j["points"]) {
    if (!p.is_string()) throw DomainError("points must be 0/1 strings");
    pts.push_back(parse_point(p.get<std::string>(), n));
  }
  return PointSet(n, std::move(pts));
}

/// Text or JSON, detected by a leading '{'.
inline PointSet parse_point_set(const std::string& text) {
  const std::string body = trim(text);
  if (!body.empty() && body.front() == '{') return point_set_from_json(parse_json(body));
  std::istringstream in(body);
  std::string line;
  int n = -1;
  std::vector<Point> pts;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    if (n < 0) {
      if (line.rfind("n=", 0) != 0) throw DomainError("point set must start with 'n=<int>'");
      try {
        std::size_t used = 0;
        n = std::stoi(line.substr(2), &used);
        if (used != line.size() - 2) throw DomainError("bad n");
      } catch (const std::exception&) {
        throw DomainError("malformed dimension line '" + line + "'");
      }
      if (n < 1 || n > kMaxDimension) throw DomainError("n must lie in [1, 30]");
      continue;
    }
    pts.push_back(parse_point(line, n));
  }
  if (n < 0) throw DomainError("point set must start with 'n=<int>'");
  return PointSet(n, std::move(pts));
}

inline std::string format_point_set(const PointSet& c) {
  std::string out = "n=" + std::to_string(c.dimension()) + "\n";
  for (Point p : c) out += format_point(p, c.dimension()) + "\n";
  return out;
}

inline Json point_set_to_json(const PointSet& c) {
  Json pts = Json::array();
  for (Point p : c) pts.push_back(format_point(p, c.dimension()));
  return Json{{"n", c.dimension()}, {"points", pts}};
}

// ----------------------------------------------------------------- families

inline Json subset_to_json(Subset s) { return Json(indices_of(s)); }

inline std::string format_subset(Subset s) { return subset_to_json(s).dump(); }

/// Members as sorted index lists, in lexicographic order of those lists.
inline Json family_to_json(const SetFamily& f) {
  std::vector<Subset> members(f.begin(), f.end());
  std::sort(members.begin(), members.end(), list_less);
  Json out = Json::array();
  for (Subset s : members) out.push_back(subset_to_json(s));
  return out;
}

inline Subset subset_from_json(const Json& j, int n) {
  if (!j.is_array()) throw DomainError("index list expected, got " + j.dump());
  std::vector<int> idx;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw DomainError("indices must be integers");
    idx.push_back(v.get<int>());
  }
  return subset_from_indices(idx, n);
}

/// [[...], ...] (n = largest index) or {"n": int, "members": [[...], ...]}.
inline SetFamily family_from_json(const Json& j) {
  const Json* list = &j;
  int n = -1;
  if (j.is_object()) {
    if (!j.contains("members") || !j["members"].is_array()) {
      throw DomainError("family JSON object needs a \"members\" array");
    }
    list = &j["members"];
    if (j.contains("n")) {
      if (!j["n"].is_number_integer()) throw DomainError("family \"n\" must be an integer");
      n = j["n"].get<int>();
    }
  }
  if (!list->is_array()) throw DomainError("family must be a JSON array of index lists");
  if (n < 0) {
    n = 0;
    for (const auto& m : *list) {
      if (!m.is_array()) throw DomainError("family members must be index lists");
      for (const auto& v : m) {
        if (!v.is_number_integer()) throw DomainError("indices must be integers");
        n = std::max(n, v.get<int>());
      }
    }
  }
  if (n < 0 || n > kMaxDimension) throw DomainError("family dimension out of range");
  std::vector<Subset> members;
  for (const auto& m : *list) members.push_back(subset_from_json(m, n));
  return SetFamily(n, std::move(members));
}

inline SetFamily parse_family(const std::string& text) { return family_from_json(parse_json(text)); }

// ------------------------------------------------------------- arrangements

inline Arrangement arrangement_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("k") || !j.contains("normals") || !j.contains("offsets")) {
    throw DomainError("arrangement JSON needs \"k\", \"normals\" and \"offsets\"");
  }
  if (!j["k"].is_number_integer()) throw DomainError("arrangement \"k\" must be an integer");
  if (!j["normals"].is_array() || !j["offsets"].is_array()) {
    throw DomainError("\"normals\" and \"offsets\" must be arrays");
  }
  std::vector<RationalVector> normals;
  for (const auto& row : j["normals"]) {
    if (!row.is_array()) throw DomainError("each normal must be an array");
    RationalVector v;
    for (const auto& x : row) v.push_back(rational_from_json(x));
    normals.push_back(std::move(v));
  }
  RationalVector offsets;
  for (const auto& x : j["offsets"]) offsets.push_back(rational_from_json(x));
  return Arrangement(j["k"].get<int>(), std::move(normals), std::move(offsets));
}

inline Arrangement parse_arrangement(const std::string& text) {
  return arrangement_from_json(parse_json(text));
}

inline Json arrangement_to_json(const Arrangement& h) {
  Json normals = Json::array();
  for (const auto& n : h.normals()) {
    Json row = Json::array();
    for (const auto& x : n) row.push_back(format_rational(x));
    normals.push_back(row);
  }
  Json offsets = Json::array();
  for (const auto& b : h.offsets()) offsets.push_back(format_rational(b));
  return Json{{"k", h.dimension()}, {"normals", normals}, {"offsets", offsets}};
}

inline std::string format_cells(const CellSet& cells) {
  std::string out;
  for (const auto& s : cells.feasible) out += s.to_string() + "\n";
  return out;
}

// ---------------------------------------------------------------------- phi

inline IntersectionMap intersection_map_from_json(const SetFamily& d, const Json& j) {
  std::map<Subset, Subset> phi;
  auto add = [&](Subset a, Subset b) {
    if (!phi.emplace(a, b).second) throw DomainError("phi lists a set twice");
  };
  const int n = d.dimension();
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      add(subset_from_json(parse_json(key), n), subset_from_json(value, n));
    }
  } else if (j.is_array()) {
    for (const auto& pair : j) {
      if (!pair.is_array() || pair.size() != 2) throw DomainError("phi pairs must be [a, phi(a)]");
      add(subset_from_json(pair[0], n), subset_from_json(pair[1], n));
    }
  } else {
    throw DomainError("phi must be a JSON object or a list of pairs");
  }
  return IntersectionMap::from_map(d, phi);
}

inline Json bijection_to_json(const Bijection& pi) {
  Json out = Json::array();
  for (const auto& [a, b] : pi.pairs()) out.push_back(Json::array({subset_to_json(a), subset_to_json(b)}));
  return out;
}

}  // namespace hypalg::io
