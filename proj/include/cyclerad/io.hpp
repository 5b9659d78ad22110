#pragma once

// Readers for OFF complexes, CSV point clouds and scalar columns,
// filtration files ("value v0 .. vk" per line) and cycle files (one simplex
// per line). Errors carry "file:line:" context.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cyclerad/complex.hpp"
#include "cyclerad/errors.hpp"
#include "cyclerad/filtration.hpp"
#include "cyclerad/geometry.hpp"

namespace cyclerad::io {

namespace detail {

struct Line {
  Index number;
  std::vector<std::string> tokens;
};

inline std::string where(const std::string& name, Index line) {
  return name + ":" + std::to_string(line) + ": ";
}

inline std::vector<std::string> split(std::string_view text, bool commas) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    const bool sep = c == ' ' || c == '\t' || c == '\r' || (commas && c == ',');
    if (sep) {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

/// Non-empty lines with '#' comments removed.
inline std::vector<Line> tokenize(std::istream& in, bool commas) {
  std::vector<Line> out;
  std::string text;
  for (Index n = 1; std::getline(in, text); ++n) {
    if (auto hash = text.find('#'); hash != std::string::npos) text.resize(hash);
    auto tokens = split(text, commas);
    if (!tokens.empty()) out.push_back({n, std::move(tokens)});
  }
  return out;
}

inline std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path + ": cannot open file");
  return in;
}

inline std::optional<double> to_double(const std::string& s) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

inline std::optional<Index> to_index(const std::string& s) {
  Index v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

inline double need_double(const std::string& s, const std::string& name, Index line) {
  auto v = to_double(s);
  if (!v || !std::isfinite(*v)) throw InputError(where(name, line) + "expected a number, got '" + s + "'");
  return *v;
}

inline Index need_index(const std::string& s, const std::string& name, Index line) {
  auto v = to_index(s);
  if (!v) throw InputError(where(name, line) + "expected a non-negative integer, got '" + s + "'");
  return *v;
}

inline bool numeric_row(const Line& line) {
  return std::all_of(line.tokens.begin(), line.tokens.end(),
                     [](const std::string& t) { return to_double(t).has_value(); });
}

inline Simplex read_simplex(const Line& line, Index first, Index n_points, const std::string& name) {
  Simplex s;
  for (Index t = first; t < line.tokens.size(); ++t) {
    const Index v = need_index(line.tokens[t], name, line.number);
    if (v >= n_points) {
      throw InputError(where(name, line.number) + "vertex " + std::to_string(v) +
                       " out of range (" + std::to_string(n_points) + " points)");
    }
    s.push_back(v);
  }
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
    throw InputError(where(name, line.number) + "repeated vertex in simplex");
  }
  return s;
}

}  // namespace detail

/// OFF mesh: vertices become points, faces with 1, 2 or 3 vertices become
/// simplices. Vertex lines may carry 2 or 3 coordinates.
inline EmbeddedComplex read_off(std::istream& in, const std::string& name = "<off>") {
  auto lines = detail::tokenize(in, false);
  Index at = 0;
  if (at < lines.size() && lines[at].tokens[0] == "OFF") {
    lines[at].tokens.erase(lines[at].tokens.begin());
    if (lines[at].tokens.empty()) ++at;
  }
  if (at >= lines.size()) throw InputError(name + ": missing OFF counts line");
  const detail::Line& counts = lines[at++];
  if (counts.tokens.size() < 2) throw InputError(detail::where(name, counts.number) + "expected 'nv nf [ne]'");
  const Index nv = detail::need_index(counts.tokens[0], name, counts.number);
  const Index nf = detail::need_index(counts.tokens[1], name, counts.number);
  if (lines.size() < at + nv + nf) throw InputError(name + ": file ends before all vertices and faces");

  std::vector<Point> points;
  Index dim = 0;
  for (Index i = 0; i < nv; ++i) {
    const detail::Line& line = lines[at++];
    if (i == 0) dim = line.tokens.size();
    if (line.tokens.size() != dim || dim < 2 || dim > 3) {
      throw InputError(detail::where(name, line.number) + "vertex lines need 2 or 3 coordinates, consistently");
    }
    Point p;
    for (const auto& t : line.tokens) p.push_back(detail::need_double(t, name, line.number));
    points.push_back(std::move(p));
  }
  std::vector<Simplex> simplices;
  for (Index i = 0; i < nf; ++i) {
    const detail::Line& line = lines[at++];
    const Index k = detail::need_index(line.tokens[0], name, line.number);
    if (k < 1 || k > 3) {
      throw InputError(detail::where(name, line.number) + "faces must have 1, 2 or 3 vertices, got " + std::to_string(k));
    }
    if (line.tokens.size() < k + 1) throw InputError(detail::where(name, line.number) + "face is missing vertices");
    detail::Line face{line.number, {line.tokens.begin(), line.tokens.begin() + static_cast<long>(k) + 1}};
    simplices.push_back(detail::read_simplex(face, 1, nv, name));
  }
  if (at != lines.size()) throw InputError(detail::where(name, lines[at].number) + "unexpected trailing data");
  try {
    return EmbeddedComplex(PointCloud(dim, std::move(points)), std::move(simplices));
  } catch (const InputError& e) {
    throw InputError(name + ": " + e.what());
  }
}

inline EmbeddedComplex read_off(const std::string& path) {
  auto in = detail::open(path);
  return read_off(in, path);
}

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

/// Numeric table separated by commas or whitespace, with an optional header row.
inline Table read_table(std::istream& in, const std::string& name = "<csv>") {
  const auto lines = detail::tokenize(in, true);
  Table out;
  Index first = 0;
  if (!lines.empty() && !detail::numeric_row(lines[0])) {
    out.header = lines[0].tokens;
    first = 1;
  }
  for (Index i = first; i < lines.size(); ++i) {
    const detail::Line& line = lines[i];
    if (!out.rows.empty() && line.tokens.size() != out.rows[0].size()) {
      throw InputError(detail::where(name, line.number) + "expected " +
                       std::to_string(out.rows[0].size()) + " columns, got " +
                       std::to_string(line.tokens.size()));
    }
    std::vector<double> row;
    for (const auto& t : line.tokens) row.push_back(detail::need_double(t, name, line.number));
    out.rows.push_back(std::move(row));
  }
  if (!out.header.empty() && !out.rows.empty() && out.header.size() != out.rows[0].size()) {
    throw InputError(name + ": header and rows disagree on the column count");
  }
  return out;
}

inline PointCloud read_points(std::istream& in, const std::string& name = "<csv>") {
  Table t = read_table(in, name);
  if (t.rows.empty()) throw InputError(name + ": no points");
  const Index dim = t.rows[0].size();
  try {
    return PointCloud(dim, std::move(t.rows));
  } catch (const InputError& e) {
    throw InputError(name + ": " + e.what());
  }
}

inline PointCloud read_points(const std::string& path) {
  auto in = detail::open(path);
  return read_points(in, path);
}

/// One column of a numeric table, e.g. vertex scalars for a lower-star filtration.
inline std::vector<double> read_scalars(const std::string& path, Index column = 0) {
  auto in = detail::open(path);
  const Table t = read_table(in, path);
  std::vector<double> out;
  for (const auto& row : t.rows) {
    if (column >= row.size()) throw InputError(path + ": no column " + std::to_string(column));
    out.push_back(row[column]);
  }
  return out;
}

/// Filtration file: each line is "value v0 .. vk". Simplices must appear
/// after their faces are listed or be closed under faces overall.
inline Filtration read_filtration(std::istream& in, const PointCloud& cloud,
                                  const std::string& name = "<filtration>") {
  std::vector<std::pair<Simplex, double>> entries;
  for (const detail::Line& line : detail::tokenize(in, false)) {
    if (line.tokens.size() < 2) throw InputError(detail::where(name, line.number) + "expected 'value v0 .. vk'");
    const double value = detail::need_double(line.tokens[0], name, line.number);
    entries.emplace_back(detail::read_simplex(line, 1, cloud.size(), name), value);
  }
  if (entries.empty()) throw InputError(name + ": empty filtration");
  try {
    return filtration_from_sequence(cloud, std::move(entries));
  } catch (const InputError& e) {
    throw InputError(name + ": " + e.what());
  }
}

inline Filtration read_filtration(const std::string& path, const PointCloud& cloud) {
  auto in = detail::open(path);
  return read_filtration(in, cloud, path);
}

/// Cycle file: one p-simplex of K per line, as vertex indices.
inline ChainVector read_cycle(std::istream& in, const EmbeddedComplex& k, Index p,
                              const std::string& name = "<cycle>") {
  std::vector<Index> ids;
  for (const detail::Line& line : detail::tokenize(in, true)) {
    if (line.tokens.size() != p + 1) {
      throw InputError(detail::where(name, line.number) + "expected " + std::to_string(p + 1) +
                       " vertices per simplex");
    }
    const Simplex s = detail::read_simplex(line, 0, k.cloud().size(), name);
    const auto idx = k.find(s);
    if (!idx) throw InputError(detail::where(name, line.number) + "simplex " + to_string(s) + " is not in the complex");
    if (std::find(ids.begin(), ids.end(), *idx) != ids.end()) {
      throw InputError(detail::where(name, line.number) + "simplex " + to_string(s) + " listed twice");
    }
    ids.push_back(*idx);
  }
  std::sort(ids.begin(), ids.end());
  ChainVector chain(k.size(p), std::move(ids));
  if (!is_cycle(k, chain, p)) throw InputError(name + ": chain is not a cycle");
  return chain;
}

inline ChainVector read_cycle(const std::string& path, const EmbeddedComplex& k, Index p) {
  auto in = detail::open(path);
  return read_cycle(in, k, p, path);
}

}  // namespace cyclerad::io
