// Copyright 2026 The projevo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Text formats: locale-independent CSV with 17 significant digits, the
// term-set JSON document {dimension, terms: [{label, entries: [[row, col,
// re, im], ...]}]} and the graph JSON document {vertices, edges: [[u, v, w],
// ...]}.

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <utility>
#include <vector>

#include "json.hpp"
#include "projevo/decomposer.hpp"
#include "projevo/trotter.hpp"

namespace projevo {

using Json = nlohmann::json;

/// Shortest "general" rendering with 17 significant digits, '.' separator.
inline std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return {buf, res.ptr};
}

/// Accumulates CSV text in memory; the caller writes it out in one go.
class CsvWriter {
public:
  explicit CsvWriter(const std::vector<std::string>& header) { row_strings(header); }

  CsvWriter& cell(double v) { return raw(format_double(v)); }
  CsvWriter& cell(std::uint64_t v) { return raw(std::to_string(v)); }
  CsvWriter& cell(std::int64_t v) { return raw(std::to_string(v)); }
  CsvWriter& cell(int v) { return raw(std::to_string(v)); }
  CsvWriter& cell(std::string_view s) { return raw(std::string(s)); }

  void end_row() {
    out_ << '\n';
    fresh_ = true;
  }

  void row_strings(const std::vector<std::string>& cells) {
    for (const auto& c : cells) raw(c);
    end_row();
  }

  void blank_line() { out_ << '\n'; }

  /// Trailing comment line, e.g. a JSON summary.
  void comment(std::string_view text) { out_ << "# " << text << '\n'; }

  [[nodiscard]] std::string str() const { return out_.str(); }

private:
  CsvWriter& raw(const std::string& s) {
    if (!fresh_) out_ << ',';
    out_ << s;
    fresh_ = false;
    return *this;
  }

  std::ostringstream out_;
  bool fresh_ = true;
};

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(path, "cannot open for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError(path, "read failed");
  return ss.str();
}

inline void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError(path, "cannot open for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  out.flush();
  if (!out) throw IoError(path, "write failed");
}

inline Json term_set_to_json(const HermitianTermSet& terms) {
  Json doc;
  doc["dimension"] = terms.dimension();
  doc["terms"] = Json::array();
  for (const auto& t : terms.terms()) {
    Json entries = Json::array();
    for (Eigen::Index r = 0; r < t.matrix.rows(); ++r)
      for (Eigen::Index c = 0; c < t.matrix.cols(); ++c)
        if (t.matrix(r, c) != cplx{})
          entries.push_back({r, c, t.matrix(r, c).real(), t.matrix(r, c).imag()});
    doc["terms"].push_back({{"label", t.label}, {"entries", std::move(entries)}});
  }
  return doc;
}

/// Parses and validates a term-set document (shape, index range, duplicate
/// entries, Hermiticity of every term).
inline HermitianTermSet term_set_from_json(const Json& doc) {
  try {
    require(doc.is_object(), "term set: document must be an object");
    const auto dim = doc.at("dimension").get<Eigen::Index>();
    require(dim >= 1, "term set: dimension must be >= 1");
    std::vector<Term> terms;
    for (const auto& jt : doc.at("terms")) {
      Term t{jt.value("label", std::string("term") + std::to_string(terms.size())), Matrix::Zero(dim, dim)};
      std::set<std::pair<Eigen::Index, Eigen::Index>> seen;
      for (const auto& e : jt.at("entries")) {
        require(e.is_array() && (e.size() == 3 || e.size() == 4),
                "term set: entries must be [row, col, re] or [row, col, re, im]");
        const auto r = e.at(0).get<Eigen::Index>();
        const auto c = e.at(1).get<Eigen::Index>();
        require(r >= 0 && c >= 0 && r < dim && c < dim, "term set: entry index out of range in '" + t.label + "'");
        require(seen.emplace(r, c).second, "term set: duplicate entry in '" + t.label + "'");
        t.matrix(r, c) = cplx{e.at(2).get<double>(), e.size() == 4 ? e.at(3).get<double>() : 0.0};
      }
      terms.push_back(std::move(t));
    }
    return {dim, std::move(terms)};
  } catch (const Json::exception& ex) {
    throw ValidationError(std::string("term set: ") + ex.what());
  }
}

inline Json graph_to_json(const InteractionGraph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v, e.weight});
  return {{"vertices", g.vertex_count()}, {"edges", std::move(edges)}};
}

inline InteractionGraph graph_from_json(const Json& doc) {
  try {
    require(doc.is_object(), "graph: document must be an object");
    const auto n = doc.at("vertices").get<Vertex>();
    std::vector<Edge> edges;
    for (const auto& e : doc.at("edges")) {
      require(e.is_array() && (e.size() == 2 || e.size() == 3), "graph: edges must be [u, v] or [u, v, w]");
      edges.push_back({e.at(0).get<Vertex>(), e.at(1).get<Vertex>(), e.size() == 3 ? e.at(2).get<double>() : 1.0});
    }
    return {n, std::move(edges)};
  } catch (const Json::exception& ex) {
    throw ValidationError(std::string("graph: ") + ex.what());
  }
}

inline Json parse_json(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& ex) {
    throw ValidationError(origin + ": " + ex.what());
  }
}

}  // namespace projevo
