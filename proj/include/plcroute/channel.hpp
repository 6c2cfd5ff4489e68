// Copyright 2026 The plcroute Authors
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

#ifndef PLCROUTE_CHANNEL_HPP_
#define PLCROUTE_CHANNEL_HPP_

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "plcroute/random.hpp"

namespace plcroute {

using NodeId = std::size_t;

/// Index of the polling master in every channel model.
inline constexpr NodeId kMaster = 0;

/// Raised for malformed channel models, specs and files.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Square matrix of directed per-slot packet error rates. Entry (i, j) is the
/// probability that a packet sent by node i is not received by node j. Node 0
/// is the master. Immutable once constructed.
class PerMatrix {
 public:
  /// Takes a row-major n*n buffer. Throws ValidationError naming the first
  /// offending cell if an entry is outside [0, 1] or the diagonal is nonzero.
  PerMatrix(std::size_t node_count, std::vector<double> row_major)
      : n_(node_count), per_(std::move(row_major)) {
    if (n_ < 2) {
      throw ValidationError("node_count must be at least 2, got " + std::to_string(n_));
    }
    if (per_.size() != n_ * n_) {
      throw ValidationError("non-square: expected " + std::to_string(n_ * n_) +
                            " entries, got " + std::to_string(per_.size()));
    }
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        const double v = per_[i * n_ + j];
        if (!(v >= 0.0 && v <= 1.0)) {
          throw ValidationError("out of range at " + cell(i, j));
        }
        if (i == j && v != 0.0) {
          throw ValidationError("nonzero diagonal at " + cell(i, j));
        }
      }
    }
  }

  std::size_t node_count() const noexcept { return n_; }
  std::size_t slave_count() const noexcept { return n_ - 1; }

  double operator()(NodeId from, NodeId to) const noexcept { return per_[from * n_ + to]; }

  /// Probability that a single transmission on from->to succeeds.
  double success(NodeId from, NodeId to) const noexcept { return 1.0 - (*this)(from, to); }

  const std::vector<double>& row_major() const noexcept { return per_; }

  bool is_symmetric() const noexcept {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  friend bool operator==(const PerMatrix&, const PerMatrix&) = default;

 private:
  static std::string cell(std::size_t i, std::size_t j) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
  }

  std::size_t n_;
  std::vector<double> per_;
};

/// Every slave index of the matrix, ascending.
inline std::vector<NodeId> all_slaves(const PerMatrix& per) {
  std::vector<NodeId> s;
  for (NodeId v = 1; v < per.node_count(); ++v) s.push_back(v);
  return s;
}

// ---------------------------------------------------------------------------
// Synthetic generators

enum class ChannelKind { ring, rand_area, file };

enum class MatrixFormat { text, json };

struct RingParams {
  double per_adjacent = 0.1;
  double per_two_hop = 0.6;
};

struct RandAreaParams {
  double d50 = 0.3;
  double width = 0.07;
  std::uint64_t seed = 1;
};

struct FileParams {
  std::string path;
  MatrixFormat format = MatrixFormat::text;
};

/// Parameterized description of a channel model.
struct ChannelSpec {
  ChannelKind kind = ChannelKind::ring;
  std::size_t node_count = 10;
  RingParams ring;
  RandAreaParams rand_area;
  FileParams file;

  void validate() const {
    switch (kind) {
      case ChannelKind::ring:
        if (node_count < 3) throw ValidationError("ring needs at least 3 nodes");
        if (!(0.0 <= ring.per_adjacent && ring.per_adjacent <= ring.per_two_hop &&
              ring.per_two_hop <= 1.0)) {
          throw ValidationError("ring requires 0 <= per_adjacent <= per_two_hop <= 1");
        }
        break;
      case ChannelKind::rand_area:
        if (node_count < 2) throw ValidationError("rand_area needs at least 2 nodes");
        if (!(rand_area.d50 > 0.0) || !(rand_area.width > 0.0)) {
          throw ValidationError("rand_area requires d50 > 0 and width > 0");
        }
        break;
      case ChannelKind::file:
        if (file.path.empty()) throw ValidationError("file channel needs a path");
        break;
    }
  }
};

/// Ring of node_count nodes. Links at ring distance 1 get per_adjacent,
/// distance 2 get per_two_hop, anything farther is cut (PER 1).
inline PerMatrix generate_ring(std::size_t node_count, double per_adjacent, double per_two_hop) {
  ChannelSpec spec;
  spec.kind = ChannelKind::ring;
  spec.node_count = node_count;
  spec.ring = {per_adjacent, per_two_hop};
  spec.validate();

  const std::size_t n = node_count;
  std::vector<double> per(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const std::size_t diff = i > j ? i - j : j - i;
      const std::size_t d = std::min(diff, n - diff);
      per[i * n + j] = d == 1 ? per_adjacent : d == 2 ? per_two_hop : 1.0;
    }
  }
  return PerMatrix(n, std::move(per));
}

/// Logistic PER as a function of distance: 0.5 at d50, slope set by width.
inline double logistic_per(double distance, double d50, double width) {
  const double v = 1.0 / (1.0 + std::exp(-(distance - d50) / width));
  return std::clamp(v, 0.0, 1.0);
}

/// Master at the centre of the unit square, slaves uniform in the square.
inline PerMatrix generate_rand_area(std::size_t node_count, double d50, double width,
                                    std::uint64_t seed) {
  ChannelSpec spec;
  spec.kind = ChannelKind::rand_area;
  spec.node_count = node_count;
  spec.rand_area = {d50, width, seed};
  spec.validate();

  const std::size_t n = node_count;
  std::vector<double> x(n, 0.5), y(n, 0.5);
  std::mt19937_64 engine(seed);
  for (std::size_t i = 1; i < n; ++i) {
    x[i] = uniform01(engine);
    y[i] = uniform01(engine);
  }
  std::vector<double> per(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double v = logistic_per(std::hypot(x[i] - x[j], y[i] - y[j]), d50, width);
      per[i * n + j] = v;
      per[j * n + i] = v;
    }
  }
  return PerMatrix(n, std::move(per));
}

// ---------------------------------------------------------------------------
// Serialization

inline MatrixFormat format_from_path(std::string_view path) {
  return path.ends_with(".json") ? MatrixFormat::json : MatrixFormat::text;
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto ws = " \t\r";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

inline double parse_real(std::string_view token, std::size_t row, std::size_t col) {
  token = trim(token);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
    throw ValidationError("unparsable entry '" + std::string(token) + "' at (" +
                          std::to_string(row) + "," + std::to_string(col) + ")");
  }
  return v;
}

}  // namespace detail

/// Parses the comma-separated text form: one row per line, '#' comments.
inline PerMatrix parse_text_matrix(std::string_view text) {
  std::vector<std::vector<double>> rows;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const auto line = detail::trim(text.substr(pos, end - pos));
    pos = end + 1;
    if (line.empty() || line.front() == '#') continue;
    std::vector<double> row;
    std::size_t p = 0;
    while (true) {
      auto comma = line.find(',', p);
      const auto token = line.substr(p, comma == std::string_view::npos ? line.size() - p : comma - p);
      row.push_back(detail::parse_real(token, rows.size(), row.size()));
      if (comma == std::string_view::npos) break;
      p = comma + 1;
    }
    rows.push_back(std::move(row));
  }
  const std::size_t n = rows.size();
  std::vector<double> flat;
  flat.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) {
      throw ValidationError("non-square: row " + std::to_string(i) + " has " +
                            std::to_string(rows[i].size()) + " values, expected " +
                            std::to_string(n));
    }
    flat.insert(flat.end(), rows[i].begin(), rows[i].end());
  }
  return PerMatrix(n, std::move(flat));
}

inline std::string format_text_matrix(const PerMatrix& m) {
  std::string out;
  char buf[32];
  const std::size_t n = m.node_count();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::snprintf(buf, sizeof buf, "%.17g", m(i, j));
      if (j) out += ',';
      out += buf;
    }
    out += '\n';
  }
  return out;
}

inline nlohmann::json matrix_to_json(const PerMatrix& m) {
  const std::size_t n = m.node_count();
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < n; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < n; ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return {{"node_count", n}, {"per", std::move(rows)}};
}

/// Accepts `per` either as an array of rows or as a flat row-major array.
inline PerMatrix matrix_from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("node_count") || !doc.contains("per")) {
    throw ValidationError("structured matrix needs 'node_count' and 'per'");
  }
  const auto n = doc.at("node_count").get<std::size_t>();
  const auto& per = doc.at("per");
  std::vector<double> flat;
  if (!per.is_array()) throw ValidationError("'per' must be an array");
  if (!per.empty() && per.front().is_array()) {
    if (per.size() != n) throw ValidationError("non-square: row count differs from node_count");
    for (std::size_t i = 0; i < per.size(); ++i) {
      if (per[i].size() != n) {
        throw ValidationError("non-square: row " + std::to_string(i) + " has " +
                              std::to_string(per[i].size()) + " values");
      }
      for (const auto& v : per[i]) flat.push_back(v.get<double>());
    }
  } else {
    for (const auto& v : per) flat.push_back(v.get<double>());
  }
  return PerMatrix(n, std::move(flat));
}

inline PerMatrix load_matrix(const std::string& path, MatrixFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open matrix file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  if (format == MatrixFormat::text) return parse_text_matrix(ss.str());
  try {
    return matrix_from_json(nlohmann::json::parse(ss.str()));
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError("malformed structured matrix '" + path + "': " + e.what());
  }
}

inline PerMatrix load_matrix(const std::string& path) {
  return load_matrix(path, format_from_path(path));
}

inline void save_matrix(const PerMatrix& m, const std::string& path, MatrixFormat format) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ValidationError("cannot write matrix file '" + path + "'");
  if (format == MatrixFormat::text) {
    out << format_text_matrix(m);
  } else {
    out << matrix_to_json(m).dump(1) << '\n';
  }
  if (!out) throw ValidationError("write failed for '" + path + "'");
}

inline void save_matrix(const PerMatrix& m, const std::string& path) {
  save_matrix(m, path, format_from_path(path));
}

/// Builds the matrix a spec describes.
inline PerMatrix make_channel(const ChannelSpec& spec) {
  spec.validate();
  switch (spec.kind) {
    case ChannelKind::ring:
      return generate_ring(spec.node_count, spec.ring.per_adjacent, spec.ring.per_two_hop);
    case ChannelKind::rand_area:
      return generate_rand_area(spec.node_count, spec.rand_area.d50, spec.rand_area.width,
                                spec.rand_area.seed);
    case ChannelKind::file:
      return load_matrix(spec.file.path, spec.file.format);
  }
  throw ValidationError("unknown channel kind");
}

}  // namespace plcroute

#endif  // PLCROUTE_CHANNEL_HPP_
