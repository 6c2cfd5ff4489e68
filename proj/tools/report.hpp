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

#ifndef PLCROUTE_TOOLS_REPORT_HPP_
#define PLCROUTE_TOOLS_REPORT_HPP_

// Plain tables rendered as fixed-width text or CSV.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

namespace plcroute::cli {

struct Table {
  std::string title;
  std::vector<std::string> headers;
  std::vector<std::vector<std::string>> rows;

  void add(std::vector<std::string> row) { rows.push_back(std::move(row)); }

  std::string text() const {
    std::vector<std::size_t> width(headers.size(), 0);
    for (std::size_t c = 0; c < headers.size(); ++c) width[c] = headers[c].size();
    for (const auto& r : rows)
      for (std::size_t c = 0; c < r.size() && c < width.size(); ++c)
        width[c] = std::max(width[c], r[c].size());
    auto line = [&](const std::vector<std::string>& cells) {
      std::string s;
      for (std::size_t c = 0; c < width.size(); ++c) {
        const std::string& v = c < cells.size() ? cells[c] : std::string();
        if (c) s += "  ";
        s += c == 0 ? v + std::string(width[c] - v.size(), ' ')
                    : std::string(width[c] - v.size(), ' ') + v;
      }
      while (!s.empty() && s.back() == ' ') s.pop_back();
      return s + '\n';
    };
    std::string out = title.empty() ? "" : title + '\n';
    out += line(headers);
    std::size_t total = 0;
    for (auto w : width) total += w;
    out += std::string(total + 2 * (width.size() - 1), '-') + '\n';
    for (const auto& r : rows) out += line(r);
    return out;
  }

  std::string csv() const {
    auto quote = [](const std::string& v) {
      if (v.find_first_of(",\"\n") == std::string::npos) return v;
      std::string q = "\"";
      for (char ch : v) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
      return q + '"';
    };
    std::string out = title.empty() ? "" : "# " + title + '\n';
    auto line = [&](const std::vector<std::string>& cells) {
      std::string s;
      for (std::size_t c = 0; c < cells.size(); ++c) s += (c ? "," : "") + quote(cells[c]);
      return s + '\n';
    };
    out += line(headers);
    for (const auto& r : rows) out += line(r);
    return out;
  }
};

inline std::string fixed(double v, int digits = 3) {
  if (std::isinf(v)) return "inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

inline std::string percent(double ratio, int digits = 1) { return fixed(100.0 * ratio, digits) + "%"; }

inline std::string duration_cell(const std::optional<double>& d, int digits = 3) {
  return d ? fixed(*d, digits) : std::string("unreachable");
}

}  // namespace plcroute::cli

#endif  // PLCROUTE_TOOLS_REPORT_HPP_
