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

#ifndef PLCROUTE_DLC_ANALYTIC_HPP_
#define PLCROUTE_DLC_ANALYTIC_HPP_

// Expected polling-cycle duration under DLC1000 dynamic source routing. The
// master picks, for each slave, the repeater sequence and repeater count that
// minimize the expected number of slots until one request/confirm exchange
// succeeds. Every try over n_R repeaters costs 2*(n_R+1) slots.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "plcroute/channel.hpp"

namespace plcroute::dlc {

struct PathResult {
  std::vector<NodeId> repeaters;  // R_1..R_nR, master side first
  double success_prob = 0.0;      // one try, request and confirm
};

struct LevelResult {
  std::size_t level = 0;
  PathResult path;
  std::optional<double> expected_duration;  // empty: never succeeds
};

struct SlaveAnalysis {
  NodeId slave = 0;
  std::size_t best_level = 0;
  std::optional<double> expected_duration;  // empty: unreachable
  std::vector<LevelResult> per_level;

  bool reachable() const noexcept { return expected_duration.has_value(); }
  const LevelResult& best() const { return per_level.at(best_level); }
};

struct CycleAnalysis {
  std::vector<SlaveAnalysis> slaves;
  double partial_total = 0.0;  // sum over reachable slaves
  std::vector<NodeId> unreachable;

  bool complete() const noexcept { return unreachable.empty(); }
  /// Cycle sum, or empty when some slave cannot be reached (infinite).
  std::optional<double> total() const {
    if (!complete()) return std::nullopt;
    return partial_total;
  }
};

/// Probability that one request/confirm exchange over `repeaters` succeeds:
/// the forward links master->R_1->...->s and the reverse links back.
inline double round_trip_success(const PerMatrix& per, std::span<const NodeId> repeaters,
                                 NodeId slave) {
  const std::size_t n = per.node_count();
  if (slave == kMaster || slave >= n) {
    throw ValidationError("invalid path: destination " + std::to_string(slave));
  }
  std::vector<bool> seen(n, false);
  for (NodeId r : repeaters) {
    if (r >= n || r == kMaster || r == slave || seen[r]) {
      throw ValidationError("invalid path: repeater " + std::to_string(r));
    }
    seen[r] = true;
  }
  double p = 1.0;
  NodeId prev = kMaster;
  for (NodeId r : repeaters) {
    p *= per.success(prev, r);
    prev = r;
  }
  p *= per.success(prev, slave);
  prev = slave;
  for (auto it = repeaters.rbegin(); it != repeaters.rend(); ++it) {
    p *= per.success(prev, *it);
    prev = *it;
  }
  p *= per.success(prev, kMaster);
  return p;
}

inline double round_trip_success(const PerMatrix& per, std::initializer_list<NodeId> repeaters,
                                 NodeId slave) {
  return round_trip_success(per, std::span<const NodeId>(repeaters.begin(), repeaters.size()),
                            slave);
}

namespace detail {

// Branch and bound over simple repeater sequences in lexicographic order.
// The bound table holds, per hop count and node, the best product of
// two-way link factors over any walk to the slave (simple or not), so it never
// underestimates the remaining factor.
class PathSearch {
 public:
  PathSearch(const PerMatrix& per, NodeId slave, std::size_t level)
      : per_(per), n_(per.node_count()), slave_(slave), level_(level),
        weight_(n_ * n_), bound_((level + 2) * n_, 0.0), used_(n_, false) {
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t b = 0; b < n_; ++b)
        weight_[a * n_ + b] = a == b ? 0.0 : per.success(a, b) * per.success(b, a);

    bound_[0 * n_ + slave_] = 1.0;
    for (std::size_t h = 1; h <= level_ + 1; ++h) {
      for (std::size_t v = 0; v < n_; ++v) {
        double best = 0.0;
        if (h == 1) {
          best = w(v, slave_);
        } else {
          for (std::size_t u = 1; u < n_; ++u) {
            if (u == slave_ || u == v) continue;
            best = std::max(best, w(v, u) * bound_[(h - 1) * n_ + u]);
          }
        }
        bound_[h * n_ + v] = best;
      }
    }
  }

  PathResult run() {
    PathResult result;
    if (bound_[(level_ + 1) * n_ + kMaster] > 0.0) {
      current_.clear();
      visit(kMaster, 1.0);
    }
    if (found_) {
      result.repeaters = best_seq_;
      result.success_prob = best_;
      return result;
    }
    // No sequence succeeds: report the lexicographically first one.
    for (NodeId v = 1; v < n_ && result.repeaters.size() < level_; ++v)
      if (v != slave_) result.repeaters.push_back(v);
    result.success_prob = round_trip_success(per_, result.repeaters, slave_);
    return result;
  }

 private:
  static constexpr double kSlack = 1e-9;

  double w(NodeId a, NodeId b) const { return weight_[a * n_ + b]; }

  void visit(NodeId last, double prefix) {
    const std::size_t placed = current_.size();
    if (placed == level_) {
      const double estimate = prefix * w(last, slave_);
      if (estimate == 0.0 || estimate * (1.0 + kSlack) < best_) return;
      const double exact = round_trip_success(per_, current_, slave_);
      if (!found_ || exact > best_) {
        found_ = exact > 0.0;
        best_ = exact;
        best_seq_ = current_;
      }
      return;
    }
    const std::size_t hops_after = level_ - placed;  // hops from the next repeater to the slave
    for (NodeId u = 1; u < n_; ++u) {
      if (u == slave_ || used_[u]) continue;
      const double next = prefix * w(last, u);
      const double reach = next * bound_[hops_after * n_ + u];
      if (reach == 0.0 || reach * (1.0 + kSlack) < best_) continue;
      used_[u] = true;
      current_.push_back(u);
      visit(u, next);
      current_.pop_back();
      used_[u] = false;
    }
  }

  const PerMatrix& per_;
  std::size_t n_;
  NodeId slave_;
  std::size_t level_;
  std::vector<double> weight_;
  std::vector<double> bound_;
  std::vector<bool> used_;
  std::vector<NodeId> current_;
  std::vector<NodeId> best_seq_;
  double best_ = 0.0;
  bool found_ = false;
};

}  // namespace detail

/// Highest-probability sequence of `level` distinct repeaters to `slave`.
/// Ties go to the lexicographically smallest sequence.
inline PathResult best_path(const PerMatrix& per, NodeId slave, std::size_t level) {
  const std::size_t n = per.node_count();
  if (slave == kMaster || slave >= n) {
    throw ValidationError("invalid slave " + std::to_string(slave));
  }
  if (level > n - 2) {
    throw ValidationError("repeater level " + std::to_string(level) + " exceeds node_count - 2");
  }
  if (level == 0) return {{}, round_trip_success(per, std::span<const NodeId>{}, slave)};
  return detail::PathSearch(per, slave, level).run();
}

/// Mean slots until the first successful try when each try over `level`
/// repeaters succeeds with probability p. Empty when p == 0.
inline std::optional<double> expected_duration(double p, std::size_t level, double slot_time) {
  if (!(p > 0.0)) return std::nullopt;
  return 2.0 * slot_time * static_cast<double>(level + 1) / p;
}

inline SlaveAnalysis slave_analysis(const PerMatrix& per, NodeId slave, std::size_t max_level,
                                    double slot_time) {
  if (!(slot_time > 0.0)) throw ValidationError("slot time must be positive");
  SlaveAnalysis out;
  out.slave = slave;
  const std::size_t top = std::min(max_level, per.node_count() - 2);
  for (std::size_t level = 0; level <= top; ++level) {
    LevelResult lr;
    lr.level = level;
    lr.path = best_path(per, slave, level);
    lr.expected_duration = expected_duration(lr.path.success_prob, level, slot_time);
    if (lr.expected_duration &&
        (!out.expected_duration || *lr.expected_duration < *out.expected_duration)) {
      out.expected_duration = lr.expected_duration;
      out.best_level = level;
    }
    out.per_level.push_back(std::move(lr));
  }
  return out;
}

/// Cycle sum over the given slaves.
inline CycleAnalysis cycle_analysis(const PerMatrix& per, std::span<const NodeId> slaves,
                                    std::size_t max_level, double slot_time) {
  CycleAnalysis out;
  for (NodeId s : slaves) {
    auto sa = slave_analysis(per, s, max_level, slot_time);
    if (sa.reachable()) {
      out.partial_total += *sa.expected_duration;
    } else {
      out.unreachable.push_back(s);
    }
    out.slaves.push_back(std::move(sa));
  }
  return out;
}

inline CycleAnalysis cycle_analysis(const PerMatrix& per, std::size_t max_level,
                                    double slot_time) {
  return cycle_analysis(per, all_slaves(per), max_level, slot_time);
}

}  // namespace plcroute::dlc

#endif  // PLCROUTE_DLC_ANALYTIC_HPP_
