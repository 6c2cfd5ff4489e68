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

#ifndef PLCROUTE_SFN_ANALYTIC_HPP_
#define PLCROUTE_SFN_ANALYTIC_HPP_

// Expected polling-cycle duration under SFN flooding. A flood is described by
// per-level transmit and first-reception probabilities of every node; the
// master then picks downlink/uplink repeater levels around the mean level at
// which a retry-escalating poll first succeeds.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "plcroute/channel.hpp"

namespace plcroute::sfn {

/// How a node's transmit probability at level r >= 2 is formed from its
/// first-reception probability at r-1.
enum class TransmitRule {
  // tx(r) = (1 - sum_{i<=r-2} tx(i)) * rcv(r-1), the recursion as published.
  as_printed,
  // tx(r) = rcv(r-1): a first reception is already disjoint from every
  // earlier transmission.
  first_reception,
};

/// Slot-indexed probabilities of one flood. Level r is slot r counted from
/// the origin's own transmission in slot 0.
class FloodProfile {
 public:
  FloodProfile(NodeId origin, double initial_tx, std::size_t horizon, std::size_t node_count)
      : origin_(origin), initial_tx_(initial_tx), horizon_(horizon), n_(node_count) {}

  NodeId origin() const noexcept { return origin_; }
  double initial_tx() const noexcept { return initial_tx_; }
  std::size_t node_count() const noexcept { return n_; }
  /// Requested maximum level.
  std::size_t horizon() const noexcept { return horizon_; }
  /// Last level actually materialized; every later level has no transmitter.
  std::size_t last_level() const noexcept { return levels() - 1; }
  std::size_t levels() const noexcept { return tx_.size() / n_; }

  double tx(NodeId node, std::size_t r) const noexcept {
    return r < levels() ? tx_[r * n_ + node] : 0.0;
  }
  double rcv(NodeId node, std::size_t r) const noexcept {
    return r < levels() ? rcv_[r * n_ + node] : 0.0;
  }
  /// Probability of a correct reception at some level <= r.
  double cumulative(NodeId node, std::size_t r) const noexcept {
    return cum_[std::min(r, last_level()) * n_ + node];
  }

 private:
  friend FloodProfile flood(const PerMatrix&, NodeId, double, std::size_t, TransmitRule);

  NodeId origin_;
  double initial_tx_;
  std::size_t horizon_;
  std::size_t n_;
  std::vector<double> tx_, rcv_, cum_;  // level-major
};

/// Runs the transmit/first-reception recursion from `origin`, which sends in
/// level 0 with probability initial_tx. Stops after `horizon` or as soon as
/// no node has any probability left to transmit.
inline FloodProfile flood(const PerMatrix& per, NodeId origin, double initial_tx,
                          std::size_t horizon,
                          TransmitRule rule = TransmitRule::as_printed) {
  const std::size_t n = per.node_count();
  if (origin >= n) throw ValidationError("flood origin out of range");
  if (!(initial_tx > 0.0 && initial_tx <= 1.0)) {
    throw ValidationError("initial transmit probability must be in (0, 1]");
  }
  FloodProfile fp(origin, initial_tx, horizon, n);
  std::vector<double> tx(n, 0.0), rcv(n, 0.0), cum(n, 0.0), tx_sent(n, 0.0);
  std::vector<NodeId> active;
  tx[origin] = initial_tx;

  for (std::size_t r = 0;; ++r) {
    if (r > 0) {
      bool any = false;
      for (NodeId v = 0; v < n; ++v) {
        const double prev_rcv = fp.rcv_[(r - 1) * n + v];
        double t = prev_rcv;
        if (r >= 2 && rule == TransmitRule::as_printed) {
          // tx_sent holds sum_{i<=r-2} tx(i) here.
          t = (1.0 - tx_sent[v]) * prev_rcv;
        }
        tx[v] = t;
        any = any || t > 0.0;
      }
      if (!any) break;
    }
    active.clear();
    for (NodeId v = 0; v < n; ++v)
      if (tx[v] > 0.0) active.push_back(v);

    for (NodeId v = 0; v < n; ++v) {
      if (v == origin) {
        rcv[v] = 0.0;
        continue;
      }
      double miss = 1.0;
      for (NodeId s : active) {
        if (s != v) miss *= 1.0 - tx[s] * per.success(s, v);
      }
      rcv[v] = (1.0 - cum[v]) * (1.0 - miss);
    }
    for (NodeId v = 0; v < n; ++v) {
      cum[v] += rcv[v];
      if (r >= 1) tx_sent[v] += fp.tx_[(r - 1) * n + v];
    }
    fp.tx_.insert(fp.tx_.end(), tx.begin(), tx.end());
    fp.rcv_.insert(fp.rcv_.end(), rcv.begin(), rcv.end());
    fp.cum_.insert(fp.cum_.end(), cum.begin(), cum.end());
    if (r == horizon) break;
  }
  return fp;
}

/// Distribution of the allowed level at which a poll first succeeds when the
/// level starts at 0 and grows by one after every failed attempt.
struct LevelDistribution {
  std::vector<double> pi;       // pi[r], r = 0..horizon
  double mean_level = 0.0;
  double truncated_mass = 1.0;  // probability of no success up to the horizon
  bool reachable = false;

  /// Residual mass large enough that the mean is conditional on the horizon.
  bool truncated() const noexcept { return truncated_mass >= 1e-9; }
};

/// Distribution for per-attempt success probabilities q[r], r = 0..horizon.
inline LevelDistribution level_distribution(std::span<const double> q) {
  LevelDistribution d;
  double fail = 1.0;
  double weighted = 0.0, mass = 0.0;
  for (std::size_t r = 0; r < q.size(); ++r) {
    const double p = q[r] * fail;
    d.pi.push_back(p);
    weighted += static_cast<double>(r) * p;
    mass += p;
    fail *= 1.0 - q[r];
  }
  d.truncated_mass = fail;
  d.reachable = mass > 0.0;
  d.mean_level = d.reachable ? weighted / mass : 0.0;
  return d;
}

/// Per-attempt success at level r is the target's cumulative reception up
/// to r, conditioned on the origin having transmitted at all.
inline LevelDistribution level_distribution(const FloodProfile& profile, NodeId target) {
  if (target == profile.origin() || target >= profile.node_count()) {
    throw ValidationError("level distribution target must differ from the origin");
  }
  std::vector<double> q;
  for (std::size_t r = 0; r <= profile.horizon(); ++r)
    q.push_back(std::min(1.0, profile.cumulative(target, r) / profile.initial_tx()));
  return level_distribution(q);
}

struct Candidate {
  std::size_t r_dl = 0;
  std::size_t r_ul = 0;
  double poll_success = 0.0;
  std::optional<double> expected_duration;
};

struct SlaveAnalysis {
  NodeId slave = 0;
  std::size_t r_dl = 0;
  std::size_t r_ul = 0;
  double poll_success = 0.0;
  std::optional<double> expected_duration;  // empty: unreachable
  double mean_dl = 0.0;
  std::vector<Candidate> candidates;

  bool reachable() const noexcept { return expected_duration.has_value(); }
};

struct CycleAnalysis {
  std::vector<SlaveAnalysis> slaves;
  double partial_total = 0.0;  // sum over reachable slaves
  std::vector<NodeId> unreachable;

  bool complete() const noexcept { return unreachable.empty(); }
  std::optional<double> total() const {
    if (!complete()) return std::nullopt;
    return partial_total;
  }
};

inline std::optional<double> expected_duration(double poll_success, std::size_t r_dl,
                                               std::size_t r_ul, double slot_time) {
  if (!(poll_success > 0.0)) return std::nullopt;
  return static_cast<double>(2 + r_dl + r_ul) * slot_time / poll_success;
}

inline std::vector<std::size_t> level_candidates(double mean) {
  const auto lo = static_cast<std::size_t>(std::floor(mean));
  const auto hi = static_cast<std::size_t>(std::ceil(mean));
  if (lo == hi) return {lo};
  return {lo, hi};
}

/// Analysis of one slave given the master's downlink flood profile.
inline SlaveAnalysis slave_analysis(const PerMatrix& per, const FloodProfile& downlink,
                                    NodeId slave, double slot_time) {
  if (slave == kMaster || slave >= per.node_count()) {
    throw ValidationError("invalid slave " + std::to_string(slave));
  }
  if (!(slot_time > 0.0)) throw ValidationError("slot time must be positive");
  SlaveAnalysis out;
  out.slave = slave;
  const auto dl = level_distribution(downlink, slave);
  if (!dl.reachable) return out;
  out.mean_dl = dl.mean_level;

  for (std::size_t r_dl : level_candidates(dl.mean_level)) {
    const double p_dl = downlink.cumulative(slave, r_dl);
    if (!(p_dl > 0.0)) {
      out.candidates.push_back({r_dl, 0, 0.0, std::nullopt});
      continue;
    }
    const auto uplink = flood(per, slave, p_dl, downlink.horizon());
    const auto ul = level_distribution(uplink, kMaster);
    if (!ul.reachable) {
      out.candidates.push_back({r_dl, 0, 0.0, std::nullopt});
      continue;
    }
    for (std::size_t r_ul : level_candidates(ul.mean_level)) {
      const double p_ul = std::min(1.0, uplink.cumulative(kMaster, r_ul) / p_dl);
      const double pr = p_dl * p_ul;
      Candidate c{r_dl, r_ul, pr, expected_duration(pr, r_dl, r_ul, slot_time)};
      if (c.expected_duration &&
          (!out.expected_duration || *c.expected_duration < *out.expected_duration)) {
        out.expected_duration = c.expected_duration;
        out.r_dl = r_dl;
        out.r_ul = r_ul;
        out.poll_success = pr;
      }
      out.candidates.push_back(c);
    }
  }
  return out;
}

inline SlaveAnalysis slave_analysis(const PerMatrix& per, NodeId slave, double slot_time,
                                    std::size_t horizon) {
  return slave_analysis(per, flood(per, kMaster, 1.0, horizon), slave, slot_time);
}

inline CycleAnalysis cycle_analysis(const PerMatrix& per, std::span<const NodeId> slaves,
                                    double slot_time, std::size_t horizon) {
  const auto downlink = flood(per, kMaster, 1.0, horizon);
  CycleAnalysis out;
  for (NodeId s : slaves) {
    auto sa = slave_analysis(per, downlink, s, slot_time);
    if (sa.reachable()) {
      out.partial_total += *sa.expected_duration;
    } else {
      out.unreachable.push_back(s);
    }
    out.slaves.push_back(std::move(sa));
  }
  return out;
}

/// Default horizon: one level per node.
inline std::size_t default_horizon(const PerMatrix& per) { return per.node_count(); }

inline CycleAnalysis cycle_analysis(const PerMatrix& per, double slot_time, std::size_t horizon) {
  return cycle_analysis(per, all_slaves(per), slot_time, horizon);
}

}  // namespace plcroute::sfn

#endif  // PLCROUTE_SFN_ANALYTIC_HPP_
