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

#ifndef PLCROUTE_SIMULATOR_HPP_
#define PLCROUTE_SIMULATOR_HPP_

// Slot-accurate Monte-Carlo polling of every slave, once per cycle, in index
// order. Every try draws from its own stream keyed by (seed, cycle, slave,
// try), so results do not depend on how cycles are spread over threads.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "plcroute/channel.hpp"
#include "plcroute/dlc_analytic.hpp"
#include "plcroute/random.hpp"
#include "plcroute/sfn_analytic.hpp"

namespace plcroute {

enum class Protocol { dlc1000, sfn };

inline std::string to_string(Protocol p) { return p == Protocol::dlc1000 ? "dlc1000" : "sfn"; }

}  // namespace plcroute

namespace plcroute::sim {

struct SimConfig {
  Protocol protocol = Protocol::sfn;
  std::uint64_t cycles = 1000;
  std::uint64_t max_retries = 2;
  // DLC1000: repeater-address cap. SFN: cap on the allowed level of any try.
  std::size_t max_level = 4;
  double slot_time = 1.0;
  std::uint64_t seed = 1;
  unsigned threads = 1;

  void validate() const {
    if (cycles < 1) throw ValidationError("cycles must be at least 1");
    if (!(slot_time > 0.0)) throw ValidationError("slot time must be positive");
    if (threads < 1) throw ValidationError("threads must be at least 1");
  }
};

struct SlaveStats {
  NodeId slave = 0;
  // Levels of the first try: n_R for DLC1000 (r_ul unused), r_DL/r_UL for SFN.
  std::size_t r_dl = 0;
  std::size_t r_ul = 0;
  std::uint64_t polls = 0;
  std::uint64_t attempts = 0;
  std::uint64_t successes = 0;
  std::uint64_t give_ups = 0;
  std::uint64_t slots = 0;          // every slot spent on this slave
  std::uint64_t success_slots = 0;  // slots of polls that eventually succeeded
  // tries_histogram[k]: successful polls that needed k+1 tries.
  std::vector<std::uint64_t> tries_histogram;

  double mean_round_trip_slots() const {
    return successes ? static_cast<double>(success_slots) / static_cast<double>(successes) : 0.0;
  }
  friend bool operator==(const SlaveStats&, const SlaveStats&) = default;
};

struct SimReport {
  Protocol protocol = Protocol::sfn;
  std::uint64_t cycles = 0;
  std::uint64_t max_retries = 0;
  std::size_t max_level = 0;
  double slot_time = 1.0;
  std::vector<SlaveStats> per_slave;
  // Mean time per cycle over successful polls only; see reached_count.
  double mean_cycle_duration = 0.0;
  std::size_t reached_count = 0;
  std::uint64_t total_slots = 0;
  std::uint64_t seed_echo = 0;

  friend bool operator==(const SimReport&, const SimReport&) = default;
};

/// Slots consumed by try j (0-based) of a poll.
inline std::uint64_t try_cost(Protocol protocol, const SlaveStats& s, std::uint64_t j,
                              std::size_t max_level) {
  if (protocol == Protocol::dlc1000) return 2 * (s.r_dl + 1);
  const std::uint64_t dl = std::min<std::uint64_t>(s.r_dl + j, max_level);
  const std::uint64_t ul = std::min<std::uint64_t>(s.r_ul + j, max_level);
  return 2 + dl + ul;
}

/// Floods from `origin` for levels 0..window (slots 0..window). Returns the
/// slot in which `target` first receives, if it does. Each node forwards at
/// most once, in the slot after its first reception, while level remains.
/// The target does not forward.
template <class Engine>
std::optional<std::size_t> simulate_flood(const PerMatrix& per, NodeId origin, NodeId target,
                                          std::size_t window, Engine& rng) {
  const std::size_t n = per.node_count();
  std::vector<char> received(n, 0);
  received[origin] = 1;
  std::vector<NodeId> senders{origin}, next;
  for (std::size_t slot = 0; slot <= window && !senders.empty(); ++slot) {
    next.clear();
    for (NodeId v = 0; v < n; ++v) {
      if (received[v]) continue;
      double miss = 1.0;
      for (NodeId s : senders) miss *= per(s, v);
      if (miss >= 1.0) continue;
      if (!bernoulli(rng, 1.0 - miss)) continue;
      received[v] = 1;
      if (v == target) return slot;
      if (slot < window) next.push_back(v);
    }
    std::swap(senders, next);
  }
  return std::nullopt;
}

namespace detail {

struct SlavePlan {
  NodeId slave = 0;
  std::size_t r_dl = 0;
  std::size_t r_ul = 0;
  std::vector<NodeId> path;  // DLC1000 repeaters
  bool hopeless = false;     // every try fails with certainty
};

inline std::vector<SlavePlan> plan(const PerMatrix& per, const SimConfig& cfg) {
  std::vector<SlavePlan> plans;
  if (cfg.protocol == Protocol::dlc1000) {
    for (NodeId s : all_slaves(per)) {
      const auto sa = dlc::slave_analysis(per, s, cfg.max_level, cfg.slot_time);
      const auto& best = sa.best();
      plans.push_back({s, best.level, 0, best.path.repeaters, !(best.path.success_prob > 0.0)});
    }
  } else {
    const auto downlink = sfn::flood(per, kMaster, 1.0, cfg.max_level);
    for (NodeId s : all_slaves(per)) {
      const auto sa = sfn::slave_analysis(per, downlink, s, cfg.slot_time);
      SlavePlan p{s, sa.r_dl, sa.r_ul, {}, false};
      if (!sa.reachable()) {
        // Nothing gets through even at the cap, so escalation cannot help.
        const double p_dl = downlink.cumulative(s, cfg.max_level);
        p.hopeless = !(p_dl > 0.0) ||
                     !(sfn::flood(per, s, p_dl, cfg.max_level).cumulative(kMaster, cfg.max_level) >
                       0.0);
      }
      plans.push_back(std::move(p));
    }
  }
  return plans;
}

inline bool dlc_try(const PerMatrix& per, const SlavePlan& p, SplitMix64& rng) {
  NodeId prev = kMaster;
  for (NodeId r : p.path) {
    if (!bernoulli(rng, per.success(prev, r))) return false;
    prev = r;
  }
  if (!bernoulli(rng, per.success(prev, p.slave))) return false;
  prev = p.slave;
  for (auto it = p.path.rbegin(); it != p.path.rend(); ++it) {
    if (!bernoulli(rng, per.success(prev, *it))) return false;
    prev = *it;
  }
  return bernoulli(rng, per.success(prev, kMaster));
}

inline bool sfn_try(const PerMatrix& per, const SlavePlan& p, std::uint64_t j,
                    std::size_t max_level, SplitMix64& rng) {
  const std::size_t dl = std::min<std::uint64_t>(p.r_dl + j, max_level);
  const std::size_t ul = std::min<std::uint64_t>(p.r_ul + j, max_level);
  // The slave answers only after the whole downlink window has elapsed.
  if (!simulate_flood(per, kMaster, p.slave, dl, rng)) return false;
  return simulate_flood(per, p.slave, kMaster, ul, rng).has_value();
}

inline std::vector<SlaveStats> run_cycles(const PerMatrix& per, const SimConfig& cfg,
                                          const std::vector<SlavePlan>& plans,
                                          std::uint64_t first, std::uint64_t last) {
  std::vector<SlaveStats> stats;
  for (const auto& p : plans) {
    SlaveStats s;
    s.slave = p.slave;
    s.r_dl = p.r_dl;
    s.r_ul = p.r_ul;
    stats.push_back(std::move(s));
  }
  for (std::uint64_t cycle = first; cycle < last; ++cycle) {
    for (std::size_t k = 0; k < plans.size(); ++k) {
      const auto& p = plans[k];
      auto& s = stats[k];
      ++s.polls;
      std::uint64_t spent = 0;
      bool ok = false;
      std::uint64_t j = 0;
      for (; j <= cfg.max_retries; ++j) {
        spent += try_cost(cfg.protocol, s, j, cfg.max_level);
        if (p.hopeless) continue;
        auto rng = derive_stream(cfg.seed, {cycle, p.slave, j});
        ok = cfg.protocol == Protocol::dlc1000 ? dlc_try(per, p, rng)
                                               : sfn_try(per, p, j, cfg.max_level, rng);
        if (ok) break;
      }
      s.attempts += ok ? j + 1 : cfg.max_retries + 1;
      s.slots += spent;
      if (ok) {
        ++s.successes;
        s.success_slots += spent;
        if (s.tries_histogram.size() <= j) s.tries_histogram.resize(j + 1, 0);
        ++s.tries_histogram[j];
      } else {
        ++s.give_ups;
      }
    }
  }
  return stats;
}

inline void merge(std::vector<SlaveStats>& into, const std::vector<SlaveStats>& part) {
  for (std::size_t k = 0; k < into.size(); ++k) {
    auto& a = into[k];
    const auto& b = part[k];
    a.polls += b.polls;
    a.attempts += b.attempts;
    a.successes += b.successes;
    a.give_ups += b.give_ups;
    a.slots += b.slots;
    a.success_slots += b.success_slots;
    if (a.tries_histogram.size() < b.tries_histogram.size())
      a.tries_histogram.resize(b.tries_histogram.size(), 0);
    for (std::size_t i = 0; i < b.tries_histogram.size(); ++i)
      a.tries_histogram[i] += b.tries_histogram[i];
  }
}

}  // namespace detail

/// Runs cfg.cycles polling cycles of cfg.protocol over `per`.
inline SimReport simulate(const PerMatrix& per, const SimConfig& cfg) {
  cfg.validate();
  const auto plans = detail::plan(per, cfg);

  const std::uint64_t workers = std::min<std::uint64_t>(cfg.threads, cfg.cycles);
  std::vector<std::vector<SlaveStats>> parts(workers);
  {
    std::vector<std::jthread> pool;
    for (std::uint64_t w = 0; w < workers; ++w) {
      const std::uint64_t first = cfg.cycles * w / workers;
      const std::uint64_t last = cfg.cycles * (w + 1) / workers;
      pool.emplace_back([&, w, first, last] {
        parts[w] = detail::run_cycles(per, cfg, plans, first, last);
      });
    }
  }
  std::vector<SlaveStats> stats = std::move(parts[0]);
  for (std::uint64_t w = 1; w < workers; ++w) detail::merge(stats, parts[w]);

  SimReport report;
  report.protocol = cfg.protocol;
  report.cycles = cfg.cycles;
  report.max_retries = cfg.max_retries;
  report.max_level = cfg.max_level;
  report.slot_time = cfg.slot_time;
  report.seed_echo = cfg.seed;
  std::uint64_t reached_slots = 0;
  for (const auto& s : stats) {
    report.total_slots += s.slots;
    reached_slots += s.success_slots;
    if (s.successes > 0) ++report.reached_count;
  }
  report.mean_cycle_duration =
      static_cast<double>(reached_slots) * cfg.slot_time / static_cast<double>(cfg.cycles);
  report.per_slave = std::move(stats);
  return report;
}

inline SimReport simulate_dlc(const PerMatrix& per, SimConfig cfg) {
  cfg.protocol = Protocol::dlc1000;
  return simulate(per, cfg);
}

inline SimReport simulate_sfn(const PerMatrix& per, SimConfig cfg) {
  cfg.protocol = Protocol::sfn;
  return simulate(per, cfg);
}

/// Level histogram of the downlink retry chain: attempts at allowed level
/// 0, 1, 2, ... until `target` first receives within the window. counts[r]
/// holds trials that first succeeded at level r; `truncated` those that never
/// did up to the horizon.
struct LevelHistogram {
  std::vector<std::uint64_t> counts;
  std::uint64_t truncated = 0;
  std::uint64_t trials = 0;
};

inline LevelHistogram sample_first_success_levels(const PerMatrix& per, NodeId target,
                                                  std::size_t horizon, std::uint64_t trials,
                                                  std::uint64_t seed) {
  LevelHistogram h;
  h.counts.assign(horizon + 1, 0);
  h.trials = trials;
  for (std::uint64_t t = 0; t < trials; ++t) {
    bool done = false;
    for (std::size_t r = 0; r <= horizon && !done; ++r) {
      auto rng = derive_stream(seed, {t, target, r});
      if (simulate_flood(per, kMaster, target, r, rng)) {
        ++h.counts[r];
        done = true;
      }
    }
    if (!done) ++h.truncated;
  }
  return h;
}

}  // namespace plcroute::sim

#endif  // PLCROUTE_SIMULATOR_HPP_
