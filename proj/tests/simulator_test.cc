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

#include "plcroute/simulator.hpp"

#include <cmath>
#include <vector>

#include "gtest/gtest.h"
#include "oracles.hpp"

namespace plcroute::sim {
namespace {

PerMatrix perfect_pair() { return PerMatrix(2, {0.0, 0.0, 0.0, 0.0}); }

// Slots re-derived from the per-slave logs with the per-try cost expressions.
std::uint64_t rederive_slots(const SimReport& r) {
  std::uint64_t total = 0;
  for (const auto& s : r.per_slave) {
    for (std::size_t k = 0; k < s.tries_histogram.size(); ++k) {
      std::uint64_t per_poll = 0;
      for (std::uint64_t j = 0; j <= k; ++j) per_poll += try_cost(r.protocol, s, j, r.max_level);
      total += s.tries_histogram[k] * per_poll;
    }
    std::uint64_t give_up = 0;
    for (std::uint64_t j = 0; j <= r.max_retries; ++j) give_up += try_cost(r.protocol, s, j, r.max_level);
    total += s.give_ups * give_up;
  }
  return total;
}

TEST(SimulateDlcTest, PerfectPair) {
  SimConfig cfg;
  cfg.cycles = 200;
  cfg.slot_time = 1.5;
  const auto r = simulate_dlc(perfect_pair(), cfg);
  EXPECT_DOUBLE_EQ(r.mean_cycle_duration, 3.0);
  EXPECT_EQ(r.per_slave[0].attempts, 200u);
  EXPECT_EQ(r.reached_count, 1u);
  EXPECT_EQ(r.total_slots, 400u);
}

TEST(SimulateDlcTest, BrokenLinkNeverReached) {
  SimConfig cfg;
  cfg.cycles = 50;
  cfg.max_level = 0;
  const auto r = simulate_dlc(PerMatrix(2, {0.0, 1.0, 0.0, 0.0}), cfg);
  EXPECT_EQ(r.per_slave[0].give_ups, 50u);
  EXPECT_EQ(r.reached_count, 0u);
  EXPECT_EQ(r.mean_cycle_duration, 0.0);
  EXPECT_EQ(r.total_slots, 50u * 3u * 2u);
}

TEST(SimulateSfnTest, PerfectPair) {
  SimConfig cfg;
  cfg.cycles = 100;
  cfg.max_level = 2;
  const auto r = simulate_sfn(perfect_pair(), cfg);
  EXPECT_EQ(r.per_slave[0].r_dl, 0u);
  EXPECT_EQ(r.per_slave[0].r_ul, 0u);
  EXPECT_DOUBLE_EQ(r.mean_cycle_duration, 2.0);
}

TEST(SimulateSfnTest, DeterministicLine) {
  SimConfig cfg;
  cfg.cycles = 100;
  cfg.max_level = 3;
  const auto r = simulate_sfn(oracle::lossless_line(3), cfg);
  const auto& s = r.per_slave[1];
  EXPECT_EQ(s.tries_histogram, std::vector<std::uint64_t>{100});
  EXPECT_DOUBLE_EQ(s.mean_round_trip_slots(), 4.0);
  EXPECT_DOUBLE_EQ(r.mean_cycle_duration, 6.0);
}

TEST(SimulateFloodTest, LosslessLineArrivesAtHopDistance) {
  SplitMix64 rng(1);
  for (std::size_t n = 2; n <= 6; ++n) {
    const auto m = oracle::lossless_line(n);
    for (NodeId v = 1; v < n; ++v) {
      EXPECT_EQ(simulate_flood(m, kMaster, v, n, rng), std::optional<std::size_t>(v - 1));
      if (v >= 2) EXPECT_FALSE(simulate_flood(m, kMaster, v, v - 2, rng).has_value());
    }
  }
}

TEST(SimulatorTest, DeterministicAcrossThreadCounts) {
  const auto m = generate_ring(10, 0.1, 0.6);
  for (Protocol p : {Protocol::dlc1000, Protocol::sfn}) {
    SimConfig cfg;
    cfg.protocol = p;
    cfg.cycles = 500;
    cfg.max_level = p == Protocol::sfn ? 10 : 2;
    cfg.seed = 42;
    const auto serial = simulate(m, cfg);
    EXPECT_EQ(serial, simulate(m, cfg));
    cfg.threads = 4;
    EXPECT_EQ(serial, simulate(m, cfg));
    cfg.seed = 43;
    EXPECT_NE(serial, simulate(m, cfg));
  }
}

TEST(SimulatorTest, SlotAccountingMatchesPerTryCosts) {
  const auto m = generate_rand_area(15, 0.3, 0.07, 6);
  for (Protocol p : {Protocol::dlc1000, Protocol::sfn}) {
    SimConfig cfg;
    cfg.protocol = p;
    cfg.cycles = 300;
    cfg.max_retries = 2;
    cfg.max_level = p == Protocol::sfn ? 15 : 3;
    const auto r = simulate(m, cfg);
    EXPECT_EQ(r.total_slots, rederive_slots(r));
    EXPECT_LE(r.mean_cycle_duration * r.cycles, static_cast<double>(r.total_slots));
    EXPECT_LE(r.reached_count, m.slave_count());
  }
}

TEST(SimulatorTest, GenerousRetriesNeverGiveUpOnConnectedChannels) {
  const auto m = generate_ring(8, 0.0, 0.0);
  for (Protocol p : {Protocol::dlc1000, Protocol::sfn}) {
    SimConfig cfg;
    cfg.protocol = p;
    cfg.cycles = 100;
    cfg.max_retries = 1000;
    cfg.max_level = 8;
    for (const auto& s : simulate(m, cfg).per_slave) EXPECT_EQ(s.give_ups, 0u);
  }
}

TEST(SimulatorTest, RejectsZeroCycles) {
  SimConfig cfg;
  cfg.cycles = 0;
  EXPECT_THROW(simulate(perfect_pair(), cfg), ValidationError);
}

double three_se(double p, double n) { return 3.0 * std::sqrt(p * (1.0 - p) / n) + 1e-12; }

TEST(SimulatorTest, DlcFirstTrySuccessConvergesToAnalytic) {
  const auto m = generate_rand_area(5, 0.3, 0.07, 13);
  SimConfig cfg;
  cfg.cycles = 100000;
  cfg.max_retries = 0;
  cfg.max_level = 3;
  const auto r = simulate_dlc(m, cfg);
  for (const auto& s : r.per_slave) {
    const double p = dlc::slave_analysis(m, s.slave, 3, 1.0).best().path.success_prob;
    const double freq = static_cast<double>(s.successes) / static_cast<double>(s.polls);
    EXPECT_NEAR(freq, p, three_se(p, s.polls)) << "slave " << s.slave;
  }
}

TEST(SimulatorTest, SfnFirstTrySuccessConvergesOnSinglePathModels) {
  // Lossy pair and lossy three-node line: the flood has one route each way.
  std::vector<PerMatrix> models = {PerMatrix(2, {0.0, 0.3, 0.2, 0.0}),
                                   PerMatrix(3, {0.0, 0.1, 1.0,  //
                                                 0.15, 0.0, 0.2,  //
                                                 1.0, 0.25, 0.0})};
  for (const auto& m : models) {
    SimConfig cfg;
    cfg.cycles = 100000;
    cfg.max_retries = 0;
    cfg.max_level = m.node_count();
    const auto r = simulate_sfn(m, cfg);
    for (const auto& s : r.per_slave) {
      const double p = sfn::slave_analysis(m, s.slave, 1.0, m.node_count()).poll_success;
      const double freq = static_cast<double>(s.successes) / static_cast<double>(s.polls);
      EXPECT_NEAR(freq, p, three_se(p, s.polls)) << "n=" << m.node_count() << " slave " << s.slave;
    }
  }
}

TEST(SimulatorTest, DownlinkChainHistogramOnSinglePathModel) {
  const PerMatrix m(3, {0.0, 0.1, 1.0, 0.15, 0.0, 0.2, 1.0, 0.25, 0.0});
  const auto fp = sfn::flood(m, kMaster, 1.0, 3);
  const auto pi = sfn::level_distribution(fp, 2).pi;
  const auto h = sample_first_success_levels(m, 2, 3, 50000, 3);
  for (std::size_t r = 0; r <= 3; ++r) {
    const double freq = static_cast<double>(h.counts[r]) / 50000.0;
    EXPECT_NEAR(freq, pi[r], three_se(pi[r], 50000.0)) << "level " << r;
  }
}

}  // namespace
}  // namespace plcroute::sim
