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

#include "plcroute/sfn_analytic.hpp"

#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "oracles.hpp"
#include "plcroute/dlc_analytic.hpp"

namespace plcroute::sfn {
namespace {

// M=0, A=1, S=2; M-A and A-S lossless, M-S broken.
PerMatrix three_line() { return oracle::lossless_line(3); }

TEST(FloodTest, SingleLink) {
  const auto fp = flood(PerMatrix(2, {0.0, 0.3, 0.3, 0.0}), 0, 1.0, 4);
  EXPECT_DOUBLE_EQ(fp.rcv(1, 0), 0.7);
  EXPECT_EQ(fp.tx(0, 0), 1.0);
  EXPECT_EQ(fp.tx(1, 0), 0.0);
}

TEST(FloodTest, DeterministicRelay) {
  const auto fp = flood(three_line(), 0, 1.0, 4);
  EXPECT_EQ(fp.rcv(1, 0), 1.0);
  EXPECT_EQ(fp.rcv(2, 0), 0.0);
  EXPECT_EQ(fp.tx(1, 1), 1.0);
  EXPECT_EQ(fp.rcv(2, 1), 1.0);
  EXPECT_EQ(fp.rcv(0, 0), 0.0);
  EXPECT_EQ(fp.rcv(0, 1), 0.0);
}

TEST(FloodTest, MatchesStraightLineRecursion) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 20; ++t) {
    const auto m = oracle::random_matrix(4, rng);
    for (NodeId origin = 0; origin < 4; ++origin) {
      for (double init : {1.0, 0.6}) {
        const auto fp = flood(m, origin, init, 4);
        const auto want = oracle::straight_flood(m, origin, init, 4);
        for (std::size_t r = 0; r <= 4; ++r) {
          for (NodeId v = 0; v < 4; ++v) {
            EXPECT_NEAR(fp.tx(v, r), want.tx[r][v], 1e-12);
            EXPECT_NEAR(fp.rcv(v, r), want.rcv[r][v], 1e-12);
          }
        }
      }
    }
  }
}

TEST(FloodTest, StopsWhenNobodyTransmits) {
  const auto fp = flood(three_line(), 0, 1.0, 50);
  EXPECT_EQ(fp.horizon(), 50u);
  EXPECT_EQ(fp.last_level(), 2u);
  EXPECT_EQ(fp.cumulative(2, 40), 1.0);
}

TEST(FloodTest, RejectsBadInitialProbability) {
  EXPECT_THROW(flood(three_line(), 0, 0.0, 3), ValidationError);
  EXPECT_THROW(flood(three_line(), 0, 1.5, 3), ValidationError);
}

TEST(FloodPropertyTest, Conservation) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 20; ++t) {
    const auto m = oracle::random_matrix(6, rng);
    const auto fp = flood(m, 0, 1.0, 6);
    for (NodeId v = 0; v < 6; ++v) {
      double tx = 0.0, rcv = 0.0, prev = 0.0;
      for (std::size_t r = 0; r <= 6; ++r) {
        tx += fp.tx(v, r);
        rcv += fp.rcv(v, r);
        EXPECT_GE(fp.cumulative(v, r), prev);
        prev = fp.cumulative(v, r);
      }
      EXPECT_LE(tx, 1.0 + 1e-12);
      EXPECT_LE(rcv, 1.0 + 1e-12);
    }
  }
}

TEST(FloodPropertyTest, LosslessLineReceptionLevelIsHopDistanceMinusOne) {
  for (std::size_t n = 2; n <= 6; ++n) {
    const auto fp = flood(oracle::lossless_line(n), 0, 1.0, n);
    for (NodeId v = 1; v < n; ++v) {
      for (std::size_t r = 0; r <= n; ++r) EXPECT_EQ(fp.rcv(v, r), r + 1 == v ? 1.0 : 0.0);
    }
  }
}

// Degrading a link can only lower reception through level 1 on any matrix,
// and at every level when each node has a single upstream neighbour.
void expect_degradation_monotone(const PerMatrix& m, std::size_t max_level) {
  const std::size_t n = m.node_count();
  const auto base = flood(m, 0, 1.0, n);
  for (NodeId i = 0; i < n; ++i) {
    for (NodeId j = 0; j < n; ++j) {
      if (i == j) continue;
      auto v = m.row_major();
      v[i * n + j] = std::min(1.0, v[i * n + j] + 0.3);
      const auto worse = flood(PerMatrix(n, v), 0, 1.0, n);
      for (NodeId node = 1; node < n; ++node)
        for (std::size_t r = 0; r <= max_level; ++r)
          EXPECT_LE(worse.cumulative(node, r), base.cumulative(node, r) + 1e-12);
    }
  }
}

TEST(FloodPropertyTest, DegradingALinkNeverHelpsEarly) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 20; ++t) expect_degradation_monotone(oracle::random_matrix(5, rng), 1);
}

TEST(FloodPropertyTest, DegradingALinkNeverHelpsOnLossyLines) {
  for (std::size_t n = 3; n <= 6; ++n) {
    std::vector<double> v(n * n, 1.0);
    for (std::size_t i = 0; i < n; ++i) {
      v[i * n + i] = 0.0;
      if (i + 1 < n) {
        v[i * n + i + 1] = 0.1 * static_cast<double>(i + 1);
        v[(i + 1) * n + i] = 0.05 * static_cast<double>(i + 1);
      }
    }
    expect_degradation_monotone(PerMatrix(n, v), n);
  }
}

TEST(FloodPropertyTest, PrintedFactorOnlyActsAfterAnEarlierTransmission) {
  // Identical while no node could have transmitted two levels back.
  std::mt19937_64 rng(21);
  for (int t = 0; t < 10; ++t) {
    const auto m = oracle::random_matrix(5, rng);
    const auto a = flood(m, 0, 1.0, 2, TransmitRule::as_printed);
    const auto b = flood(m, 0, 1.0, 2, TransmitRule::first_reception);
    for (NodeId v = 0; v < 5; ++v)
      for (std::size_t r = 0; r <= 2; ++r) EXPECT_EQ(a.rcv(v, r), b.rcv(v, r));
  }
  for (std::size_t n = 2; n <= 6; ++n) {
    const auto a = flood(oracle::lossless_line(n), 0, 1.0, n, TransmitRule::as_printed);
    const auto b = flood(oracle::lossless_line(n), 0, 1.0, n, TransmitRule::first_reception);
    for (NodeId v = 0; v < n; ++v)
      for (std::size_t r = 0; r <= n; ++r) EXPECT_EQ(a.tx(v, r), b.tx(v, r));
  }
  // On a lossy ring the factor is not redundant: it discounts late first
  // receptions by the chance of an earlier transmission.
  const auto ring = generate_ring(10, 0.1, 0.6);
  const auto a = flood(ring, 0, 1.0, 10, TransmitRule::as_printed);
  const auto b = flood(ring, 0, 1.0, 10, TransmitRule::first_reception);
  EXPECT_LT(a.tx(1, 3), b.tx(1, 3));
}

TEST(LevelDistributionTest, ImmediateSuccess) {
  const std::vector<double> q{1.0};
  const auto d = level_distribution(q);
  EXPECT_EQ(d.pi, std::vector<double>{1.0});
  EXPECT_EQ(d.mean_level, 0.0);
  EXPECT_EQ(d.truncated_mass, 0.0);
}

TEST(LevelDistributionTest, EscalatingSuccess) {
  const std::vector<double> q{0.5, 0.75, 1.0};
  const auto d = level_distribution(q);
  ASSERT_EQ(d.pi.size(), 3u);
  EXPECT_DOUBLE_EQ(d.pi[0], 0.5);
  EXPECT_DOUBLE_EQ(d.pi[1], 0.375);
  EXPECT_DOUBLE_EQ(d.pi[2], 0.125);
  EXPECT_DOUBLE_EQ(d.mean_level, 0.625);
}

TEST(LevelDistributionTest, NeverSucceeds) {
  const std::vector<double> q{0.0, 0.0, 0.0};
  const auto d = level_distribution(q);
  EXPECT_FALSE(d.reachable);
  EXPECT_EQ(d.truncated_mass, 1.0);
}

TEST(LevelDistributionTest, MassIsConserved) {
  const auto m = generate_rand_area(15, 0.3, 0.07, 3);
  const auto fp = flood(m, 0, 1.0, 6);
  for (NodeId s = 1; s < 15; ++s) {
    const auto d = level_distribution(fp, s);
    double sum = d.truncated_mass;
    for (double p : d.pi) sum += p;
    EXPECT_NEAR(sum, 1.0, 1e-12);
  }
  EXPECT_THROW(level_distribution(fp, 0), ValidationError);
}

TEST(SlaveAnalysisTest, PerfectPair) {
  const auto sa = slave_analysis(PerMatrix(2, {0.0, 0.0, 0.0, 0.0}), 1, 1.0, 2);
  EXPECT_EQ(sa.r_dl, 0u);
  EXPECT_EQ(sa.r_ul, 0u);
  EXPECT_EQ(sa.poll_success, 1.0);
  EXPECT_DOUBLE_EQ(*sa.expected_duration, 2.0);
}

TEST(SlaveAnalysisTest, ClosedFormArithmetic) {
  EXPECT_DOUBLE_EQ(*expected_duration(0.8, 1, 1, 1.0), 5.0);
  EXPECT_FALSE(expected_duration(0.0, 1, 1, 1.0).has_value());
}

TEST(SlaveAnalysisTest, ClosedFormMatchesTruncatedSeries) {
  for (double p : {0.1, 0.3, 0.35, 0.5, 0.9}) {
    EXPECT_NEAR(*expected_duration(p, 1, 2, 1.0), oracle::retry_series(p, 5.0, 10000), 1e-9);
  }
}

TEST(SlaveAnalysisTest, ChosenPairIsTheCandidateMinimum) {
  const auto m = generate_rand_area(20, 0.3, 0.07, 9);
  const auto dl = flood(m, 0, 1.0, 20);
  for (NodeId s = 1; s < 20; ++s) {
    const auto sa = slave_analysis(m, dl, s, 1.0);
    ASSERT_TRUE(sa.reachable());
    EXPECT_LE(sa.poll_success, 1.0);
    EXPECT_DOUBLE_EQ(*sa.expected_duration, (2.0 + sa.r_dl + sa.r_ul) / sa.poll_success);
    EXPECT_LE(sa.candidates.size(), 4u);
    for (const auto& c : sa.candidates)
      if (c.expected_duration) EXPECT_LE(*sa.expected_duration, *c.expected_duration);
  }
}

TEST(SlaveAnalysisTest, UnreachableSlave) {
  std::vector<double> v = {0.0, 1.0, 1.0, 0.0};
  const auto c = cycle_analysis(PerMatrix(2, v), 1.0, 3);
  EXPECT_EQ(c.unreachable, (std::vector<NodeId>{1}));
  EXPECT_FALSE(c.total().has_value());
  EXPECT_EQ(c.partial_total, 0.0);
}

TEST(CycleAnalysisTest, PerfectPair) {
  EXPECT_DOUBLE_EQ(*cycle_analysis(PerMatrix(2, {0.0, 0.0, 0.0, 0.0}), 1.0, 2).total(), 2.0);
}

TEST(CycleAnalysisTest, DeterministicLine) {
  const auto c = cycle_analysis(three_line(), 1.0, 3);
  ASSERT_EQ(c.slaves.size(), 2u);
  EXPECT_DOUBLE_EQ(*c.slaves[0].expected_duration, 2.0);
  EXPECT_EQ(c.slaves[1].r_dl, 1u);
  EXPECT_EQ(c.slaves[1].r_ul, 1u);
  EXPECT_DOUBLE_EQ(*c.slaves[1].expected_duration, 4.0);
  EXPECT_DOUBLE_EQ(*c.total(), 6.0);
}

TEST(CycleAnalysisTest, FloodingBeatsSourceRoutingOnRingTen) {
  const auto m = generate_ring(10, 0.1, 0.6);
  const auto sfn_total = cycle_analysis(m, 1.0, default_horizon(m)).total();
  const auto dlc_total = dlc::cycle_analysis(m, 4, 1.0).total();
  ASSERT_TRUE(sfn_total && dlc_total);
  EXPECT_LT(*sfn_total, *dlc_total);
}

}  // namespace
}  // namespace plcroute::sfn
