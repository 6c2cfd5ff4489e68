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

#ifndef PLCROUTE_METRICS_HPP_
#define PLCROUTE_METRICS_HPP_

#include <cstdint>
#include <string>

#include "plcroute/channel.hpp"
#include "plcroute/simulator.hpp"

namespace plcroute::metrics {

inline constexpr std::uint32_t kRepeaterAddressBits = 12;
inline constexpr std::uint32_t kDlcHeaderRepeaters = 2;
inline constexpr std::uint32_t kSfnLevelFieldBits = 4;  // one field each way
inline constexpr std::uint32_t kReportedRepeaters = 5;
inline constexpr std::uint32_t kDefaultQualityBits = 8;
inline constexpr std::uint32_t kDefaultPacketBytes = 64;

struct OverheadReport {
  Protocol protocol = Protocol::sfn;
  std::uint64_t routing_bits_per_packet = 0;
  std::uint64_t packet_bits = 0;
  double overhead_ratio = 0.0;
  // Routing payload a slave adds to one poll response.
  std::uint64_t signaling_bits_per_poll_response = 0;
};

/// Routing header bits carried by every data packet.
constexpr std::uint64_t routing_bits(Protocol protocol) {
  return protocol == Protocol::dlc1000 ? kDlcHeaderRepeaters * kRepeaterAddressBits
                                       : 2 * kSfnLevelFieldBits;
}

/// Routing payload per polling cycle. DLC1000 slaves report five preferred
/// repeaters with a quality value each in every response (worst case); SFN
/// responses carry only the confirmation.
inline std::uint64_t signaling_volume(Protocol protocol, std::size_t node_count,
                                      std::uint32_t address_bits = kRepeaterAddressBits,
                                      std::uint32_t quality_bits = kDefaultQualityBits) {
  if (node_count < 2) throw ValidationError("node_count must be at least 2");
  if (protocol == Protocol::sfn) return 0;
  return static_cast<std::uint64_t>(node_count - 1) * kReportedRepeaters *
         (address_bits + quality_bits);
}

inline OverheadReport routing_overhead(Protocol protocol, std::uint32_t packet_bytes,
                                       std::uint32_t address_bits = kRepeaterAddressBits,
                                       std::uint32_t quality_bits = kDefaultQualityBits) {
  if (packet_bytes == 0) throw ValidationError("packet size must be positive");
  OverheadReport r;
  r.protocol = protocol;
  r.routing_bits_per_packet = routing_bits(protocol);
  r.packet_bits = 8ULL * packet_bytes;
  r.overhead_ratio =
      static_cast<double>(r.routing_bits_per_packet) / static_cast<double>(r.packet_bits);
  r.signaling_bits_per_poll_response = signaling_volume(protocol, 2, address_bits, quality_bits);
  return r;
}

}  // namespace plcroute::metrics

#endif  // PLCROUTE_METRICS_HPP_
