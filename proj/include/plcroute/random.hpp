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

#ifndef PLCROUTE_RANDOM_HPP_
#define PLCROUTE_RANDOM_HPP_

#include <cstdint>
#include <initializer_list>
#include <limits>

namespace plcroute {

// SplitMix64. Small state, so one stream per (cycle, slave, try) is cheap to
// construct. Satisfies UniformRandomBitGenerator.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept {
    return std::numeric_limits<result_type>::max();
  }

  constexpr result_type operator()() noexcept {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

// Uniform double in [0, 1) from the top 53 bits. Bit-identical across
// platforms, unlike std::uniform_real_distribution.
template <class Engine>
double uniform01(Engine& engine) {
  return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

// True with probability p (p outside [0,1] saturates).
template <class Engine>
bool bernoulli(Engine& engine, double p) {
  return uniform01(engine) < p;
}

// Derives an independent stream seed from a master seed and a tuple of
// coordinates. Each coordinate is folded through a full SplitMix64 round.
inline std::uint64_t derive_stream_seed(std::uint64_t seed,
                                        std::initializer_list<std::uint64_t> coords) {
  std::uint64_t key = SplitMix64(seed)();
  for (std::uint64_t c : coords) {
    key = SplitMix64(key ^ (c + 0x632be59bd9b4e019ULL))();
  }
  return key;
}

inline SplitMix64 derive_stream(std::uint64_t seed,
                                std::initializer_list<std::uint64_t> coords) {
  return SplitMix64(derive_stream_seed(seed, coords));
}

}  // namespace plcroute

#endif  // PLCROUTE_RANDOM_HPP_
