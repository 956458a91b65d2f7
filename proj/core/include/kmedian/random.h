// Copyright 2026 The kmedian-fpt Authors
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

#ifndef KMEDIAN_RANDOM_H_
#define KMEDIAN_RANDOM_H_

#include <cstdint>
#include <initializer_list>

namespace kmedian {

// SplitMix64 finalizer.
constexpr uint64_t Mix64(uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Counter-based stream: the value at (seed, counters...) does not depend on
// how many other draws were made, so trials and guesses can run in any order
// or on any thread and still reproduce.
class CounterRng {
 public:
  constexpr CounterRng(uint64_t seed, std::initializer_list<uint64_t> path)
      : key_(Mix64(seed)) {
    for (uint64_t p : path) key_ = Mix64(key_ ^ Mix64(p + 0x632be59bd9b4e019ULL));
  }

  constexpr uint64_t Bits(uint64_t counter) const {
    return Mix64(key_ ^ Mix64(counter));
  }

  // Uniform in [0, 1).
  constexpr double Uniform(uint64_t counter) const {
    return static_cast<double>(Bits(counter) >> 11) * 0x1.0p-53;
  }

  // Derives a 64-bit seed for standard engines.
  constexpr uint64_t Seed() const { return Bits(~0ULL); }

 private:
  uint64_t key_;
};

// Named substreams, so that one --seed flag feeds independent consumers.
enum class Stream : uint64_t {
  kRounding = 1,
  kCoreset = 2,
  kCoresetProbe = 3,
  kHypergraph = 4,
  kCoverageDraws = 5,
  kDictatorship = 6,
};

}  // namespace kmedian

#endif  // KMEDIAN_RANDOM_H_
