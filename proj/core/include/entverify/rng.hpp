// Copyright 2026 The entverify Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>

namespace entverify {

/// SplitMix64 finalizer (Steele, Lea, Flood 2014).
constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Counter-based generator: draw(k) depends only on (seed, k), so streams are
/// reproducible across platforms and may be split across workers freely.
class CounterRng {
  public:
    explicit constexpr CounterRng(std::uint64_t seed) : key_(splitmix64(seed)) {}

    constexpr std::uint64_t bits(std::uint64_t counter) const {
        return splitmix64(key_ ^ splitmix64(counter + 0x632BE59BD9B4E019ULL));
    }

    /// Uniform double in [0, 1) with 53 random bits.
    constexpr double uniform(std::uint64_t counter) const {
        return static_cast<double>(bits(counter) >> 11) * 0x1.0p-53;
    }

    /// Independent child stream, e.g. one per restart or per batch.
    constexpr CounterRng child(std::uint64_t index) const { return CounterRng(bits(~index)); }

  private:
    std::uint64_t key_;
};

/// Sequential view over a CounterRng.
class CounterStream {
  public:
    explicit constexpr CounterStream(CounterRng rng) : rng_(rng) {}

    constexpr std::uint64_t next_bits() { return rng_.bits(counter_++); }
    constexpr double next_uniform() { return rng_.uniform(counter_++); }
    /// Standard normal via Box-Muller (consumes two draws).
    double next_normal();

  private:
    CounterRng rng_;
    std::uint64_t counter_ = 0;
};

}  // namespace entverify
