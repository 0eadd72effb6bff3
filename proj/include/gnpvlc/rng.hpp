/**********
 *   Copyright 2026 The gnpvlc authors
 *
 *   Licensed under the Apache License, Version 2.0 (the "License");
 *   you may not use this file except in compliance with the License.
 *   You may obtain a copy of the License at
 *
 *       http://www.apache.org/licenses/LICENSE-2.0
 *
 *   Unless required by applicable law or agreed to in writing, software
 *   distributed under the License is distributed on an "AS IS" BASIS,
 *   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 *   See the License for the specific language governing permissions and
 *   limitations under the License.
\**********/
#ifndef GNPVLC_RNG_HPP
#define GNPVLC_RNG_HPP

#include <cmath>
#include <cstdint>

namespace gnpvlc {

// SplitMix64 (Steele/Lea/Flood). Counter-based, so child streams for sweep
// cells and Monte Carlo trials can be derived by hashing (seed, index) and
// the result is independent of thread count and evaluation order.
inline uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Derive an independent child seed from (seed, stream, index).
inline uint64_t derive_seed(uint64_t seed, uint64_t stream, uint64_t index = 0) {
    uint64_t s = seed;
    uint64_t a = splitmix64(s) ^ (stream * 0xD6E8FEB86659FD93ULL);
    uint64_t b = a + 0x2545F4914F6CDD1DULL * (index + 1);
    return splitmix64(b);
}

/// Deterministic random source. All distributions are implemented explicitly
/// so that streams are reproducible across standard libraries and platforms.
class Rng {
  public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next_u64() { return splitmix64(state_); }

    /// Uniform double in [0, 1) with 53-bit resolution.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [0, n). n must be >= 1.
    uint64_t uniform_int(uint64_t n) { return next_u64() % n; }

    /// Standard normal via Box-Muller; consumes exactly two uniforms per call.
    double normal() {
        double u1 = uniform();
        double u2 = uniform();
        if (u1 <= 0.0) u1 = 0x1.0p-53;
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.14159265358979323846 * u2);
    }

    double normal(double stddev) { return stddev * normal(); }

    Rng fork(uint64_t stream, uint64_t index = 0) { return Rng(derive_seed(state_, stream, index)); }

  private:
    uint64_t state_;
};

}  // namespace gnpvlc

#endif
