#pragma once

#include <array>
#include <cmath>
#include <cstdint>

#include "gruss/matrix.hpp"

namespace gruss {

/// splitmix64; used only to expand seeds into generator state.
struct SplitMix64 {
    uint64_t state;

    explicit SplitMix64(uint64_t seed) : state(seed) {}

    uint64_t next() {
        uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
};

/// xoshiro256++ with distribution helpers that use only elementary
/// formulas, so a seed reproduces the identical value stream everywhere
/// this library builds.
class Rng {
  public:
    explicit Rng(uint64_t seed) {
        SplitMix64 sm(seed);
        for (auto& word : state_) word = sm.next();
    }

    /// Stream for trial `index` of a suite run under `seed`; streams for
    /// distinct indices are independent for all practical purposes.
    static Rng substream(uint64_t seed, uint64_t index) {
        return Rng(seed ^ ((index + 1) * 0x9E3779B97F4A7C15ull));
    }

    uint64_t next_u64() {
        const uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform in [0, 1) with 53 significant bits.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Standard normal via Box-Muller; consumes exactly two uniforms.
    double normal() {
        const double u1 = uniform();
        const double u2 = uniform();
        const double radius = std::sqrt(-2.0 * std::log(1.0 - u1));
        return radius * std::cos(6.283185307179586 * u2);
    }

    /// Exponential with unit rate.
    double exponential() { return -std::log(1.0 - uniform()); }

    /// Complex normal with unit total variance.
    Complex complex_normal() {
        const double re = normal();
        const double im = normal();
        return Complex{re, im} * 0.7071067811865476;
    }

    /// Integer in [lo, hi] inclusive.
    int uniform_int(int lo, int hi) {
        const auto span = static_cast<uint64_t>(hi - lo + 1);
        return lo + static_cast<int>(next_u64() % span);
    }

  private:
    static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    std::array<uint64_t, 4> state_{};
};

}  // namespace gruss
