#pragma once

#include <cmath>
#include <cstdint>

#include "stickysim/vec.hpp"

namespace stickysim {

namespace detail {

/// 64-bit finalizer (splitmix64 style). Good avalanche, cheap.
constexpr std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace detail

/// Counter-based random stream. The stream identity is a pure function of
/// (seed, run id, particle index), so ensembles can be advanced in any
/// order, on any number of threads, and still produce bit-identical
/// results. Each call consumes one counter tick.
class ParticleStream {
  public:
    ParticleStream(std::uint64_t seed, std::uint64_t run_id, std::uint64_t particle_index)
        : key_(detail::mix64(detail::mix64(seed ^ 0x5851f42d4c957f2dULL) ^
                             detail::mix64(run_id + 0x14057b7ef767814fULL) ^
                             detail::mix64(particle_index * 0x2545f4914f6cdd1dULL + 1))),
          counter_(0) {}

    std::uint64_t next_u64() { return detail::mix64(key_ + 0x9e3779b97f4a7c15ULL * (++counter_)); }

    /// Uniform draw in (0, 1].
    double next_uniform() {
        return (static_cast<double>(next_u64() >> 11) + 1.0) * (1.0 / 9007199254740992.0);
    }

    /// Standard normal pair via Box-Muller. Fixed consumption (two
    /// uniforms per pair), no cached state.
    Vec2 next_normal_pair() {
        const double u1 = next_uniform();
        const double u2 = next_uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double phi = 6.283185307179586476925286766559 * u2;
        return {r * std::cos(phi), r * std::sin(phi)};
    }

  private:
    std::uint64_t key_;
    std::uint64_t counter_;
};

}  // namespace stickysim
