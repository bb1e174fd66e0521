#ifndef HDRAN_RNG_HPP
#define HDRAN_RNG_HPP

#include <array>
#include <cstdint>
#include <limits>

namespace hdran {

/// SplitMix64 finalizer. Used for seeding and for stateless seed mixing.
constexpr std::uint64_t splitmix64_mix(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Sequential SplitMix64 generator: state += golden gamma, output = mix(state).
class SplitMix64 {
public:
    explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}
    constexpr std::uint64_t next() noexcept {
        state_ += 0x9e3779b97f4a7c15ULL;
        return splitmix64_mix(state_);
    }

private:
    std::uint64_t state_;
};

/// xoshiro256** 1.0 (Blackman & Vigna), seeded by four consecutive SplitMix64
/// outputs. This exact algorithm is part of the reproducibility contract:
/// changing it changes every generated network.
///
/// Bounded draws use Lemire's multiply-shift with rejection, which is exactly
/// uniform on [0, bound).
class Xoshiro256 {
public:
    using result_type = std::uint64_t;
    using State = std::array<std::uint64_t, 4>;

    Xoshiro256() noexcept : Xoshiro256(0) {}
    explicit Xoshiro256(std::uint64_t seed) noexcept;
    explicit Xoshiro256(const State& state) noexcept : s_(state) {}

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept {
        return std::numeric_limits<result_type>::max();
    }

    result_type operator()() noexcept { return next(); }
    result_type next() noexcept;

    /// Uniform integer in [0, bound). bound must be > 0.
    std::uint64_t bounded(std::uint64_t bound) noexcept;

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform01() noexcept {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    const State& state() const noexcept { return s_; }

    friend bool operator==(const Xoshiro256&, const Xoshiro256&) = default;

private:
    State s_;
};

}  // namespace hdran

#endif  // HDRAN_RNG_HPP
