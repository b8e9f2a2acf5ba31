/*
   Copyright 2026 The pdnet Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <cstdint>
#include <limits>

namespace pdnet {

/// splitmix64 finalizer; also used to derive child stream keys.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept
{
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/**
 * Value-like, splittable random stream (xoshiro256++ state seeded from a
 * 64-bit key through splitmix64).
 *
 * split(k) derives a child from the key this stream was constructed with,
 * never from its current state, so children are identical no matter how
 * many numbers the parent has already produced. Monte Carlo drivers use
 * this to give each (sweep point, iteration, purpose) its own substream.
 *
 * Satisfies UniformRandomBitGenerator, so it plugs into <random>
 * distributions.
 */
class RandomStream {
public:
    using result_type = std::uint64_t;

    explicit RandomStream(std::uint64_t key) noexcept : key_(key)
    {
        std::uint64_t sm = key;
        for (auto& word : state_) {
            sm += 0x9e3779b97f4a7c15ULL;
            word = mix64(sm);
        }
    }

    [[nodiscard]] RandomStream split(std::uint64_t child) const noexcept
    {
        return RandomStream(mix64(key_ ^ mix64(child + 0x632be59bd9b4e019ULL)));
    }

    [[nodiscard]] std::uint64_t key() const noexcept { return key_; }

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept
    {
        return std::numeric_limits<result_type>::max();
    }

    result_type operator()() noexcept
    {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() noexcept
    {
        return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
    }

private:
    static constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept
    {
        return (x << k) | (x >> (64 - k));
    }

    std::uint64_t key_;
    std::uint64_t state_[4];
};

/// Substream purposes within one Monte Carlo iteration.
enum class StreamPurpose : std::uint64_t {
    Town = 1,
    Fleet = 2,
    LinkState = 3,
    TerrestrialFading = 4,
    AerialFading = 5,
};

inline RandomStream substream(const RandomStream& parent, StreamPurpose purpose) noexcept
{
    return parent.split(static_cast<std::uint64_t>(purpose));
}

}  // namespace pdnet
