// rng.hpp — deterministic engine construction from (seed, stream index)
#pragma once

#include <cstdint>
#include <random>

namespace eur {

// Every randomized operation takes an explicit seed; parallel shards derive
// independent streams from (seed, shard index) so merged results stay
// reproducible for a fixed seed and worker count.
inline std::mt19937_64 make_rng(std::uint64_t seed, std::uint64_t stream = 0) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed),
                      static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream),
                      static_cast<std::uint32_t>(stream >> 32)};
    return std::mt19937_64(seq);
}

}  // namespace eur
