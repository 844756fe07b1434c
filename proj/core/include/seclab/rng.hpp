#pragma once

#include <cstdint>
#include <random>

namespace seclab {

using Rng = std::mt19937_64;

// splitmix64 step; used to whiten seed material before feeding mt19937_64
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d4a285dc4bfbbcULL;
    return z ^ (z >> 31);
}

// Deterministic per-stream seed derivation. Streams are identified by up to
// three indices (e.g. sweep point, trial, substream) so that trials are
// reproducible independent of execution order or thread count.
inline std::uint64_t derive_seed(std::uint64_t root, std::uint64_t a = 0,
                                 std::uint64_t b = 0, std::uint64_t c = 0) {
    std::uint64_t s = root;
    std::uint64_t h = splitmix64(s);
    s ^= a + 0x2545f4914f6cdd1dULL;
    h ^= splitmix64(s);
    s ^= b + 0x9e3779b97f4a7c15ULL;
    h ^= splitmix64(s);
    s ^= c + 0xd6e8feb86659fd93ULL;
    h ^= splitmix64(s);
    return h;
}

inline Rng make_rng(std::uint64_t root, std::uint64_t a = 0,
                    std::uint64_t b = 0, std::uint64_t c = 0) {
    return Rng(derive_seed(root, a, b, c));
}

} // namespace seclab
