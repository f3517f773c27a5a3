#ifndef KMM_RNG_HPP
#define KMM_RNG_HPP

#include <cstdint>
#include <random>

namespace kmm {

// splitmix64 finalizer, used to derive independent seed streams from
// (base seed, stream id) pairs. Restart r of a fit and replicate r of a
// harness run each get stream_seed(seed, r); results are then independent
// of execution order.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t stream) {
    return mix64(seed ^ mix64(stream + 1));
}

inline std::mt19937_64 make_rng(std::uint64_t seed, std::uint64_t stream = 0) {
    return std::mt19937_64(stream_seed(seed, stream));
}

}  // namespace kmm

#endif  // KMM_RNG_HPP
