#include "uq/rng.hpp"

#include "uq/special.hpp"

namespace uq {

double RngStream::normal01() { return normal_quantile(uniform_open()); }

std::uint64_t RngStream::derive_seed(std::uint64_t master, std::uint64_t index) {
    // SplitMix64 finalizer over master ^ golden-ratio-spaced index
    std::uint64_t z = master + 0x9e3779b97f4a7c15ull * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

} // namespace uq
