#ifndef UQ_RNG_HPP
#define UQ_RNG_HPP

#include <cstdint>
#include <random>

namespace uq {

/// Seeded random stream. Identical seeds reproduce identical draw sequences.
/// Independent sub-streams are derived from the stream's seed and an index
/// through a SplitMix64 mix, so per-step / per-chain streams are
/// deterministic functions of the master seed.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : seed_(seed), gen_(seed) {}

    /// Uniform draw in [0,1) with 53-bit resolution.
    double uniform01() {
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    /// Uniform draw in the open interval (0,1), safe for quantile transforms.
    double uniform_open() {
        double u = uniform01();
        while (u == 0.0) u = uniform01();
        return u;
    }

    /// Standard normal draw by inverse-CDF of a uniform (reproducible).
    double normal01();

    /// Uniform integer in [0, n), n > 0; rejection avoids modulo bias.
    std::uint64_t uniform_index(std::uint64_t n) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v;
        do {
            v = gen_();
        } while (v >= limit);
        return v % n;
    }

    std::uint64_t raw() { return gen_(); }
    std::uint64_t seed() const { return seed_; }

    /// Deterministic sub-stream seed for (master seed, index).
    static std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

    /// Independent sub-stream owned by the caller.
    RngStream substream(std::uint64_t index) const {
        return RngStream(derive_seed(seed_, index));
    }

private:
    std::uint64_t seed_;
    std::mt19937_64 gen_;
};

} // namespace uq

#endif
