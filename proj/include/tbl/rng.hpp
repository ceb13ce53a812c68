#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace tbl {

// splitmix64 step; used for seeding and for deriving substream keys.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Order-independent (seed, index) -> substream key.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t state = seed ^ (0x9e3779b97f4a7c15ULL * (index + 0x632be59bd9b4e019ULL));
    return splitmix64(state);
}

// xoshiro256** with platform-independent output. All randomness in the
// project flows through this type so that runs are bit-reproducible; the
// standard <random> distributions are implementation-defined and are not
// used anywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t state = seed;
        for (auto& word : s_) word = splitmix64(state);
    }

    static Rng substream(std::uint64_t seed, std::uint64_t index) {
        return Rng(mix_seed(seed, index));
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // Uniform in [0, 1), 53-bit resolution.
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

    bool bernoulli(double p) { return next_unit() < p; }

    // Index draw by CDF inversion over nonnegative weights summing to ~1.
    std::size_t discrete(const std::vector<double>& weights) {
        const double u = next_unit();
        double acc = 0.0;
        for (std::size_t i = 0; i + 1 < weights.size(); ++i) {
            acc += weights[i];
            if (u < acc) return i;
        }
        return weights.empty() ? 0 : weights.size() - 1;
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    std::uint64_t s_[4];
};

}  // namespace tbl
