#ifndef RESPEN_RNG_HPP
#define RESPEN_RNG_HPP

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>

namespace respen {

// SplitMix64 finalizer; used to derive independent substream seeds.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Deterministic substream seed for (base_seed, replication, stream tag).
// Streams with distinct tags never collide with data streams, so e.g.
// Monte-Carlo penalty draws do not perturb the generated datasets.
inline std::uint64_t substream_seed(std::uint64_t base, std::uint64_t index,
                                    std::uint64_t tag) {
    return mix64(mix64(mix64(base) ^ index) ^ tag);
}

namespace stream_tag {
inline constexpr std::uint64_t data = 0x64617461ULL;       // dataset generation
inline constexpr std::uint64_t mc = 0x6d636d63ULL;         // Monte-Carlo weights
inline constexpr std::uint64_t folds = 0x666f6c64ULL;      // fold assignments
inline constexpr std::uint64_t unpaired = 0x756e7072ULL;   // unpaired-mode offset
}  // namespace stream_tag

// Thin wrapper around mt19937_64 with explicitly specified conversions so
// that every sampler in the library is reproducible from a single seed.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // uniform on [0, 1)
    double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    // uniform on (0, 1]
    double uniform_pos() {
        return (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53;
    }

    // uniform integer on {0, ..., n-1}, unbiased
    std::uint64_t uniform_int(std::uint64_t n) {
        std::uint64_t x, r;
        do {
            x = engine_();
            r = x % n;
        } while (x - r > std::numeric_limits<std::uint64_t>::max() - (n - 1));
        return r;
    }

    // standard normal, Box-Muller
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = uniform_pos();
        const double u2 = uniform01();
        const double rad = std::sqrt(-2.0 * std::log(u1));
        const double ang = 2.0 * 3.141592653589793238462643383279502884 * u2;
        spare_ = rad * std::sin(ang);
        have_spare_ = true;
        return rad * std::cos(ang);
    }

    // Poisson(mu) by inversion of the product form; mu is halved until the
    // product cannot underflow.
    long poisson(double mu) {
        if (mu <= 0.0) return 0;
        if (mu > 30.0) {
            return poisson(mu / 2.0) + poisson(mu - mu / 2.0);
        }
        const double limit = std::exp(-mu);
        long k = 0;
        double prod = uniform_pos();
        while (prod > limit) {
            ++k;
            prod *= uniform_pos();
        }
        return k;
    }

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace respen

#endif  // RESPEN_RNG_HPP
