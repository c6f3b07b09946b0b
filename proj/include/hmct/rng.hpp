#ifndef HMCT_RNG_HPP
#define HMCT_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>

namespace hmct {

// Stream-splitting hash (SplitMix64). Used to derive independent child seeds
// from a master seed plus indices, so parallel sweep workers never share a stream.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b = 0,
                                 std::uint64_t c = 0) {
    return splitmix64(splitmix64(splitmix64(master ^ a) ^ b) ^ c);
}

// mt19937_64 is fully specified by the standard; the distributions are not.
// Uniform/Gaussian draws are therefore hand-mapped so that a fixed seed gives
// bit-identical output on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    // uniform in [0, 1)
    double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // standard normal, Box-Muller
    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double th = 2.0 * M_PI * uniform();
        spare_ = r * std::sin(th);
        have_spare_ = true;
        return r * std::cos(th);
    }

    std::uint64_t raw() { return eng_(); }

private:
    std::mt19937_64 eng_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

} // namespace hmct

#endif
