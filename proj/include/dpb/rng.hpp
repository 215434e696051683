#ifndef DPB_RNG_HPP
#define DPB_RNG_HPP

#include <cstdint>

namespace dpb {

// splitmix64: 64-bit state, identifier "splitmix64" in reports so sampled
// checks can be replayed in other implementations.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound), bound > 0. Modulo bias is irrelevant for the
    // tiny bounds used in check sweeps.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

    static constexpr const char* algorithm = "splitmix64";

private:
    std::uint64_t state_;
};

} // namespace dpb

#endif
