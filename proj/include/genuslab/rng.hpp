#pragma once

#include <cstdint>
#include <vector>

namespace genuslab {

// Counter-based deterministic generator: the stream for (seed, counter) is
// fixed by the splitmix64 mixing function, so sample i can be produced by
// any worker and results never depend on how samples are divided up.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform on [0, n) by rejection; platform-independent unlike
    // std::uniform_int_distribution.
    uint64_t below(uint64_t n) {
        const uint64_t limit = ~uint64_t{0} - ~uint64_t{0} % n;
        uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % n;
    }

private:
    uint64_t state_;
};

inline uint64_t mix_seed(uint64_t seed, uint64_t counter) {
    SplitMix64 g(seed ^ (counter * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL));
    return g.next();
}

// Fisher–Yates with the deterministic generator above.
template <typename T>
void shuffle(std::vector<T>& v, SplitMix64& rng) {
    for (size_t i = v.size(); i > 1; --i) {
        size_t j = static_cast<size_t>(rng.below(i));
        std::swap(v[i - 1], v[j]);
    }
}

}  // namespace genuslab
