#ifndef SPECGRAPH_TESTS_TEST_RNG_HPP
#define SPECGRAPH_TESTS_TEST_RNG_HPP

#include <cstdint>
#include <cstdlib>
#include <random>

namespace testsupport {

// Deterministic across platforms: the raw mt19937_64 stream plus a fixed
// 53-bit conversion, never std::uniform_real_distribution.
struct TestRng {
    std::mt19937_64 engine;

    explicit TestRng(std::uint64_t seed) : engine(seed) {}

    double uniform() { return static_cast<double>(engine() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    std::size_t index(std::size_t n) {
        return static_cast<std::size_t>(uniform() * static_cast<double>(n)) % n;
    }

    std::size_t size_between(std::size_t lo, std::size_t hi) {
        return lo + index(hi - lo + 1);
    }
};

inline std::uint64_t env_seed() {
    if (const char* s = std::getenv("SPECTRAL_GRAPH_SEED"))
        return std::strtoull(s, nullptr, 10);
    return 42;
}

} // namespace testsupport

#endif
