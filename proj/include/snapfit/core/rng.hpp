#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

namespace snapfit {

// Counter-based stream: output i is a pure function of (key, i), so streams
// can be split per trace / per trial and generation order never matters.
// The mixer is the splitmix64 finalizer; identical seeds give identical
// sequences on every platform (plain uint64 arithmetic, no libc distributions).
class RngStream {
public:
    RngStream() = default;
    explicit RngStream(std::uint64_t seed) : key_(mix64(seed ^ kKeyTag)) {}

    // Independent child stream; children with distinct labels never collide
    // with each other or with the parent for any practical draw count.
    RngStream substream(std::uint64_t label) const {
        RngStream child;
        child.key_ = mix64(key_ + kGolden * (label + 1) + kChildTag);
        return child;
    }

    std::uint64_t next_u64() { return mix64(key_ + kGolden * ++counter_); }

    // Uniform in [0, 1) with 53 random bits.
    double uniform01() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // Box-Muller; always consumes exactly two uniforms so the stream
    // position is independent of (mean, std).
    double gaussian(double mean, double std_dev) {
        const double u1 = 1.0 - uniform01();           // (0, 1]
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        return mean + std_dev * (r * std::cos(2.0 * std::numbers::pi * u2));
    }

    std::uint64_t uniform_index(std::uint64_t n) { return n == 0 ? 0 : next_u64() % n; }

    // Fisher-Yates.
    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            const std::size_t j = static_cast<std::size_t>(uniform_index(i));
            std::swap(v[i - 1], v[j]);
        }
    }

    std::uint64_t key() const { return key_; }
    std::uint64_t counter() const { return counter_; }

private:
    static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
    static constexpr std::uint64_t kKeyTag = 0x5A17F00DCAFE1234ULL;
    static constexpr std::uint64_t kChildTag = 0xC2B2AE3D27D4EB4FULL;

    static std::uint64_t mix64(std::uint64_t z) {
        z ^= z >> 30;
        z *= 0xBF58476D1CE4E5B9ULL;
        z ^= z >> 27;
        z *= 0x94D049BB133111EBULL;
        z ^= z >> 31;
        return z;
    }

    std::uint64_t key_ = 0;
    std::uint64_t counter_ = 0;
};

} // namespace snapfit
