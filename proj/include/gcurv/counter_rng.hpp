#pragma once

// Stateless counter-based random numbers: every draw is a pure function of
// (key words, counter), so results never depend on call order or threads.

#include <cstdint>
#include <initializer_list>
#include <vector>

namespace gcurv {

constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

class CounterStream {
public:
    CounterStream(std::initializer_list<std::uint64_t> key) {
        std::uint64_t h = 0x6a09e667f3bcc908ULL;
        for (std::uint64_t w : key) h = splitmix64(h ^ w);
        key_ = h;
    }

    std::uint64_t next() { return splitmix64(key_ ^ splitmix64(counter_++)); }

    // Uniform on [0, bound), bound > 0, unbiased by rejection.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % bound + 1) % bound;
        std::uint64_t x = next();
        while (x > limit) x = next();
        return x % bound;
    }

private:
    std::uint64_t key_ = 0;
    std::uint64_t counter_ = 0;
};

}  // namespace gcurv
