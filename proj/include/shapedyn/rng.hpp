#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace shapedyn {

// Counter-based generator: the i-th output is a pure function of (key, i).
// Streams are derived from a 64-bit master seed and a stream name, so any
// consumer can be reproduced in isolation. All experiment randomness flows
// through this type.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t key) : key_(key) {}

    // Stream derivation: key = mix(master ^ fnv1a(name) ^ index).
    static CounterRng stream(std::uint64_t master, std::string_view name, std::uint64_t index = 0);

    std::uint64_t next_u64();
    // Uniform in [0, 1) with 53-bit resolution.
    double uniform();
    double uniform(double lo, double hi);
    // Standard normal via Box-Muller (stateless pairs; one value cached).
    double normal();
    double normal(double mean, double sd) { return mean + sd * normal(); }
    // Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n);

    std::uint64_t key() const { return key_; }
    std::uint64_t counter() const { return counter_; }

    static std::uint64_t fnv1a(std::string_view s);
    static std::uint64_t mix(std::uint64_t x);

private:
    std::uint64_t key_ = 0;
    std::uint64_t counter_ = 0;
    bool have_cached_normal_ = false;
    double cached_normal_ = 0.0;
};

}  // namespace shapedyn
