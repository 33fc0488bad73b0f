#include "shapedyn/rng.hpp"

#include <cmath>

namespace shapedyn {

std::uint64_t CounterRng::fnv1a(std::string_view s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

// splitmix64 finalizer; full-period bijection on 64-bit words.
std::uint64_t CounterRng::mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

CounterRng CounterRng::stream(std::uint64_t master, std::string_view name, std::uint64_t index) {
    std::uint64_t k = mix(master ^ fnv1a(name));
    k = mix(k ^ (0x517cc1b727220a95ull * (index + 1)));
    return CounterRng(k);
}

std::uint64_t CounterRng::next_u64() {
    return mix(key_ ^ mix(counter_++ + 0x2545f4914f6cdd1dull));
}

double CounterRng::uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double CounterRng::uniform(double lo, double hi) {
    return lo + (hi - lo) * uniform();
}

double CounterRng::normal() {
    if (have_cached_normal_) {
        have_cached_normal_ = false;
        return cached_normal_;
    }
    // Box-Muller on (0,1] to avoid log(0).
    double u1 = 1.0 - uniform();
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 6.283185307179586476925286766559 * u2;
    cached_normal_ = r * std::sin(a);
    have_cached_normal_ = true;
    return r * std::cos(a);
}

std::uint64_t CounterRng::below(std::uint64_t n) {
    // Rejection-free modulo is fine here; n is always tiny relative to 2^64.
    return next_u64() % n;
}

}  // namespace shapedyn
