#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace maxpoly {

// Thrown when an argument is outside an operation's stated domain.
class domain_error : public std::invalid_argument {
public:
    explicit domain_error(const std::string& what) : std::invalid_argument(what) {}
};

// Thrown when input is geometrically degenerate (flat / collinear).
class degenerate_hull_error : public std::runtime_error {
public:
    explicit degenerate_hull_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown on conditions that indicate a bug rather than bad input.
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

// splitmix64 step; the generator behind all seeded randomness in the project.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Derived per-task seed: a 64-bit mixing permutation of (master, index), so
// multistart results are independent of execution order.
inline std::uint64_t mix_seed(std::uint64_t master, std::uint64_t index) {
    std::uint64_t s = master ^ (0x9e3779b97f4a7c15ULL * (index + 1));
    splitmix64(s);
    return splitmix64(s);
}

// Small deterministic RNG (splitmix64 stream). Identical output on every
// platform, unlike std distributions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() { return splitmix64(state_); }

    // uniform in [0, 1)
    double uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

private:
    std::uint64_t state_;
};

}  // namespace maxpoly
