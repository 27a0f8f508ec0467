#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

namespace qgem {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

// Deterministic RNG. mt19937_64 has a standard-mandated output sequence and
// all draws below are spelled out explicitly, so identical seeds give
// identical streams on every platform.
class Rng {
  public:
    explicit Rng(std::uint64_t seed = 0) : seed_(seed), eng_(splitmix64(seed)) {}

    std::uint64_t raw() { return eng_(); }

    // uniform in [0, 1)
    double uniform() { return double(raw() >> 11) * 0x1.0p-53; }

    // uniform in {0, ..., bound-1}
    std::uint64_t below(std::uint64_t bound) { return raw() % bound; }

    // standard normal via Box-Muller
    double gauss() {
        double u1 = uniform();
        if (u1 < 1e-300) u1 = 1e-300;
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
    }

    // Independent child stream; safe to hand to parallel workers.
    Rng derive(std::uint64_t stream) const {
        return Rng(splitmix64(seed_ ^ splitmix64(stream + 1)));
    }

  private:
    std::uint64_t seed_;
    std::mt19937_64 eng_;
};

}  // namespace qgem
