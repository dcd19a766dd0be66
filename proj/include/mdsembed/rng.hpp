// rng.hpp -- seeded deterministic random source for sampling-style checks
//
// mt19937_64 has a fully specified sequence, so seeded runs are reproducible
// across platforms.  uniform_int_distribution is not specified, hence the
// hand-rolled rejection sampler.

#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>

namespace mdsembed {

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }

    /// Uniform value in [0, bound), bound >= 1.
    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0) throw std::invalid_argument("Rng::below: bound must be positive");
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t x;
        do {
            x = gen_();
        } while (x >= limit);
        return x % bound;
    }

    std::size_t index(std::size_t n) { return static_cast<std::size_t>(below(n)); }

  private:
    std::mt19937_64 gen_;
};

}  // namespace mdsembed
