#pragma once

#include "equimetric/rat.hpp"

#include <random>
#include <string_view>

inline equimetric::Rat Q(std::string_view s) { return equimetric::Rat(s); }

/// Deterministic rational generator for property tests.
class RatGen {
public:
    explicit RatGen(uint64_t seed) : rng_(seed) {}

    /// Any rational with numerator in [-bound, bound], denominator in [1, bound].
    equimetric::Rat any(long bound = 50) {
        std::uniform_int_distribution<long> num(-bound, bound);
        std::uniform_int_distribution<long> den(1, bound);
        return equimetric::Rat(num(rng_), den(rng_));
    }

    /// Positive rational in (0, bound].
    equimetric::Rat positive(long bound = 50) {
        std::uniform_int_distribution<long> num(1, bound);
        std::uniform_int_distribution<long> den(1, bound);
        return equimetric::Rat(num(rng_), den(rng_));
    }

    /// Rational strictly greater than lo.
    equimetric::Rat above(const equimetric::Rat& lo, long bound = 50) {
        return lo + positive(bound);
    }

    long integer(long lo, long hi) {
        std::uniform_int_distribution<long> d(lo, hi);
        return d(rng_);
    }

private:
    std::mt19937_64 rng_;
};
