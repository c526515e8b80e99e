#pragma once

#include "cliffwalls/numerics.hpp"

#include <cstdint>
#include <random>

namespace testing_support {

// Fixed seeds keep every randomized test reproducible.
inline std::mt19937_64 &rng()
{
	static std::mt19937_64 gen(0x5eed2024);
	return gen;
}

inline std::int64_t rand_int(std::int64_t lo, std::int64_t hi)
{
	return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng());
}

// numerator in [-bound, bound], denominator in [1, max_den]
inline cliffwalls::Rational rand_rational(std::int64_t bound, std::int64_t max_den)
{
	return cliffwalls::Rational(cliffwalls::Integer(static_cast<long>(rand_int(-bound, bound))),
	                            cliffwalls::Integer(static_cast<long>(rand_int(1, max_den))));
}

inline cliffwalls::Rational rand_positive(std::int64_t bound, std::int64_t max_den)
{
	return cliffwalls::Rational(cliffwalls::Integer(static_cast<long>(rand_int(1, bound))),
	                            cliffwalls::Integer(static_cast<long>(rand_int(1, max_den))));
}

} // namespace testing_support
