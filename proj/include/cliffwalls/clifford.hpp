#pragma once

#include "cliffwalls/lattice.hpp"

#include <cstdint>

namespace cliffwalls {

struct CliffordQuery {
	std::int64_t r;
	std::int64_t g;
};

// d/r - (2/r) h0 + 2
Rational clifford_of_bundle(std::int64_t r, std::int64_t d, std::int64_t h0);

// Cliff(E) >= 0, i.e. h0 <= r + d/2; meaningful for 0 <= d <= r(g-1).
bool satisfies_clifford_theorem(std::int64_t r, std::int64_t d, std::int64_t h0);

// Rank r Clifford index of a curve in |H| on the K3:
// (2/r)(g-1) - (2/r) floor(g/r) for r >= 2, g >= r^2; g-1-floor(g/2) for r = 1, g >= 4.
Rational clifford_index_k3(const CliffordQuery &q);

// Numerics of the restricted Lazarsfeld-Mukai type bundle of rank r.
struct LMConstruction {
	ChernCharacter chern;
	std::int64_t h0_lower;
	std::int64_t degree;
	Rational cliff_upper;
	bool genus_in_range;   // g >= max(r^2, 6)
	bool inequality_holds; // H^2 (r-2)/(r-1)^2 - 2r^2 + 2r floor(g/r) > 0
	bool valid;
};

LMConstruction lm_construction(const CliffordQuery &q);

struct SharpExample {
	std::int64_t t; // gcd(r, k)
	std::int64_t d;
	std::int64_t h0;
	Rational cliff;
};

// Bundle of rank r and degree 2k(g-1) restricted from a stable sheaf of
// class (r/t, k/t, floor(t/r + k^2(g-1)/(rt)) - r/t).
SharpExample sharp_example(std::int64_t r, std::int64_t k, std::int64_t g);

// The floor 2 sqrt(g-1) - 2 - 2 sqrt(g-1)/g = -2 + (2 - 2/g) sqrt(g-1).
struct CorollaryBound {
	Surd exact;
	Rational rational_lower; // <= exact, equal when g-1 is a square
};

CorollaryBound corollary_lower_bound(const CliffordQuery &q,
                                     const Integer &scale = Integer(1000000));

// value > -2 + (2 - 2/g) sqrt(g-1), decided exactly
bool exceeds_corollary_bound(const Rational &value, std::int64_t g);

// d/r - d^2 g/(2 r^2 (g-1)^2) - 2/g
Rational per_degree_clifford_bound(std::int64_t r, std::int64_t d, std::int64_t g);

// true iff Cliff_r < Cliff_1, i.e. the rank-r index drops below the classical one
bool mercat_status(const CliffordQuery &q);

} // namespace cliffwalls
