#pragma once

#include "cliffwalls/hn_polygon.hpp"
#include "cliffwalls/lattice.hpp"

#include <optional>
#include <vector>

namespace cliffwalls {

// Smooth plane curve of degree l; genus (l-1)(l-2)/2.
struct PlaneCurveSpec {
	std::int64_t l;
	std::int64_t genus() const { return (l - 1) * (l - 2) / 2; }
};

// 1-periodic, x^2/2 - (3/2)|x| + 1 on [-1/2, 1/2] away from 0, and 0 at 0.
Rational gamma_tilde_offset(const Rational &x);
Rational gamma_tilde(const Rational &x);

enum class LBranch { I, J }; // I: a/b >= -1, J: a/b <= -1 (J used only below -1)

LBranch l_branch(const Rational &a, const Rational &b);
// (3/2) b + a on a/b >= -1, -b^2/(2a) on a/b <= -1; b > 0
Rational L_value(const Rational &a, const Rational &b);

// sum of L over the edges of a chain starting at the origin
Rational l_chain_length(const std::vector<ZbarPoint> &points);

struct HomBoundP2 {
	std::optional<Rational> equality;    // rk + (3/2) c1 + ch2 when ch2/c1 > -3/2
	std::optional<Rational> upper_bound; // rk - c1^2/(2 ch2) when ch2 < 0
	bool no_stable_object = false;       // ch2/c1 in (-3/2, -1)
	BoundReport best;                    // minimum of the applicable values
};

HomBoundP2 hom_bound_p2(const ChernCharacter &v);

// (0, rl, d - rl^2/2)
ChernCharacter pushforward_class_p2(std::int64_t r, std::int64_t d, std::int64_t l);

struct SlopeInterval {
	Rational lo;
	Rational hi;
};

// Slopes ch2/(H ch1) of the HN factors of the pushforward class.
std::vector<SlopeInterval> phase_range_p2(std::int64_t r, std::int64_t d, std::int64_t l);

// First wall endpoints beta1' >= d/(rl) - l and beta2' <= d/(rl) on the
// parabola y = x^2/2. Endpoints may lie on Gamma-tilde or beyond it.
struct PlaneWallBetas {
	Rational beta1_min;
	Rational beta2_max;
};

PlaneWallBetas plane_first_wall_betas(std::int64_t r, std::int64_t d, std::int64_t l);

// Apex of the triangle o-p-q bounding the HN polygon.
ZbarPoint plane_triangle_apex(std::int64_t r, std::int64_t d, std::int64_t l);

// r + (rl + r) d / (rl^2 - rl)
Rational plane_envelope(std::int64_t r, std::int64_t d, std::int64_t l);

// h0 bound for a semistable rank r degree d bundle on a degree l plane curve.
BoundReport h0_bound_plane(std::int64_t r, std::int64_t d, std::int64_t l);

// One failed inequality from the case analysis behind Cliff_r = l - 4.
struct PlaneCaseViolation {
	int case_index; // 1: d >= rl, 2: linear branch, 3: rational branch, 4: small degree
	Rational d;
	Rational lhs;
	Rational rhs;
	const char *relation;
};

std::vector<PlaneCaseViolation> plane_case_violations(std::int64_t r, std::int64_t l);

struct PlaneCaseRecord {
	bool high_degree = true;
	bool linear_branch = true;
	bool rational_branch = true;
	bool small_degree = true;

	bool all() const { return high_degree && linear_branch && rational_branch && small_degree; }
};

struct PlaneClifford {
	Rational value;
	PlaneCaseRecord record;
};

PlaneClifford clifford_plane(std::int64_t r, std::int64_t l);

} // namespace cliffwalls
