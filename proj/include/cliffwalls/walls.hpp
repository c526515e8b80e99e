#pragma once

#include "cliffwalls/stability.hpp"

#include <optional>
#include <vector>

namespace cliffwalls {

class DegenerateWall : public DomainError {
public:
	using DomainError::DomainError;
};

// alpha = slope * beta + intercept
struct Line {
	Rational slope;
	Rational intercept;

	static Line through(const ProjPoint &p, const Rational &slope);
	Rational at(const Rational &beta) const { return slope * beta + intercept; }
	friend bool operator==(const Line &, const Line &) = default;
};

enum class EndpointKind { OnGamma, OnVerticalSegment };

struct Crossing {
	Abscissa beta;
	EndpointKind kind;
};

// A maximal open piece of a line lying strictly above Gamma.
struct WallSegment {
	Line line;
	Crossing left;
	Crossing right;
};

// Connected pieces of {beta : line(beta) > Gamma(beta)}, left to right. Besides
// crossing Gamma, a line can be cut by the vertical segment
// {n} x [H^2 n^2/2 - 1, H^2 n^2/2] that Gamma jumps over at an integer n.
std::vector<WallSegment> above_gamma(const Line &line, const SurfaceK3 &s);

// Endpoints of above_gamma, sorted and without repetitions.
std::vector<Crossing> intersect_gamma(const Line &line, const SurfaceK3 &s);

// Wall slope H^2 ch2 / (H.ch1) of a rank-0 class; in c1 units this is ch2 / c1.
Rational rank0_wall_slope(const ChernCharacter &v);

// The line nu(v) = nu(w) and its pieces above Gamma (possibly none).
Line wall_line(const ChernCharacter &v, const ChernCharacter &w);
std::vector<WallSegment> wall_between(const ChernCharacter &v, const ChernCharacter &w,
                                      const SurfaceK3 &s);

// The exceptional rank-3 alternative: beta1 >= -1/2 unless the destabilizing
// quotient has ch = (3, 1, *).
struct Rank3Alternative {
	Rational beta1_floor;
	std::int64_t exceptional_rk;
	std::int64_t exceptional_c1;
};

struct BetaBounds {
	Rational beta1_min;
	Rational beta2_max;
	Rational refined_beta1;
	Rational refined_beta2;
	std::optional<Rank3Alternative> r3_alternative;
};

// Range of the endpoints beta1 < 0 < beta2 of the first wall of the
// pushforward class. Requires 0 <= d <= 2r(g-1), where beta1_min <= 0.
BetaBounds first_wall_beta_bounds(const PushforwardSpec &p, const SurfaceK3 &s);

} // namespace cliffwalls
