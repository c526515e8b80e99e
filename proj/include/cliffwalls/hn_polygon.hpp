#pragma once

#include "cliffwalls/lattice.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cliffwalls {

// Zbar(F) = ch2(F) + i H.ch1(F)/H^2, stored as (x, y) = (ch2, c1).
struct ZbarPoint {
	Rational x;
	Rational y;
	friend bool operator==(const ZbarPoint &, const ZbarPoint &) = default;
};

ZbarPoint zbar(const ChernCharacter &v);

// Squared length x^2 + 4g y^2 (the weight 2H^2 + 4 equals 4g).
Rational ns_norm_squared(const ZbarPoint &delta, const SurfaceK3 &s);
Integer ns_norm_floor(const ZbarPoint &p, const ZbarPoint &q, const SurfaceK3 &s);

// Convex chain o = p0, p1, ..., pn with edge slopes x/y strictly decreasing.
class HNPolygon {
public:
	explicit HNPolygon(std::vector<ZbarPoint> points);

	const std::vector<ZbarPoint> &points() const { return points_; }

private:
	std::vector<ZbarPoint> points_;
};

struct BoundReport {
	Rational value;
	Integer integer_bound; // floor(value)
	std::string provenance;
	bool strict = false; // h0 < value rather than h0 <= value
	std::optional<Rational> slack_delta;
	std::optional<Rational> sharper_enclosure;

	// Largest h0 the bound allows.
	Integer cap() const;
};

BoundReport make_report(Rational value, std::string provenance, bool strict = false);

// chi(O, v) = 2 rk + ch2
Rational euler_characteristic(const ChernCharacter &v);

// h0 <= chi/2 + (1/2) sum floor |p_i p_{i-1}|
BoundReport h0_bound_from_polygon(const HNPolygon &polygon, const ChernCharacter &v,
                                  const SurfaceK3 &s);

struct Triangle {
	ZbarPoint o;
	ZbarPoint apex; // p'
	ZbarPoint q;
};

// Triangle o-p'-q for the extremal first-wall range beta2 = d/(rH^2), beta1 = beta2 - 1.
Triangle bounding_triangle(const PushforwardSpec &p, const SurfaceK3 &s);

// Triangle whose legs through o and q have slopes beta2/Gamma(beta2) and
// beta1/Gamma(beta1) for a given wall.
Triangle wall_triangle(const Rational &beta1, const Rational &beta2, const ZbarPoint &q,
                       const SurfaceK3 &s);

// r + g d^2 / (4 r (g-1)^2) + r/g, without checking 0 <= d <= r(g-1).
Rational h0_closed_form_value(const PushforwardSpec &p, const SurfaceK3 &s);

// The strict bound h0 < r + g d^2/(4r(g-1)^2) + r/g, with the triangle
// evaluation chi/2 + (|op'| + |p'q|)/2 enclosed from above and the slack
// delta = |p'q| - (r(g-1) - d + r + X), X = d^2 g/((H^2)^2 r), enclosed likewise.
BoundReport h0_closed_form_bound(const PushforwardSpec &p, const SurfaceK3 &s,
                                 const Integer &scale = Integer(1000000));

// delta < 2r/g, decided exactly
bool slack_delta_below_cap(const PushforwardSpec &p, const SurfaceK3 &s);
// delta >= 0, decided exactly
bool slack_delta_nonnegative(const PushforwardSpec &p, const SurfaceK3 &s);

// Closed convex polygon given by its vertices.
class ConvexRegion {
public:
	explicit ConvexRegion(std::vector<ZbarPoint> vertices);

	bool contains(const ZbarPoint &p) const;
	// [xmin, xmax] of the region on the horizontal line y, if it meets it
	std::optional<std::pair<Rational, Rational>> slice(const Rational &y) const;
	const std::vector<ZbarPoint> &vertices() const { return hull_; }

private:
	std::vector<ZbarPoint> hull_; // counter-clockwise, no collinear points
};

ConvexRegion triangle_region(const Triangle &t);

// Max of sum floor|p_i p_{i-1}| over convex chains from o to q whose inner
// vertices lie in the region on the lattice x in x_step * Z, y in 1..q.y-1.
Integer max_convex_chain(const ConvexRegion &region, const ZbarPoint &q, const Rational &x_step,
                         const SurfaceK3 &s);

} // namespace cliffwalls
