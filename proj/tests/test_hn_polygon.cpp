#include "doctest.h"
#include "support.hpp"

#include "cliffwalls/hn_polygon.hpp"
#include "cliffwalls/stability.hpp"

#include <algorithm>
#include <functional>

using namespace cliffwalls;
using testing_support::rand_int;
using testing_support::rand_rational;

namespace {

// Exhaustive search over chains, independent of the DP's arrival bookkeeping.
std::int64_t brute_force_chain(const ConvexRegion &region, const ZbarPoint &q, const SurfaceK3 &s,
                               std::int64_t x_lo, std::int64_t x_hi)
{
	std::vector<ZbarPoint> pts;
	for (std::int64_t y = 1; y < to_int64(q.y.num()); ++y)
		for (std::int64_t x = x_lo; x <= x_hi; ++x)
			if (region.contains({Rational(x), Rational(y)}))
				pts.push_back({Rational(x), Rational(y)});
	std::int64_t best = -1;
	std::function<void(const ZbarPoint &, std::optional<Rational>, std::int64_t)> walk =
	    [&](const ZbarPoint &at, std::optional<Rational> last_slope, std::int64_t total) {
		    auto step = [&](const ZbarPoint &next) -> std::optional<std::pair<Rational, std::int64_t>> {
			    const ZbarPoint e{next.x - at.x, next.y - at.y};
			    if (e.y.sign() <= 0)
				    return std::nullopt;
			    const Rational slope = e.x / e.y;
			    if (last_slope && !(slope < *last_slope))
				    return std::nullopt;
			    return std::make_pair(slope, to_int64(floor_sqrt(ns_norm_squared(e, s))));
		    };
		    if (auto last = step(q))
			    best = std::max(best, total + last->second);
		    for (const auto &p : pts)
			    if (auto e = step(p))
				    walk(p, e->first, total + e->second);
	    };
	walk({0, 0}, std::nullopt, 0);
	return best;
}

} // namespace

TEST_CASE("non-standard norm floors")
{
	CHECK(ns_norm_floor({1, 2}, {1, 2}, SurfaceK3(4)) == 0);
	CHECK(ns_norm_floor({0, 0}, {3, 0}, SurfaceK3(2)) == 3);
	CHECK(ns_norm_floor({0, 0}, {0, 1}, SurfaceK3(3)) == 3);
	// 2H^2 + 4 = 4g
	for (std::int64_t g = 2; g <= 30; ++g)
		CHECK(ns_norm_squared({0, 1}, SurfaceK3(g)) == 2 * (2 * g - 2) + 4);
}

TEST_CASE("non-standard norm triangle inequality and homogeneity, by squaring")
{
	for (int i = 0; i < 5000; ++i) {
		const SurfaceK3 s(rand_int(2, 50));
		const ZbarPoint a{rand_rational(100, 9), rand_rational(20, 9)};
		const ZbarPoint b{rand_rational(100, 9), rand_rational(20, 9)};
		const Rational na = ns_norm_squared(a, s), nb = ns_norm_squared(b, s);
		const Rational nab = ns_norm_squared({a.x + b.x, a.y + b.y}, s);
		// |a+b| <= |a| + |b|  <=>  nab - na - nb <= 2 sqrt(na nb)
		const Rational lhs = nab - na - nb;
		CHECK((lhs.sign() <= 0 || pow2(lhs) <= 4 * na * nb));
		const Rational k = testing_support::rand_positive(30, 7);
		CHECK(ns_norm_squared({k * a.x, k * a.y}, s) == k * k * na);
	}
}

TEST_CASE("HN polygon validation")
{
	CHECK_NOTHROW(HNPolygon({{0, 0}, {3, 1}, {2, 2}}));
	CHECK_THROWS_AS(HNPolygon({{1, 0}, {3, 1}}), DomainError);
	CHECK_THROWS_AS(HNPolygon({{0, 0}, {2, 2}, {5, 3}}), DomainError); // slopes increase
	CHECK_THROWS_AS(HNPolygon({{0, 0}, {1, 1}, {2, 2}}), DomainError); // collinear
	CHECK_THROWS_AS(HNPolygon({{0, 0}, {1, -1}}), DomainError);
}

TEST_CASE("polygon h0 bounds")
{
	const SurfaceK3 s(10);
	const ChernCharacter v = pushforward_class({2, 18}, s);
	CHECK(euler_characteristic(v) == 0);
	const BoundReport single = h0_bound_from_polygon(HNPolygon({{0, 0}, zbar(v)}), v, s);
	CHECK(single.value == 6);
	CHECK(single.integer_bound == 6);
	CHECK(single.provenance == "hn-polygon-lengths");
	CHECK_THROWS_AS(h0_bound_from_polygon(HNPolygon({{0, 0}, {1, 2}}), v, s), DomainError);

	// two-factor polygon through (s, 1), against the floor-of-sum display
	for (std::int64_t g = 4; g <= 30; ++g) {
		const SurfaceK3 sg(g);
		for (std::int64_t d = 0; d <= 2 * (g - 1); ++d) {
			const ChernCharacter w = pushforward_class({2, d}, sg);
			for (std::int64_t sv = -g; sv <= 0; ++sv) {
				const ZbarPoint p1{Rational(sv), 1};
				const ZbarPoint p1_to_q{zbar(w).x - p1.x, 1};
				if ((p1.x <= p1_to_q.x))
					continue; // not convex
				const BoundReport two = h0_bound_from_polygon(HNPolygon({{0, 0}, p1, zbar(w)}), w, sg);
				const Rational display =
				    Rational(1 - g) + Rational(d, 2) +
				    Rational(floor_sqrt_sum(Rational(4 * g + sv * sv),
				                            Rational(4 * g + (2 * (g - 1) - d + sv) * (2 * (g - 1) - d + sv)))) /
				        2;
				CHECK(two.value <= display);
				CHECK(display - two.value <= Rational(1, 2));
			}
		}
	}

	// negative chi is offset by the segment length: -10 + floor(sqrt 408)/2 = 0
	const ChernCharacter neg{0, 1, -20};
	CHECK(h0_bound_from_polygon(HNPolygon({{0, 0}, zbar(neg)}), neg, SurfaceK3(2)).value == 0);
}

TEST_CASE("bounding triangle")
{
	const Triangle t = bounding_triangle({1, 1}, SurfaceK3(2));
	CHECK(t.o == ZbarPoint{0, 0});
	CHECK(t.apex == ZbarPoint{Rational(-1, 2), Rational(1, 2)});
	CHECK(t.q == ZbarPoint{0, 1});
	for (std::int64_t g = 2; g <= 25; ++g) {
		const SurfaceK3 s(g);
		CHECK(bounding_triangle({2, 2 * (g - 1)}, s).q == ZbarPoint{0, 2});
		for (std::int64_t r = 1; r <= 5; ++r) {
			for (std::int64_t d = 1; d <= r * (g - 1); ++d) {
				const Triangle tr = bounding_triangle({r, d}, s);
				CHECK(tr.o == ZbarPoint{0, 0});
				// p' sits on the o-leg with direction (Gamma(beta2), beta2) at parameter r
				const Rational beta2 = Rational(d, r * s.h_squared());
				CHECK(tr.apex == ZbarPoint{r * gamma_value(beta2, s), r * beta2});
				// |op'| = X + r with X = apex.x + r
				CHECK(ns_norm_squared(tr.apex, s) == pow2(tr.apex.x + 2 * r));
			}
		}
	}
}

TEST_CASE("wall triangle legs")
{
	for (int i = 0; i < 500; ++i) {
		const SurfaceK3 s(rand_int(2, 20));
		const Rational beta2 = Rational(rand_int(1, 99), 100);
		const Rational beta1 = beta2 - 1;
		const ZbarPoint q{rand_rational(40, 3), Rational(rand_int(1, 6))};
		if (gamma_value(beta1, s) * beta2 == gamma_value(beta2, s) * beta1) {
			CHECK_THROWS_AS(wall_triangle(beta1, beta2, q, s), DomainError);
			continue;
		}
		const Triangle t = wall_triangle(beta1, beta2, q, s);
		// apex on the o-leg and on the q-leg
		CHECK(t.apex.x * beta2 - t.apex.y * gamma_value(beta2, s) == 0);
		CHECK((t.apex.x - q.x) * beta1 - (t.apex.y - q.y) * gamma_value(beta1, s) == 0);
	}
}

TEST_CASE("closed-form h0 bound examples")
{
	const BoundReport a = h0_closed_form_bound({1, 4}, SurfaceK3(5));
	CHECK(a.value == Rational(49, 20));
	CHECK(a.cap() == 2);
	CHECK(a.strict);
	CHECK(a.provenance == "k3-closed-form");
	const BoundReport b = h0_closed_form_bound({2, 6}, SurfaceK3(4));
	CHECK(b.value == Rational(9, 2));
	CHECK(b.cap() == 4);
	for (std::int64_t g = 2; g <= 20; ++g)
		for (std::int64_t r = 1; r <= 5; ++r) {
			const BoundReport z = h0_closed_form_bound({r, 0}, SurfaceK3(g));
			CHECK(z.value == Rational(r) + Rational(r, g));
			if (r < g)
				CHECK(z.cap() == r);
		}
	// strict bound on an integer value
	CHECK(make_report(3, "x", true).cap() == 2);
	CHECK(make_report(3, "x").cap() == 3);
	CHECK_THROWS_AS(h0_closed_form_bound({2, 7}, SurfaceK3(4)), HypothesisError);
	CHECK_THROWS_AS(h0_closed_form_bound({2, -1}, SurfaceK3(4)), HypothesisError);
}

TEST_CASE("closed form is increasing in d and dominates the triangle evaluation")
{
	for (std::int64_t g = 3; g <= 30; ++g) {
		const SurfaceK3 s(g);
		for (std::int64_t r = 1; r <= 5; ++r) {
			Rational prev = -1;
			for (std::int64_t d = 0; d <= r * (g - 1); ++d) {
				const BoundReport rep = h0_closed_form_bound({r, d}, s);
				CHECK(rep.value > prev);
				prev = rep.value;
				REQUIRE(rep.sharper_enclosure);
				REQUIRE(rep.slack_delta);
				CHECK(*rep.sharper_enclosure < rep.value);
				CHECK(*rep.slack_delta > Rational(-1, 1000));
				CHECK(*rep.slack_delta < Rational(2 * r, g));
				CHECK(slack_delta_nonnegative({r, d}, s));
				CHECK(slack_delta_below_cap({r, d}, s));
			}
		}
	}
}

TEST_CASE("convex regions")
{
	const ConvexRegion tri({{0, 0}, {-2, 1}, {0, 2}, {-1, 1}}); // (-1,1) is interior
	CHECK(tri.vertices().size() == 3);
	CHECK(tri.contains({-1, 1}));
	CHECK(tri.contains({0, 1}));
	CHECK_FALSE(tri.contains({1, 1}));
	const auto sl = tri.slice(1);
	REQUIRE(sl);
	CHECK(sl->first == -2);
	CHECK(sl->second == 0);
	CHECK_FALSE(tri.slice(3));
	const ConvexRegion seg({{0, 0}, {2, 4}});
	CHECK(seg.contains({1, 2}));
	CHECK_FALSE(seg.contains({1, 1}));
	CHECK_THROWS_AS(ConvexRegion({}), DomainError);
}

TEST_CASE("max convex chain")
{
	const SurfaceK3 s(10);
	const ZbarPoint q{0, 2};
	// the segment o-q alone gives the chord
	CHECK(max_convex_chain(ConvexRegion({{0, 0}, q}), q, 1, s) == ns_norm_floor({0, 0}, q, s));

	const Triangle t = bounding_triangle({2, 18}, s);
	const ConvexRegion region = triangle_region(t);
	const Integer best = max_convex_chain(region, q, 1, s);
	CHECK(best >= ns_norm_floor({0, 0}, q, s));
	// rank-2 cap h0 <= -floor((g+1)/2) + 3 + d/2 = 7 with chi = 0
	CHECK(best <= 14);

	CHECK_THROWS_AS(max_convex_chain(region, q, 0, s), DomainError);
	CHECK_THROWS_AS(max_convex_chain(region, {0, Rational(3, 2)}, 1, s), DomainError);
	CHECK_THROWS_AS(max_convex_chain(region, {100, 2}, 1, s), DomainError);
}

TEST_CASE("max convex chain matches exhaustive search")
{
	for (int i = 0; i < 120; ++i) {
		const SurfaceK3 s(rand_int(2, 12));
		const std::int64_t top = rand_int(1, 4);
		const ZbarPoint q{Rational(rand_int(-6, 2)), Rational(top)};
		const ZbarPoint apex{Rational(rand_int(-10, 0)), Rational(rand_int(0, top))};
		const ZbarPoint extra{Rational(rand_int(-10, 0)), Rational(rand_int(0, top))};
		const ConvexRegion region({{0, 0}, apex, extra, q});
		CHECK(max_convex_chain(region, q, 1, s) == brute_force_chain(region, q, s, -12, 4));
	}
}

TEST_CASE("max convex chain is monotone in the region")
{
	for (int i = 0; i < 100; ++i) {
		const SurfaceK3 s(rand_int(2, 12));
		const std::int64_t r = rand_int(2, 4), g = s.genus();
		const std::int64_t d = rand_int(1, r * (g - 1));
		const Triangle t = bounding_triangle({r, d}, s);
		const ZbarPoint mid{(t.apex.x + t.q.x) / 2, (t.apex.y + t.q.y) / 2};
		const Integer small = max_convex_chain(ConvexRegion({t.o, mid, t.q}), t.q, 1, s);
		const Integer big = max_convex_chain(triangle_region(t), t.q, 1, s);
		CHECK(small <= big);
	}
}
