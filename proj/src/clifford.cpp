#include "cliffwalls/clifford.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace cliffwalls {

Rational clifford_of_bundle(std::int64_t r, std::int64_t d, std::int64_t h0)
{
	if (r < 1)
		throw HypothesisError("r >= 1 violated");
	return Rational(d, r) - Rational(2 * h0, r) + 2;
}

bool satisfies_clifford_theorem(std::int64_t r, std::int64_t d, std::int64_t h0)
{
	return clifford_of_bundle(r, d, h0).sign() >= 0;
}

Rational clifford_index_k3(const CliffordQuery &q)
{
	if (q.r < 1)
		throw HypothesisError("r >= 1 violated");
	if (q.r == 1) {
		if (q.g < 4)
			throw HypothesisError("g >= 4 violated");
		return Rational(q.g - 1 - q.g / 2);
	}
	if (q.g < q.r * q.r)
		throw HypothesisError("g >= r^2 violated");
	return Rational(2 * (q.g - 1), q.r) - Rational(2 * (q.g / q.r), q.r);
}

LMConstruction lm_construction(const CliffordQuery &q)
{
	if (q.r < 2)
		throw HypothesisError("r >= 2 violated");
	const SurfaceK3 s(q.g);
	const std::int64_t r = q.r, fl = q.g / q.r;
	LMConstruction c;
	c.chern = {r, 1, Rational(fl - r)};
	c.h0_lower = fl + r;
	c.degree = 2 * (q.g - 1);
	c.cliff_upper = Rational(2 * (q.g - 1), r) - Rational(2 * fl, r);
	c.genus_in_range = q.g >= std::max<std::int64_t>(r * r, 6);
	const Rational h2(s.h_squared());
	const Rational lhs = h2 + h2 * (r - 2) / ((r - 1) * (r - 1)) - 2 * r * r - (h2 - 2 * r * fl);
	c.inequality_holds = lhs.sign() > 0;
	c.valid = c.genus_in_range && c.inequality_holds;
	return c;
}

SharpExample sharp_example(std::int64_t r, std::int64_t k, std::int64_t g)
{
	if (k < 1 || k > r)
		throw HypothesisError("1 <= k <= r violated");
	const std::int64_t t = std::gcd(r, k);
	const std::int64_t ratio = r / t;
	if (g < ratio * ratio)
		throw HypothesisError("g >= (r/t)^2 violated");
	SharpExample e;
	e.t = t;
	e.d = 2 * k * (g - 1);
	const Rational inner = Rational(t, r) + Rational(k * k * (g - 1), r * t);
	e.h0 = t * to_int64(inner.floor()) + r;
	e.cliff = clifford_of_bundle(r, e.d, e.h0);
	return e;
}

CorollaryBound corollary_lower_bound(const CliffordQuery &q, const Integer &scale)
{
	if (q.g < 3)
		throw HypothesisError("g >= 3 violated");
	const Rational coef = 2 - Rational(2, q.g);
	CorollaryBound b{Surd(-2, coef, Rational(q.g - 1)), 0};
	b.rational_lower = -2 + coef * sqrt_lower(Rational(q.g - 1), scale);
	return b;
}

bool exceeds_corollary_bound(const Rational &value, std::int64_t g)
{
	if (g < 3)
		throw HypothesisError("g >= 3 violated");
	return sign_surd(value + 2, -(2 - Rational(2, g)), Rational(g - 1)) > 0;
}

Rational per_degree_clifford_bound(std::int64_t r, std::int64_t d, std::int64_t g)
{
	const Rational dd(d);
	return dd / r - dd * dd * g / (2 * Rational(r * r) * (g - 1) * (g - 1)) - Rational(2, g);
}

bool mercat_status(const CliffordQuery &q)
{
	if (q.r < 2)
		throw HypothesisError("r >= 2 violated");
	return clifford_index_k3(q) < clifford_index_k3({1, q.g});
}

} // namespace cliffwalls
