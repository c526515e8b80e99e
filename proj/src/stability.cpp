#include "cliffwalls/stability.hpp"

namespace cliffwalls {

Rational gamma_offset(const Rational &beta)
{
	// nearest integer cell: f in [-1/2, 1/2)
	const Integer n = (beta + Rational(1, 2)).floor();
	const Rational f = beta - Rational(n);
	if (f.is_zero())
		return 0;
	return 1 - f * f;
}

Rational gamma_value(const Rational &beta, const SurfaceK3 &s)
{
	return Rational(s.h_squared()) / 2 * beta * beta - gamma_offset(beta);
}

SlicePoint::SlicePoint(Rational beta, Rational alpha, const SurfaceK3 &s)
    : beta_(std::move(beta)), alpha_(std::move(alpha))
{
	if (alpha_ <= gamma_value(beta_, s))
		throw DomainError("(beta, alpha) = (" + beta_.to_string() + ", " + alpha_.to_string() +
		                  ") is not above Gamma");
}

CentralCharge central_charge(const ChernCharacter &v, const SlicePoint &p)
{
	return {-v.ch2 + p.alpha() * v.rk, Rational(v.c1) - p.beta() * v.rk};
}

TiltSlope tilt_slope(const ChernCharacter &v, const SlicePoint &p)
{
	const CentralCharge z = central_charge(v, p);
	if (z.im.is_zero())
		return {};
	return {-z.re / z.im};
}

ProjPoint pr(const ChernCharacter &v)
{
	if (v.rk == 0)
		throw DomainError("rank-0 class has no projection");
	return {Rational(v.c1) / v.rk, v.ch2 / v.rk};
}

bool pr_not_in_gamma_plus(const ChernCharacter &v, const SurfaceK3 &s)
{
	const ProjPoint p = pr(v);
	return p.y <= gamma_value(p.x, s);
}

} // namespace cliffwalls
