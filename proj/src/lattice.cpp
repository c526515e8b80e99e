#include "cliffwalls/lattice.hpp"

#include <numeric>

namespace cliffwalls {

SurfaceK3::SurfaceK3(std::int64_t genus, std::int64_t divisibility)
    : genus_(genus), divisibility_(divisibility)
{
	if (genus < 2)
		throw HypothesisError("g >= 2 violated");
	if (divisibility < 1)
		throw DomainError("divisibility parameter must be positive");
}

ChernCharacter ChernCharacter::sheaf_like(std::int64_t rk, std::int64_t c1, const Rational &ch2)
{
	if (!ch2.is_integer())
		throw DomainError("ch2 of a sheaf on the K3 must be an integer, got " + ch2.to_string());
	return {rk, c1, ch2};
}

std::string ChernCharacter::to_string() const
{
	return "(" + std::to_string(rk) + ", " + std::to_string(c1) + ", " + ch2.to_string() + ")";
}

Rational euler_pairing(const ChernCharacter &v, const ChernCharacter &w, const SurfaceK3 &s)
{
	return Rational(2 * v.rk * w.rk) + Rational(v.rk) * w.ch2 + Rational(w.rk) * v.ch2 -
	       Rational(v.c1 * w.c1 * s.h_squared());
}

bool admits_stable_object(const ChernCharacter &v, const SurfaceK3 &s)
{
	if (v.is_zero())
		throw DomainError("zero class");
	return -euler_pairing(v, v, s) >= -2;
}

bool is_primitive(const ChernCharacter &v)
{
	if (!v.ch2.is_integer())
		throw DomainError("primitivity needs an integral class");
	Integer g;
	mpz_gcd(g.get_mpz_t(), Integer(static_cast<long>(std::gcd(v.rk, v.c1))).get_mpz_t(),
	        v.ch2.num().get_mpz_t());
	return g == 1;
}

bool proportional(const ChernCharacter &v, const ChernCharacter &w)
{
	// all 2x2 minors of the matrix with rows v, w vanish
	const Rational vr(v.rk), vc(v.c1), wr(w.rk), wc(w.c1);
	return vr * wc == wr * vc && vr * w.ch2 == wr * v.ch2 && vc * w.ch2 == wc * v.ch2;
}

ChernCharacter pushforward_class(const PushforwardSpec &p, const SurfaceK3 &s)
{
	return {0, p.r, Rational(p.d - p.r * (s.genus() - 1))};
}

} // namespace cliffwalls
