#pragma once

#include "cliffwalls/numerics.hpp"

#include <cstdint>
#include <string>

namespace cliffwalls {

// Polarized K3 surface of Picard rank one, H^2 = 2g - 2.
class SurfaceK3 {
public:
	explicit SurfaceK3(std::int64_t genus, std::int64_t divisibility = 1);

	std::int64_t genus() const { return genus_; }
	std::int64_t h_squared() const { return 2 * genus_ - 2; }
	// H^2 divides H.D for every divisor D; only 1 is exercised
	std::int64_t divisibility() const { return divisibility_; }

private:
	std::int64_t genus_;
	std::int64_t divisibility_;
};

// (rk, ch1, ch2) with ch1 = c1 * H.
struct ChernCharacter {
	std::int64_t rk = 0;
	std::int64_t c1 = 0;
	Rational ch2;

	// Class of a sheaf on the K3: ch2 must be an integer.
	static ChernCharacter sheaf_like(std::int64_t rk, std::int64_t c1, const Rational &ch2);

	bool is_zero() const { return rk == 0 && c1 == 0 && ch2.is_zero(); }
	std::string to_string() const;

	friend bool operator==(const ChernCharacter &, const ChernCharacter &) = default;
	friend ChernCharacter operator+(const ChernCharacter &v, const ChernCharacter &w)
	{
		return {v.rk + w.rk, v.c1 + w.c1, v.ch2 + w.ch2};
	}
	friend ChernCharacter operator-(const ChernCharacter &v, const ChernCharacter &w)
	{
		return {v.rk - w.rk, v.c1 - w.c1, v.ch2 - w.ch2};
	}
	friend ChernCharacter operator*(std::int64_t k, const ChernCharacter &v)
	{
		return {k * v.rk, k * v.c1, Rational(k) * v.ch2};
	}
};

// A rank r, degree d bundle on the curve C in |H|.
struct PushforwardSpec {
	std::int64_t r;
	std::int64_t d;
};

Rational euler_pairing(const ChernCharacter &v, const ChernCharacter &w, const SurfaceK3 &s);

// Numeric existence criterion v^2 >= -2, i.e. chi(v, v) <= 2.
bool admits_stable_object(const ChernCharacter &v, const SurfaceK3 &s);

// gcd(rk, c1, ch2) == 1; requires an integral ch2.
bool is_primitive(const ChernCharacter &v);

bool proportional(const ChernCharacter &v, const ChernCharacter &w);

// Class of the pushforward of a rank r degree d bundle: (0, r, d - r(g-1)).
ChernCharacter pushforward_class(const PushforwardSpec &p, const SurfaceK3 &s);

} // namespace cliffwalls
