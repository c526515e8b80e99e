#pragma once

#include "cliffwalls/lattice.hpp"

#include <optional>

namespace cliffwalls {

// gamma(x): 1-periodic, 1 - x^2 on [-1/2, 1/2] away from 0, gamma(0) = 0.
Rational gamma_offset(const Rational &beta);

// Gamma(beta) = (H^2/2) beta^2 - gamma(beta); takes the jump value at integers.
Rational gamma_value(const Rational &beta, const SurfaceK3 &s);

// A point (beta, alpha) strictly above Gamma.
class SlicePoint {
public:
	SlicePoint(Rational beta, Rational alpha, const SurfaceK3 &s);

	const Rational &beta() const { return beta_; }
	const Rational &alpha() const { return alpha_; }

private:
	Rational beta_, alpha_;
};

struct CentralCharge {
	Rational re;
	Rational im;
};

// Z = -ch2 + alpha rk + i (c1 - beta rk)
CentralCharge central_charge(const ChernCharacter &v, const SlicePoint &p);

// -Re Z / Im Z, or +infinity when Im Z = 0.
struct TiltSlope {
	std::optional<Rational> finite;

	bool infinite() const { return !finite.has_value(); }
	friend bool operator==(const TiltSlope &, const TiltSlope &) = default;
};

TiltSlope tilt_slope(const ChernCharacter &v, const SlicePoint &p);

struct ProjPoint {
	Rational x;
	Rational y;
	friend bool operator==(const ProjPoint &, const ProjPoint &) = default;
};

// (c1 / rk, ch2 / rk)
ProjPoint pr(const ChernCharacter &v);

// ch2/rk <= Gamma(c1/rk)
bool pr_not_in_gamma_plus(const ChernCharacter &v, const SurfaceK3 &s);

} // namespace cliffwalls
