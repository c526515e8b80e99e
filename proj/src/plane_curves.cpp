#include "cliffwalls/plane_curves.hpp"

#include <string>

namespace cliffwalls {

Rational gamma_tilde_offset(const Rational &x)
{
	const Integer n = (x + Rational(1, 2)).floor();
	const Rational f = x - Rational(n);
	if (f.is_zero())
		return 0;
	return f * f / 2 - Rational(3, 2) * f.abs() + 1;
}

Rational gamma_tilde(const Rational &x) { return x * x / 2 - gamma_tilde_offset(x); }

LBranch l_branch(const Rational &a, const Rational &b)
{
	if (b.sign() <= 0)
		throw DomainError("L needs a positive second coordinate");
	return a >= -b ? LBranch::I : LBranch::J;
}

Rational L_value(const Rational &a, const Rational &b)
{
	if (l_branch(a, b) == LBranch::I)
		return Rational(3, 2) * b + a;
	return -(b * b) / (2 * a);
}

Rational l_chain_length(const std::vector<ZbarPoint> &points)
{
	Rational total = 0;
	for (size_t i = 1; i < points.size(); ++i)
		total += L_value(points[i].x - points[i - 1].x, points[i].y - points[i - 1].y);
	return total;
}

HomBoundP2 hom_bound_p2(const ChernCharacter &v)
{
	if (v.c1 == 0)
		throw DomainError("hom bound needs ch1 != 0");
	HomBoundP2 out;
	const Rational c1(v.c1);
	const Rational ratio = v.ch2 / c1;
	if (ratio > Rational(-3, 2))
		out.equality = Rational(v.rk) + Rational(3, 2) * c1 + v.ch2;
	if (v.ch2.sign() < 0)
		out.upper_bound = Rational(v.rk) - c1 * c1 / (2 * v.ch2);
	out.no_stable_object = Rational(-3, 2) < ratio && ratio < Rational(-1);
	if (out.equality && out.upper_bound)
		out.best = make_report(min(*out.equality, *out.upper_bound), "plane-hom-both-branches");
	else if (out.equality)
		out.best = make_report(*out.equality, "plane-hom-euler-characteristic");
	else if (out.upper_bound)
		out.best = make_report(*out.upper_bound, "plane-hom-negative-ch2");
	else
		throw DomainError("no hom bound applies to " + v.to_string());
	return out;
}

ChernCharacter pushforward_class_p2(std::int64_t r, std::int64_t d, std::int64_t l)
{
	if (r < 1 || l < 1)
		throw HypothesisError("r >= 1 and l >= 1 required");
	return {0, r * l, Rational(d) - Rational(r * l * l, 2)};
}

std::vector<SlopeInterval> phase_range_p2(std::int64_t r, std::int64_t d, std::int64_t l)
{
	if (r < 1 || l < 1)
		throw HypothesisError("r >= 1 and l >= 1 required");
	const Rational lo = Rational(d, 2 * r * l) - Rational(l, 2);
	if (d >= r * l)
		return {{lo, Rational(d, 2 * r * l)}};
	return {{lo, Rational(-1, 2)}, {Rational(1 - l, 2), Rational(d, r) - l + Rational(1, 2)}};
}

PlaneWallBetas plane_first_wall_betas(std::int64_t r, std::int64_t d, std::int64_t l)
{
	if (r < 1 || l < 1)
		throw HypothesisError("r >= 1 and l >= 1 required");
	const Rational top(d, r * l);
	return {top - l, top};
}

ZbarPoint plane_triangle_apex(std::int64_t r, std::int64_t d, std::int64_t l)
{
	if (d >= r * l)
		return {Rational(d * d, 2 * r * l * l), Rational(d, l)};
	return {Rational(d - r * l) + Rational(r, 2), Rational(r)};
}

Rational plane_envelope(std::int64_t r, std::int64_t d, std::int64_t l)
{
	return Rational(r) + Rational((r * l + r) * d, r * l * l - r * l);
}

namespace {

void check_plane_range(std::int64_t r, std::int64_t d, std::int64_t l)
{
	if (l < 5)
		throw HypothesisError("l >= 5 violated");
	if (r < 1)
		throw HypothesisError("r >= 1 violated");
	if (d < 0 || 2 * d > r * l * (l - 3))
		throw HypothesisError("0 <= d <= rl(l-3)/2 violated");
}

Rational high_degree_bound(std::int64_t r, std::int64_t d, std::int64_t l)
{
	const Rational dd(d);
	return Rational(r) + (Rational(3, 2 * l) + dd / (2 * r * l * l)) * dd;
}

Rational rational_branch_bound(std::int64_t r, std::int64_t d, std::int64_t l)
{
	return Rational(r) + Rational((r * l + r) * d, r * l * l - d);
}

} // namespace

BoundReport h0_bound_plane(std::int64_t r, std::int64_t d, std::int64_t l)
{
	check_plane_range(r, d, l);
	if (d >= r * l)
		return make_report(high_degree_bound(r, d, l), "plane-degree-at-least-rl");
	if (d >= r * (l - 1))
		return make_report(max(Rational(3 * r + d - r * l), rational_branch_bound(r, d, l)),
		                   "plane-degree-near-rl");
	return make_report(plane_envelope(r, d, l), "plane-low-degree-envelope");
}

std::vector<PlaneCaseViolation> plane_case_violations(std::int64_t r, std::int64_t l)
{
	if (l < 5)
		throw HypothesisError("l >= 5 violated");
	if (r < 1)
		throw HypothesisError("r >= 1 violated");
	std::vector<PlaneCaseViolation> out;
	const Rational target(l - 4);
	const Rational threshold = Rational(r * (l * l - l), l + 1);
	const Rational d_top = Rational(r * l * (l - 3), 2);

	// Cliff lower bound when d >= rl
	auto high = [&](const Rational &d) {
		return d / r - Rational(2, r) * (Rational(3, 2 * l) + d / (2 * r * l * l)) * d;
	};
	// scaled by r^2 l^2: d r l^2 - 3 d r l - d^2 against (l - 4) r^2 l^2
	const Integer scaled_target = Integer(l - 4) * r * r * l * l;
	for (std::int64_t d = r * l; Rational(d) <= d_top; ++d) {
		const Integer dd(d);
		if (dd * r * l * l - dd * 3 * r * l - dd * dd < scaled_target)
			out.push_back({1, d, high(d), target, ">="});
	}
	// the concave bound is minimal at an end of the range
	const Rational at_top = high(d_top);
	if (high(Rational(r * l)) != target)
		out.push_back({1, Rational(r * l), high(Rational(r * l)), target, "=="});
	if (at_top != Rational((l - 3) * (l - 3), 4))
		out.push_back({1, d_top, at_top, Rational((l - 3) * (l - 3), 4), "=="});
	if (min(high(Rational(r * l)), at_top) != target)
		out.push_back({1, d_top, min(high(Rational(r * l)), at_top), target, "=="});

	const std::int64_t first_mid = to_int64(threshold.ceil());
	for (std::int64_t d = first_mid; d < r * l; ++d) {
		const Rational linear = Rational(d, r) - Rational(2, r) * Rational(3 * r + d - r * l) + 2;
		if (linear <= target)
			out.push_back({2, d, linear, target, ">"});
		const Rational rational = Rational(d, r) - Rational(2 * (l + 1) * d, r * l * l - d);
		if (rational <= target)
			out.push_back({3, d, rational, target, ">"});
	}
	const Rational chained = Rational(l * l - 3 * l - 2, l + 1);
	if (chained <= target)
		out.push_back({3, threshold, chained, target, ">"});

	for (std::int64_t d = 0; d < first_mid; ++d) {
		const Rational env = plane_envelope(r, d, l);
		if (env >= Rational(2 * r))
			out.push_back({4, d, env, Rational(2 * r), "<"});
		const Rational branch = rational_branch_bound(r, d, l);
		if (branch > env)
			out.push_back({4, d, branch, env, "<="});
	}
	return out;
}

PlaneClifford clifford_plane(std::int64_t r, std::int64_t l)
{
	PlaneClifford out{Rational(l - 4), {}};
	for (const auto &v : plane_case_violations(r, l)) {
		switch (v.case_index) {
		case 1: out.record.high_degree = false; break;
		case 2: out.record.linear_branch = false; break;
		case 3: out.record.rational_branch = false; break;
		default: out.record.small_degree = false; break;
		}
	}
	return out;
}

} // namespace cliffwalls
