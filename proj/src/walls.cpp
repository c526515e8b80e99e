#include "cliffwalls/walls.hpp"

namespace cliffwalls {

Line Line::through(const ProjPoint &p, const Rational &slope)
{
	return {slope, p.y - slope * p.x};
}

namespace {

struct Endpoint {
	Abscissa beta;
	bool piece_boundary; // a half-integer or integer, not a root
};

struct Interval {
	Endpoint lo, hi;
};

EndpointKind classify(const Abscissa &beta, const Line &line, const SurfaceK3 &s)
{
	const auto *q = std::get_if<Rational>(&beta);
	if (q == nullptr || !q->is_integer())
		return EndpointKind::OnGamma;
	return line.at(*q) == gamma_value(*q, s) ? EndpointKind::OnGamma : EndpointKind::OnVerticalSegment;
}

// Positive part of line - Gamma on the open piece (a, b) inside the cell of n,
// where it equals -g t^2 + (m + 2n) t + (c + 1 - n^2).
std::optional<Interval> positive_part(const Line &line, const SurfaceK3 &s, std::int64_t n,
                                      const Rational &a, const Rational &b)
{
	const Rational qa = -Rational(s.genus());
	const Rational qb = line.slope + 2 * n;
	const Rational qc = line.intercept + 1 - Rational(n) * n;
	if ((qb * qb - 4 * qa * qc).sign() <= 0)
		return std::nullopt;
	const Abscissa r1 = make_root(qa, qb, qc, Branch::Lower);
	const Abscissa r2 = make_root(qa, qb, qc, Branch::Upper);
	Endpoint lo = compare(r1, a) <= 0 ? Endpoint{a, true} : Endpoint{r1, false};
	Endpoint hi = compare(r2, b) >= 0 ? Endpoint{b, true} : Endpoint{r2, false};
	if (compare(lo.beta, hi.beta) >= 0)
		return std::nullopt;
	return Interval{lo, hi};
}

} // namespace

std::vector<WallSegment> above_gamma(const Line &line, const SurfaceK3 &s)
{
	// line > Gamma forces (H^2/2) t^2 < |m||t| + |c| + 1, so |t| < R with
	// R = max(1, 2(|m| + |c| + 1)/H^2)
	const Rational radius =
	    max(Rational(1), 2 * (line.slope.abs() + line.intercept.abs() + 1) / s.h_squared());
	const std::int64_t reach = to_int64(radius.ceil()) + 1;
	const Rational half(1, 2);

	std::vector<WallSegment> out;
	std::optional<Endpoint> run_start;
	std::optional<Endpoint> run_end;
	auto close_run = [&]() {
		if (!run_start)
			return;
		out.push_back({line,
		               {run_start->beta, classify(run_start->beta, line, s)},
		               {run_end->beta, classify(run_end->beta, line, s)}});
		run_start.reset();
		run_end.reset();
	};

	for (std::int64_t n = -reach; n <= reach; ++n) {
		const Rational center(n);
		const Rational pieces[2][2] = {{center - half, center}, {center, center + half}};
		for (const auto &piece : pieces) {
			auto part = positive_part(line, s, n, piece[0], piece[1]);
			if (!part) {
				close_run();
				continue;
			}
			const bool joins = run_start && run_end->piece_boundary && part->lo.piece_boundary &&
			                   line.at(piece[0]) > gamma_value(piece[0], s);
			if (!joins) {
				close_run();
				run_start = part->lo;
			}
			run_end = part->hi;
			if (!part->hi.piece_boundary)
				close_run();
		}
	}
	close_run();
	return out;
}

std::vector<Crossing> intersect_gamma(const Line &line, const SurfaceK3 &s)
{
	std::vector<Crossing> out;
	for (const auto &seg : above_gamma(line, s)) {
		if (out.empty() || compare(out.back().beta, seg.left.beta) != 0)
			out.push_back(seg.left);
		out.push_back(seg.right);
	}
	return out;
}

Rational rank0_wall_slope(const ChernCharacter &v)
{
	if (v.rk != 0)
		throw DomainError("rank0_wall_slope needs a rank-0 class");
	if (v.c1 == 0)
		throw DomainError("rank-0 class with c1 = 0 has no finite wall slope");
	return v.ch2 / v.c1;
}

Line wall_line(const ChernCharacter &v, const ChernCharacter &w)
{
	if (v.rk == 0 && w.rk == 0)
		throw DomainError("two rank-0 classes do not define a wall");
	if (proportional(v, w))
		throw DegenerateWall("proportional classes " + v.to_string() + " and " + w.to_string() +
		                     " cannot make a wall");
	if (v.rk == 0)
		return Line::through(pr(w), rank0_wall_slope(v));
	if (w.rk == 0)
		return Line::through(pr(v), rank0_wall_slope(w));
	const ProjPoint p = pr(v), q = pr(w);
	if (p.x == q.x)
		throw DegenerateWall("vertical locus beta = " + p.x.to_string() + " has no bounded segment");
	return Line::through(p, (q.y - p.y) / (q.x - p.x));
}

std::vector<WallSegment> wall_between(const ChernCharacter &v, const ChernCharacter &w,
                                      const SurfaceK3 &s)
{
	return above_gamma(wall_line(v, w), s);
}

BetaBounds first_wall_beta_bounds(const PushforwardSpec &p, const SurfaceK3 &s)
{
	if (p.r < 1)
		throw HypothesisError("r >= 1 violated");
	const std::int64_t h2 = s.h_squared();
	if (p.d < 0 || p.d > 2 * p.r * (s.genus() - 1))
		throw HypothesisError("0 <= d <= 2r(g-1) violated");
	BetaBounds b;
	b.beta2_max = Rational(p.d) / (p.r * h2);
	b.beta1_min = b.beta2_max - 1;
	b.refined_beta1 = max(b.beta1_min, Rational(-1) + Rational(1, p.r));
	b.refined_beta2 = p.d <= h2 + p.r ? min(b.beta2_max, Rational(1, p.r)) : b.beta2_max;
	if (p.r == 3)
		b.r3_alternative = Rank3Alternative{Rational(-1, 2), 3, 1};
	return b;
}

} // namespace cliffwalls
