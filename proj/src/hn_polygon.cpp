#include "cliffwalls/hn_polygon.hpp"

#include "cliffwalls/stability.hpp"

#include <algorithm>
#include <map>

namespace cliffwalls {

namespace {

Rational cross(const ZbarPoint &a, const ZbarPoint &b) { return a.x * b.y - a.y * b.x; }
ZbarPoint minus(const ZbarPoint &a, const ZbarPoint &b) { return {a.x - b.x, a.y - b.y}; }

} // namespace

ZbarPoint zbar(const ChernCharacter &v) { return {v.ch2, Rational(v.c1)}; }

Rational ns_norm_squared(const ZbarPoint &delta, const SurfaceK3 &s)
{
	return delta.x * delta.x + 4 * Rational(s.genus()) * delta.y * delta.y;
}

Integer ns_norm_floor(const ZbarPoint &p, const ZbarPoint &q, const SurfaceK3 &s)
{
	return floor_sqrt(ns_norm_squared(minus(q, p), s));
}

HNPolygon::HNPolygon(std::vector<ZbarPoint> points) : points_(std::move(points))
{
	if (points_.empty() || !points_.front().x.is_zero() || !points_.front().y.is_zero())
		throw DomainError("HN polygon must start at the origin");
	for (size_t i = 1; i < points_.size(); ++i) {
		const ZbarPoint e = minus(points_[i], points_[i - 1]);
		if (e.x.is_zero() && e.y.is_zero())
			throw DomainError("HN polygon has a repeated vertex");
		if (e.y.sign() < 0)
			throw DomainError("HN polygon edge with negative imaginary part");
		if (i >= 2 && cross(minus(points_[i - 1], points_[i - 2]), e).sign() <= 0)
			throw DomainError("HN polygon edges are not in strictly decreasing slope order");
	}
}

Integer BoundReport::cap() const
{
	if (strict)
		return value.ceil() - 1;
	return integer_bound;
}

BoundReport make_report(Rational value, std::string provenance, bool strict)
{
	BoundReport r;
	r.integer_bound = value.floor();
	r.value = std::move(value);
	r.provenance = std::move(provenance);
	r.strict = strict;
	return r;
}

Rational euler_characteristic(const ChernCharacter &v) { return Rational(2 * v.rk) + v.ch2; }

BoundReport h0_bound_from_polygon(const HNPolygon &polygon, const ChernCharacter &v,
                                  const SurfaceK3 &s)
{
	const auto &pts = polygon.points();
	if (!(pts.back() == zbar(v)))
		throw DomainError("HN polygon does not end at Zbar(v)");
	Integer lengths = 0;
	for (size_t i = 1; i < pts.size(); ++i)
		lengths += ns_norm_floor(pts[i - 1], pts[i], s);
	return make_report(euler_characteristic(v) / 2 + Rational(lengths) / 2, "hn-polygon-lengths");
}

Triangle bounding_triangle(const PushforwardSpec &p, const SurfaceK3 &s)
{
	if (p.r < 1 || p.d < 0)
		throw HypothesisError("r >= 1 and d >= 0 required");
	const Rational h2(s.h_squared());
	const Rational d(p.d);
	ZbarPoint apex{d * d * s.genus() / (h2 * h2 * p.r) - p.r, d / h2};
	ZbarPoint q{Rational(p.d - p.r * (s.genus() - 1)), Rational(p.r)};
	return {{0, 0}, apex, q};
}

Triangle wall_triangle(const Rational &beta1, const Rational &beta2, const ZbarPoint &q,
                       const SurfaceK3 &s)
{
	const ZbarPoint along_o{gamma_value(beta2, s), beta2};
	const ZbarPoint along_q{gamma_value(beta1, s), beta1};
	const Rational det = cross(along_q, along_o);
	if (det.is_zero())
		throw DomainError("triangle legs are parallel");
	// apex = t along_o = q + u along_q
	const Rational t = cross(along_q, q) / det;
	return {{0, 0}, {t * along_o.x, t * along_o.y}, q};
}

Rational h0_closed_form_value(const PushforwardSpec &p, const SurfaceK3 &s)
{
	const Rational g(s.genus());
	const Rational d(p.d);
	return Rational(p.r) + g * d * d / (4 * Rational(p.r) * (g - 1) * (g - 1)) + Rational(p.r) / g;
}

namespace {

struct SlackTerms {
	Rational known;       // r(g-1) - d + r + X
	Rational squared_len; // |p'q|^2
};

SlackTerms slack_terms(const PushforwardSpec &p, const SurfaceK3 &s)
{
	const Triangle t = bounding_triangle(p, s);
	const Rational x_term = t.apex.x + p.r;
	return {Rational(p.r * (s.genus() - 1) - p.d + p.r) + x_term,
	        ns_norm_squared(minus(t.q, t.apex), s)};
}

void check_closed_form_range(const PushforwardSpec &p, const SurfaceK3 &s)
{
	if (p.r < 1)
		throw HypothesisError("r >= 1 violated");
	if (p.d < 0 || p.d > p.r * (s.genus() - 1))
		throw HypothesisError("0 <= d <= r(g-1) violated (d = " + std::to_string(p.d) +
		                      ", r(g-1) = " + std::to_string(p.r * (s.genus() - 1)) + ")");
}

} // namespace

BoundReport h0_closed_form_bound(const PushforwardSpec &p, const SurfaceK3 &s, const Integer &scale)
{
	check_closed_form_range(p, s);
	BoundReport report = make_report(h0_closed_form_value(p, s), "k3-closed-form", true);
	const Triangle t = bounding_triangle(p, s);
	const Rational chi = Rational(p.d) + Rational(p.r * (1 - s.genus()));
	const Rational op = ns_norm_squared(t.apex, s);
	const Rational pq = ns_norm_squared(minus(t.q, t.apex), s);
	report.sharper_enclosure = chi / 2 + (sqrt_upper(op, scale) + sqrt_upper(pq, scale)) / 2;
	const SlackTerms st = slack_terms(p, s);
	report.slack_delta = sqrt_upper(st.squared_len, scale) - st.known;
	return report;
}

bool slack_delta_below_cap(const PushforwardSpec &p, const SurfaceK3 &s)
{
	check_closed_form_range(p, s);
	const SlackTerms st = slack_terms(p, s);
	// sqrt(L) < known + 2r/g
	const Rational rhs = st.known + Rational(2 * p.r) / s.genus();
	return sign_surd(rhs, -1, st.squared_len) > 0;
}

bool slack_delta_nonnegative(const PushforwardSpec &p, const SurfaceK3 &s)
{
	check_closed_form_range(p, s);
	const SlackTerms st = slack_terms(p, s);
	return sign_surd(-st.known, 1, st.squared_len) >= 0;
}

ConvexRegion::ConvexRegion(std::vector<ZbarPoint> vertices)
{
	if (vertices.empty())
		throw DomainError("empty region");
	std::sort(vertices.begin(), vertices.end(), [](const ZbarPoint &a, const ZbarPoint &b) {
		return a.x != b.x ? a.x < b.x : a.y < b.y;
	});
	vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
	if (vertices.size() <= 2) {
		hull_ = vertices;
		return;
	}
	// monotone chain, dropping collinear points
	std::vector<ZbarPoint> h(2 * vertices.size());
	size_t k = 0;
	for (const auto &v : vertices) {
		while (k >= 2 && cross(minus(h[k - 1], h[k - 2]), minus(v, h[k - 2])).sign() <= 0)
			--k;
		h[k++] = v;
	}
	for (size_t i = vertices.size() - 1, lower = k + 1; i-- > 0;) {
		const auto &v = vertices[i];
		while (k >= lower && cross(minus(h[k - 1], h[k - 2]), minus(v, h[k - 2])).sign() <= 0)
			--k;
		h[k++] = v;
	}
	h.resize(k - 1);
	hull_ = std::move(h);
}

bool ConvexRegion::contains(const ZbarPoint &p) const
{
	if (hull_.size() == 1)
		return p == hull_[0];
	if (hull_.size() == 2) {
		const ZbarPoint &a = hull_[0], &b = hull_[1];
		if (!cross(minus(b, a), minus(p, a)).is_zero())
			return false;
		return min(a.x, b.x) <= p.x && p.x <= max(a.x, b.x) && min(a.y, b.y) <= p.y &&
		       p.y <= max(a.y, b.y);
	}
	for (size_t i = 0; i < hull_.size(); ++i) {
		const ZbarPoint &a = hull_[i], &b = hull_[(i + 1) % hull_.size()];
		if (cross(minus(b, a), minus(p, a)).sign() < 0)
			return false;
	}
	return true;
}

std::optional<std::pair<Rational, Rational>> ConvexRegion::slice(const Rational &y) const
{
	std::optional<std::pair<Rational, Rational>> out;
	auto add = [&](const Rational &x) {
		if (!out)
			out.emplace(x, x);
		else
			out = std::make_pair(min(out->first, x), max(out->second, x));
	};
	const size_t n = hull_.size();
	for (size_t i = 0; i < n; ++i) {
		const ZbarPoint &a = hull_[i];
		if (a.y == y)
			add(a.x);
		if (n == 1 || (n == 2 && i == 1))
			continue;
		const ZbarPoint &b = hull_[(i + 1) % n];
		if (a.y != b.y && (a.y - y).sign() * (b.y - y).sign() < 0)
			add(a.x + (y - a.y) * (b.x - a.x) / (b.y - a.y));
	}
	return out;
}

ConvexRegion triangle_region(const Triangle &t) { return ConvexRegion({t.o, t.apex, t.q}); }

Integer max_convex_chain(const ConvexRegion &region, const ZbarPoint &q, const Rational &x_step,
                         const SurfaceK3 &s)
{
	const ZbarPoint origin{0, 0};
	if (x_step.sign() <= 0)
		throw DomainError("lattice step must be positive");
	if (!q.y.is_integer() || q.y.sign() <= 0)
		throw DomainError("chain end must sit on a positive integer level");
	if (!region.contains(origin) || !region.contains(q))
		throw DomainError("region must contain both chain ends");

	std::vector<ZbarPoint> pts{origin};
	const std::int64_t top = to_int64(q.y.num());
	for (std::int64_t y = 1; y < top; ++y) {
		auto range = region.slice(Rational(y));
		if (!range)
			continue;
		const Integer m_lo = (range->first / x_step).ceil();
		const Integer m_hi = (range->second / x_step).floor();
		for (Integer m = m_lo; m <= m_hi; ++m)
			pts.push_back({Rational(m) * x_step, Rational(y)});
	}
	pts.push_back(q);

	std::map<std::pair<Rational, Rational>, std::int64_t> weight_cache;
	auto weight = [&](const ZbarPoint &e) {
		auto key = std::make_pair(e.x, e.y);
		auto it = weight_cache.find(key);
		if (it == weight_cache.end())
			it = weight_cache.emplace(key, to_int64(floor_sqrt(ns_norm_squared(e, s)))).first;
		return it->second;
	};

	// incoming[i]: (slope x/y of the last edge, best total); pts sorted by y
	struct Arrival {
		Rational slope;
		std::int64_t total;
	};
	std::vector<std::vector<Arrival>> incoming(pts.size());
	for (size_t i = 0; i < pts.size(); ++i) {
		auto &in = incoming[i];
		std::vector<std::int64_t> prefix;
		if (i > 0) {
			if (in.empty())
				continue;
			std::sort(in.begin(), in.end(),
			          [](const Arrival &a, const Arrival &b) { return a.slope > b.slope; });
			for (const auto &a : in)
				prefix.push_back(prefix.empty() ? a.total : std::max(prefix.back(), a.total));
		}
		for (size_t j = i + 1; j < pts.size(); ++j) {
			const ZbarPoint e = minus(pts[j], pts[i]);
			if (e.y.sign() <= 0)
				continue;
			const Rational slope = e.x / e.y;
			std::int64_t best = 0;
			if (i > 0) {
				// arrivals with slope strictly above the outgoing one
				auto it = std::partition_point(in.begin(), in.end(),
				                               [&](const Arrival &a) { return a.slope > slope; });
				if (it == in.begin())
					continue;
				best = prefix[static_cast<size_t>(it - in.begin()) - 1];
			}
			incoming[j].push_back({slope, best + weight(e)});
		}
	}
	std::int64_t best = -1;
	for (const auto &a : incoming.back())
		best = std::max(best, a.total);
	return best;
}

} // namespace cliffwalls
