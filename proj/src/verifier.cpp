#include "cliffwalls/verifier.hpp"

#include "cliffwalls/clifford.hpp"
#include "cliffwalls/hn_polygon.hpp"
#include "cliffwalls/plane_curves.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <sstream>

namespace cliffwalls {

IntRange::IntRange(std::int64_t lo_, std::int64_t hi_) : lo(lo_), hi(hi_)
{
	if (lo > hi)
		throw DomainError("empty range [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

std::string Failure::describe() const
{
	std::ostringstream os;
	for (size_t i = 0; i < params.size(); ++i)
		os << (i ? " " : "") << params[i].first << "=" << params[i].second;
	os << ": " << check << ": " << lhs << " " << relation << " " << rhs << " fails";
	if (squared)
		os << " (squared sides)";
	return os.str();
}

namespace {

using Params = std::vector<std::pair<std::string, std::int64_t>>;

bool holds(const Rational &lhs, const std::string &relation, const Rational &rhs)
{
	if (relation == "<")
		return lhs < rhs;
	if (relation == "<=")
		return lhs <= rhs;
	if (relation == ">")
		return lhs > rhs;
	if (relation == ">=")
		return lhs >= rhs;
	return lhs == rhs;
}

class Recorder {
public:
	explicit Recorder(std::string suite) : start_(std::chrono::steady_clock::now())
	{
		report_.suite = std::move(suite);
	}

	void check(const Params &params, const std::string &name, const Rational &lhs,
	           const std::string &relation, const Rational &rhs, bool squared = false)
	{
		++report_.total;
		if (!holds(lhs, relation, rhs))
			report_.failures.push_back({params, name, lhs, rhs, relation, squared});
	}

	void skip() { ++report_.skipped; }
	void note(std::string text) { report_.notes.push_back(std::move(text)); }

	VerificationReport finish()
	{
		std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start_;
		report_.elapsed_seconds = dt.count();
		return std::move(report_);
	}

private:
	VerificationReport report_;
	std::chrono::steady_clock::time_point start_;
};

Rational frac(const Rational &x) { return x - Rational(x.floor()); }

} // namespace

VerificationReport verify_Q(const IntRange &rr, const IntRange &gg)
{
	Recorder rec("q-step1");
	for (std::int64_t r = rr.lo; r <= rr.hi; ++r) {
		for (std::int64_t g = gg.lo; g <= gg.hi; ++g) {
			if (r < 4 || g < r * r) {
				rec.skip();
				continue;
			}
			const Params p{{"r", r}, {"g", g}};
			const Rational fl(g / r);
			auto Q = [&](const Rational &t) {
				const Rational lift = 2 + t / (g - 1);
				return t / r -
				       Rational(2, r) * (Rational(r) + lift * lift * g / (4 * r) + Rational(r, g)) +
				       2 + Rational(2, r) * fl;
			};
			const Rational leading = -Rational(g) / (2 * Rational(r * r) * (g - 1) * (g - 1));
			// Q(t) - Q(0) - Q'(0)t recovers the quadratic coefficient exactly
			const Rational second_diff = (Q(2) - 2 * Q(1) + Q(0)) / 2;
			rec.check(p, "leading coefficient formula", second_diff, "==", leading);
			rec.check(p, "leading coefficient", leading, "<", 0);
			rec.check(p, "Q(5)", Q(5), ">", 0);
			rec.check(p, "Q((r-2)(g-1))", Q(Rational((r - 2) * (g - 1))), ">", 0);
		}
	}
	return rec.finish();
}

VerificationReport verify_fs(const IntRange &rr, const IntRange &gg)
{
	Recorder rec("fs-step2");
	for (std::int64_t r = rr.lo; r <= rr.hi; ++r) {
		for (std::int64_t g = gg.lo; g <= gg.hi; ++g) {
			if (r < 3 || g < r * r) {
				rec.skip();
				continue;
			}
			const std::int64_t s_max = g / (2 * r);
			for (std::int64_t s = 0; s <= s_max; ++s) {
				const Params p{{"r", r}, {"g", g}, {"s", s}};
				const Rational base = Rational(g * (r - 2), r) + Rational(g / r - s);
				const Rational f_squared = 4 * Rational(g) + pow2(base - 2);
				const Rational delta = s == 0 ? 1 : 2;
				const Rational rhs = base + Rational(2, r - 1) -
				                     Rational(r - 2, r - 1) * Rational(2 * r, g) + delta;
				rec.check(p, "right side positive", rhs, ">", 0);
				rec.check(p, "f(s) below bound", f_squared, "<", pow2(rhs), true);
			}
		}
	}
	return rec.finish();
}

VerificationReport verify_lE_cap(const IntRange &rr, const IntRange &gg)
{
	Recorder rec("le-cap");
	for (std::int64_t r = rr.lo; r <= rr.hi; ++r) {
		for (std::int64_t g = gg.lo; g <= gg.hi; ++g) {
			if (r < 3 || g < r * r) {
				rec.skip();
				continue;
			}
			const SurfaceK3 s(g);
			const std::int64_t fl = g / r;
			const std::int64_t cap = g * (r - 2) + 2 * fl + r + 2;
			const std::int64_t canonical = 2 * (g - 1);
			std::int64_t worst = -1, worst_d = 0;
			for (std::int64_t d = canonical - 2 * (fl - r); d <= canonical + 4; ++d) {
				if (d < 0 || d > r * (g - 1)) {
					rec.skip();
					continue;
				}
				const std::int64_t shift = d - canonical;
				const ZbarPoint q{Rational(d - r * (g - 1)), Rational(r)};
				// the q-leg (beta1 >= -1 + 1/r) at heights 1 and 2
				const ZbarPoint p_tilde{Rational(shift) + Rational(g, r) - r, 1};
				const ZbarPoint p_prime{Rational(shift) - Rational((r - 2) * (g + r), r), 2};
				// first factor of c1 = 1 has ch2 <= floor(g/r) - r (beta2 <= 1/r)
				const ZbarPoint p_one{min(Rational(fl - r), p_tilde.x), 1};
				const ConvexRegion region({{0, 0}, p_one, p_prime, q});
				const Integer best = max_convex_chain(region, q, 1, s);
				const Params p{{"r", r}, {"g", g}, {"d", d}};
				rec.check(p, "l(E) cap", Rational(best), "<=", Rational(cap));
				if (to_int64(best) > worst) {
					worst = to_int64(best);
					worst_d = d;
				}
			}
			if (worst >= 0)
				rec.note("r=" + std::to_string(r) + " g=" + std::to_string(g) + ": max l(E) " +
				         std::to_string(worst) + " at d=" + std::to_string(worst_d) + ", cap " +
				         std::to_string(cap));
		}
	}
	return rec.finish();
}

VerificationReport verify_rank2(const IntRange &gg)
{
	Recorder rec("rank2");
	for (std::int64_t g = gg.lo; g <= gg.hi; ++g) {
		if (g < 4) {
			rec.skip();
			continue;
		}
		const SurfaceK3 surf(g);
		const Rational target(g - 1 - g / 2);
		const Rational wall_cap_shift = Rational(-(g + 1) / 2 + 3);
		rec.check({{"g", g}}, "floor((g+1)/2) - 1 equals g-1-floor(g/2)", Rational((g + 1) / 2 - 1),
		          "==", target);
		for (std::int64_t d = 0; d <= 2 * (g - 1); ++d) {
			const Rational half_d(d, 2);
			const std::int64_t x = d - 2 * (g - 1);
			// destabilizing quotient (2, H, s): d/2 - g + 1 < s <= d - 3g/2
			const std::int64_t s_lo = to_int64((half_d - g + 1).floor()) + 1;
			const std::int64_t s_hi = to_int64((Rational(d) - Rational(3 * g, 2)).floor());
			for (std::int64_t s = s_lo; s <= s_hi; ++s) {
				const Params p{{"g", g}, {"d", d}, {"s", s}};
				const Integer lengths = floor_sqrt_sum(Rational(4 * g + s * s),
				                                       Rational(4 * g + (x - s) * (x - s)));
				const Rational bound = Rational(1 - g) + half_d + Rational(lengths) / 2;
				rec.check(p, "two-factor bound", bound, "<=", wall_cap_shift + half_d);
				const HNPolygon poly({{0, 0}, {Rational(s), 1}, {Rational(x), 2}});
				const ChernCharacter v{0, 2, Rational(x)};
				rec.check(p, "polygon floors within display", h0_bound_from_polygon(poly, v, surf).value,
				          "<=", bound);
			}
			if (x > 0)
				continue;
			const Params p{{"g", g}, {"d", d}};
			const Rational radicand = Rational(x * x + 16 * g);
			if (x > 4 - g) {
				const Rational cliff = Rational(g + 1) - Rational(floor_sqrt(radicand)) / 2;
				rec.check(p, "no-wall Clifford bound", cliff, ">=", target);
			} else {
				// x + sqrt(x^2 + 16g) <= 8
				const Rational lhs = radicand;
				const Rational rhs = pow2(Rational(8 - x));
				rec.check(p, "no-wall 2h0 <= 8", lhs, "<=", rhs, true);
			}
		}
	}
	return rec.finish();
}

VerificationReport verify_plane(const IntRange &ll, const IntRange &rr)
{
	Recorder rec("plane-cases");
	for (std::int64_t l = ll.lo; l <= ll.hi; ++l) {
		for (std::int64_t r = rr.lo; r <= rr.hi; ++r) {
			if (l < 5 || r < 1) {
				rec.skip();
				continue;
			}
			const Params p{{"l", l}, {"r", r}};
			const auto violations = plane_case_violations(r, l);
			for (int c = 1; c <= 4; ++c) {
				bool any = false;
				for (const auto &v : violations) {
					if (v.case_index != c)
						continue;
					any = true;
					rec.check(p, "case " + std::to_string(c) + " at d=" + v.d.to_string(), v.lhs,
					          v.relation, v.rhs);
				}
				if (!any)
					rec.check(p, "case " + std::to_string(c), 0, "==", 0);
			}
		}
	}
	return rec.finish();
}

VerificationReport verify_sharpness(const IntRange &rr, const IntRange &gg, const Rational &slack)
{
	Recorder rec("sharpness");
	for (std::int64_t r = rr.lo; r <= rr.hi; ++r) {
		for (std::int64_t k = 1; k <= r; ++k) {
			const std::int64_t t = std::gcd(r, k);
			for (std::int64_t g = gg.lo; g <= gg.hi; ++g) {
				if (r < 1 || g < 2 || g < (r / t) * (r / t)) {
					rec.skip();
					continue;
				}
				const Params p{{"r", r}, {"k", k}, {"g", g}};
				const SharpExample e = sharp_example(r, k, g);
				const Rational bound = h0_closed_form_value({r, e.d}, SurfaceK3(g));
				rec.check(p, "h0 below closed form", Rational(e.h0), "<", bound);
				const Rational gap = bound - e.h0;
				const Rational inner = Rational(t, r) + Rational(k * k * (g - 1), r * t);
				rec.check(p, "gap decomposition", gap, "==",
				          Rational(r, g) + Rational(k * k - t * t, r) + t * frac(inner));
				rec.check(p, "gap bound", gap, "<=",
				          Rational(t * t - k * k, r).abs() + Rational(r, g) + slack);
			}
		}
	}
	return rec.finish();
}

VerificationReport verify_rank2_identity(const IntRange &gg)
{
	Recorder rec("rank2-identity");
	for (std::int64_t g = gg.lo; g <= gg.hi; ++g) {
		if (g < 4) {
			rec.skip();
			continue;
		}
		rec.check({{"g", g}}, "Cliff_2 = floor((g-1)/2)", clifford_index_k3({2, g}), "==",
		          Rational((g - 1) / 2));
	}
	return rec.finish();
}

VerificationReport verify_mercat(const IntRange &rr, const IntRange &gg)
{
	Recorder rec("mercat");
	for (std::int64_t r = rr.lo; r <= rr.hi; ++r) {
		for (std::int64_t g = gg.lo; g <= gg.hi; ++g) {
			if (r < 3 || g < r * r) {
				rec.skip();
				continue;
			}
			const Params p{{"r", r}, {"g", g}};
			rec.check(p, "Cliff_r < floor((g-1)/2)", clifford_index_k3({r, g}), "<",
			          Rational((g - 1) / 2));
			rec.check(p, "mercat_status", Rational(mercat_status({r, g}) ? 1 : 0), "==", 1);
		}
	}
	return rec.finish();
}

VerificationReport verify_attainment(const IntRange &rr, const IntRange &gg)
{
	Recorder rec("attainment");
	for (std::int64_t r = rr.lo; r <= rr.hi; ++r) {
		for (std::int64_t g = gg.lo; g <= gg.hi; ++g) {
			if (r < 2 || g < std::max<std::int64_t>(r * r, 6)) {
				rec.skip();
				continue;
			}
			const Params p{{"r", r}, {"g", g}};
			const LMConstruction c = lm_construction({r, g});
			rec.check(p, "construction valid", Rational(c.valid ? 1 : 0), "==", 1);
			rec.check(p, "cliff_upper = Cliff_r", c.cliff_upper, "==", clifford_index_k3({r, g}));
			rec.check(p, "Cliff of the construction", clifford_of_bundle(r, c.degree, c.h0_lower),
			          "==", c.cliff_upper);
			rec.check(p, "class admits a stable object",
			          Rational(admits_stable_object(c.chern, SurfaceK3(g)) ? 1 : 0), "==", 1);
		}
	}
	return rec.finish();
}

VerificationReport verify_corollary(const IntRange &rr, const IntRange &gg)
{
	Recorder rec("corollary");
	for (std::int64_t r = rr.lo; r <= rr.hi; ++r) {
		for (std::int64_t g = gg.lo; g <= gg.hi; ++g) {
			if (r < 2 || g < r * r || g < 3) {
				rec.skip();
				continue;
			}
			const Params p{{"r", r}, {"g", g}};
			const Rational value = clifford_index_k3({r, g});
			// Cliff + 2 > (2 - 2/g) sqrt(g-1), both sides positive
			const Rational coef = 2 - Rational(2, g);
			rec.check(p, "Cliff_r + 2 positive", value + 2, ">", 0);
			rec.check(p, "Cliff_r above corollary floor", pow2(value + 2), ">",
			          pow2(coef) * (g - 1), true);
		}
	}
	return rec.finish();
}

VerificationReport verify_delta_slack(const IntRange &rr, const IntRange &gg)
{
	Recorder rec("delta-slack");
	for (std::int64_t r = rr.lo; r <= rr.hi; ++r) {
		for (std::int64_t g = gg.lo; g <= gg.hi; ++g) {
			if (r < 1 || g < 2) {
				rec.skip();
				continue;
			}
			const SurfaceK3 s(g);
			for (std::int64_t d = 0; d <= r * (g - 1); ++d) {
				const Params p{{"r", r}, {"g", g}, {"d", d}};
				rec.check(p, "delta >= 0", Rational(slack_delta_nonnegative({r, d}, s) ? 1 : 0), "==",
				          1);
				rec.check(p, "delta < 2r/g", Rational(slack_delta_below_cap({r, d}, s) ? 1 : 0), "==",
				          1);
			}
		}
	}
	return rec.finish();
}

GridSpec SuiteInfo::resolve(const GridSpec &given) const
{
	GridSpec out;
	out.r = given.r ? given.r : r;
	out.g = given.g ? given.g : g;
	out.l = given.l ? given.l : l;
	return out;
}

namespace {

SuiteInfo make_suite(std::string name, std::string summary, std::optional<IntRange> r,
                     std::optional<IntRange> g, std::optional<IntRange> l,
                     std::function<VerificationReport(const GridSpec &)> body)
{
	SuiteInfo info{std::move(name), std::move(summary), r, g, l, nullptr};
	const SuiteInfo defaults = info;
	info.run = [defaults, body](const GridSpec &given) { return body(defaults.resolve(given)); };
	return info;
}

} // namespace

const std::vector<SuiteInfo> &suite_registry()
{
	using R = IntRange;
	static const std::vector<SuiteInfo> suites = {
	    make_suite("q-step1", "Q(5) > 0, Q((r-2)(g-1)) > 0 and negative leading coefficient",
	               R(4, 8), R(4, 100), std::nullopt,
	               [](const GridSpec &s) { return verify_Q(*s.r, *s.g); }),
	    make_suite("fs-step2", "f(s) below the linear cap for s in {0} and [1, g/(2r)]", R(3, 8),
	               R(4, 100), std::nullopt, [](const GridSpec &s) { return verify_fs(*s.r, *s.g); }),
	    make_suite("le-cap",
	               "brute-force l(E) over admissible lattice polygons vs g(r-2)+2floor(g/r)+r+2",
	               R(3, 5), R(4, 36), std::nullopt,
	               [](const GridSpec &s) { return verify_lE_cap(*s.r, *s.g); }),
	    make_suite("rank2", "two-factor polygon bound and the no-wall branch in rank 2", std::nullopt,
	               R(4, 60), std::nullopt, [](const GridSpec &s) { return verify_rank2(*s.g); }),
	    make_suite("plane-cases", "the four case inequalities behind Cliff_r = l-4 on plane curves",
	               R(1, 10), std::nullopt, R(5, 40),
	               [](const GridSpec &s) { return verify_plane(*s.l, *s.r); }),
	    make_suite("sharpness", "near-sharp examples against the closed-form h0 bound", R(2, 5),
	               R(4, 60), std::nullopt,
	               [](const GridSpec &s) { return verify_sharpness(*s.r, *s.g); }),
	    make_suite("rank2-identity", "Cliff_2 = floor((g-1)/2)", std::nullopt, R(4, 200),
	               std::nullopt, [](const GridSpec &s) { return verify_rank2_identity(*s.g); }),
	    make_suite("mercat", "Cliff_r < floor((g-1)/2) for r >= 3", R(3, 8), R(4, 200),
	               std::nullopt, [](const GridSpec &s) { return verify_mercat(*s.r, *s.g); }),
	    make_suite("attainment", "the restricted Lazarsfeld-Mukai bundle attains Cliff_r", R(2, 8),
	               R(4, 120), std::nullopt,
	               [](const GridSpec &s) { return verify_attainment(*s.r, *s.g); }),
	    make_suite("corollary", "Cliff_r > 2sqrt(g-1) - 2 - 2sqrt(g-1)/g", R(2, 6), R(4, 120),
	               std::nullopt, [](const GridSpec &s) { return verify_corollary(*s.r, *s.g); }),
	    make_suite("delta-slack", "0 <= delta < 2r/g for the triangle slack", R(1, 8), R(2, 60),
	               std::nullopt, [](const GridSpec &s) { return verify_delta_slack(*s.r, *s.g); }),
	};
	return suites;
}

const SuiteInfo *find_suite(const std::string &name)
{
	for (const auto &s : suite_registry())
		if (s.name == name)
			return &s;
	return nullptr;
}

} // namespace cliffwalls
