// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "cliffwalls/clifford.hpp"
#include "cliffwalls/hn_polygon.hpp"
#include "cliffwalls/plane_curves.hpp"
#include "cliffwalls/verifier.hpp"

#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

using namespace cliffwalls;

namespace {

struct Outcome {
	bool ok = true;
	std::int64_t checks = 0;
	std::string detail; // first failure, or a summary

	void expect(bool cond, const std::function<std::string()> &why)
	{
		++checks;
		if (!cond && ok) {
			ok = false;
			detail = why();
		}
		if (!cond)
			++failures;
	}
	std::int64_t failures = 0;
};

struct Criterion {
	int id;
	std::string name;
	double time_limit_seconds;
	std::function<Outcome()> body;
};

std::string str(const Rational &v) { return v.to_string(); }

Outcome rank2_identity()
{
	Outcome o;
	for (std::int64_t g = 4; g <= 200; ++g) {
		const Rational v = clifford_index_k3({2, g});
		o.expect(v == Rational((g - 1) / 2), [&] { return "g=" + std::to_string(g) + ": " + str(v); });
	}
	return o;
}

Outcome mercat_failure()
{
	Outcome o;
	for (std::int64_t r = 3; r <= 8; ++r)
		for (std::int64_t g = r * r; g <= 200; ++g) {
			const Rational v = clifford_index_k3({r, g});
			const Rational classical((g - 1) / 2);
			o.expect(v < classical, [&] {
				return "r=" + std::to_string(r) + " g=" + std::to_string(g) + ": Cliff_r = " + str(v) +
				       " is not < floor((g-1)/2) = " + str(classical);
			});
		}
	return o;
}

Outcome attainment()
{
	Outcome o;
	for (std::int64_t r = 2; r <= 8; ++r)
		for (std::int64_t g = std::max<std::int64_t>(r * r, 6); g <= 120; ++g) {
			const LMConstruction c = lm_construction({r, g});
			const Rational v = clifford_index_k3({r, g});
			o.expect(c.valid && c.cliff_upper == v, [&] {
				return "r=" + std::to_string(r) + " g=" + std::to_string(g) +
				       (c.valid ? "" : " invalid construction") + " cliff_upper=" + str(c.cliff_upper) +
				       " Cliff_r=" + str(v);
			});
		}
	return o;
}

// Taken literally: gap below (t^2 - k^2)/r + r/g + 3/2, with the sign as stated.
Outcome sharpness_gap()
{
	Outcome o;
	for (std::int64_t r = 2; r <= 6; ++r)
		for (std::int64_t k = 1; k <= r; ++k) {
			const std::int64_t t = std::gcd(r, k);
			for (std::int64_t g = std::max<std::int64_t>((r / t) * (r / t), 2); g <= 80; ++g) {
				const SharpExample e = sharp_example(r, k, g);
				const Rational bound = h0_closed_form_value({r, e.d}, SurfaceK3(g));
				const Rational gap = bound - e.h0;
				const Rational allowed = Rational(t * t - k * k, r) + Rational(r, g) + Rational(3, 2);
				const auto where = [&] {
					return "r=" + std::to_string(r) + " k=" + std::to_string(k) + " g=" + std::to_string(g);
				};
				o.expect(Rational(e.h0) < bound, [&] {
					return where() + ": h0 " + std::to_string(e.h0) + " not below " + str(bound);
				});
				o.expect(gap < allowed, [&] {
					return where() + ": gap " + str(gap) + " not below " + str(allowed);
				});
			}
		}
	return o;
}

Outcome corollary_floor()
{
	Outcome o;
	for (std::int64_t r = 2; r <= 6; ++r)
		for (std::int64_t g = r * r; g <= 120; ++g) {
			const Rational v = clifford_index_k3({r, g});
			o.expect(exceeds_corollary_bound(v, g), [&] {
				return "r=" + std::to_string(r) + " g=" + std::to_string(g) + ": " + str(v);
			});
		}
	return o;
}

void absorb(Outcome &o, const VerificationReport &rep)
{
	o.expect(rep.pass(), [&] { return rep.suite + ": " + rep.failures.front().describe(); });
	o.checks += rep.total - 1;
	if (o.ok)
		o.detail += (o.detail.empty() ? "" : ", ") + rep.suite + " " + std::to_string(rep.total) +
		            " checks";
}

Outcome proof_steps()
{
	Outcome o;
	absorb(o, verify_Q({4, 8}, {16, 100}));
	absorb(o, verify_fs({3, 8}, {9, 100}));
	absorb(o, verify_rank2({4, 60}));
	absorb(o, verify_plane({5, 40}, {1, 10}));
	return o;
}

Outcome polygon_oracle()
{
	Outcome o;
	for (std::int64_t r = 3; r <= 5; ++r)
		absorb(o, verify_lE_cap({r, r}, {r * r, 36}));
	return o;
}

Outcome plane_sharpness()
{
	Outcome o;
	for (std::int64_t l = 5; l <= 40; ++l) {
		const BoundReport b = h0_bound_plane(1, l, l);
		o.expect(b.value == 3, [&] { return "l=" + std::to_string(l) + ": " + str(b.value); });
		for (std::int64_t r = 1; r <= 10; ++r) {
			const PlaneClifford c = clifford_plane(r, l);
			o.expect(c.value == l - 4 && c.record.all(), [&] {
				return "l=" + std::to_string(l) + " r=" + std::to_string(r) + ": " + str(c.value);
			});
		}
	}
	return o;
}

Rational draw(std::mt19937_64 &rng, std::int64_t bound, std::int64_t max_den, bool positive)
{
	std::uniform_int_distribution<std::int64_t> num(positive ? 1 : -bound, bound);
	std::uniform_int_distribution<std::int64_t> den(1, max_den);
	return Rational(Integer(static_cast<long>(num(rng))), Integer(static_cast<long>(den(rng))));
}

Outcome random_properties()
{
	Outcome o;
	std::mt19937_64 rng(20240917);
	constexpr int kInstances = 100000;

	for (int i = 0; i < kInstances; ++i) {
		const SurfaceK3 s(std::uniform_int_distribution<std::int64_t>(2, 100)(rng));
		const ZbarPoint a{draw(rng, 500, 50, false), draw(rng, 50, 50, false)};
		const ZbarPoint b{draw(rng, 500, 50, false), draw(rng, 50, 50, false)};
		const Rational na = ns_norm_squared(a, s), nb = ns_norm_squared(b, s);
		const Rational lhs = ns_norm_squared({a.x + b.x, a.y + b.y}, s) - na - nb;
		o.expect(lhs.sign() <= 0 || pow2(lhs) <= 4 * na * nb,
		         [&] { return "norm triangle inequality at instance " + std::to_string(i); });
	}

	std::array<std::int64_t, 4> cases{}; // I/I, J/J, I/J -> I, I/J -> J
	for (int i = 0; i < kInstances; ++i) {
		const Rational a1 = draw(rng, 300, 40, false), a2 = draw(rng, 300, 40, false);
		const Rational b1 = draw(rng, 100, 40, true), b2 = draw(rng, 100, 40, true);
		const bool i1 = l_branch(a1, b1) == LBranch::I, i2 = l_branch(a2, b2) == LBranch::I;
		const bool is = l_branch(a1 + a2, b1 + b2) == LBranch::I;
		if (i1 && i2)
			++cases[0];
		else if (!i1 && !i2)
			++cases[1];
		else
			++cases[is ? 2 : 3];
		const Rational sum = L_value(a1 + a2, b1 + b2);
		const Rational parts = L_value(a1, b1) + L_value(a2, b2);
		o.expect(sum <= parts, [&] { return "L triangle inequality: " + str(sum) + " > " + str(parts); });
	}
	for (int c = 0; c < 4; ++c)
		o.expect(cases[c] > 0, [&] { return "L case combination " + std::to_string(c) + " never hit"; });

	for (int i = 0; i < kInstances; ++i) {
		const Rational a = draw(rng, 300, 40, false), b = draw(rng, 100, 40, true);
		const Rational k = draw(rng, 100, 40, true);
		o.expect(L_value(k * a, k * b) == k * L_value(a, b),
		         [&] { return "L homogeneity at a=" + str(a) + " b=" + str(b) + " k=" + str(k); });
	}

	std::uniform_int_distribution<std::int64_t> big(0, std::int64_t(1) << 62);
	for (int i = 0; i < kInstances; ++i) {
		const Rational q(Integer(static_cast<long>(big(rng))),
		                 Integer(static_cast<long>(std::uniform_int_distribution<std::int64_t>(1, 1 << 20)(rng))));
		const Integer m = floor_sqrt(q);
		o.expect(Rational(m * m) <= q && q < Rational((m + 1) * (m + 1)),
		         [&] { return "floor_sqrt(" + str(q) + ") = " + m.get_str(); });
	}
	if (o.ok)
		o.detail = "L cases I/I " + std::to_string(cases[0]) + ", J/J " + std::to_string(cases[1]) +
		           ", I/J->I " + std::to_string(cases[2]) + ", I/J->J " + std::to_string(cases[3]);
	return o;
}

std::string run_capture(const std::string &cmd)
{
	std::string out;
	FILE *pipe = popen(cmd.c_str(), "r");
	if (!pipe)
		return "<popen failed>";
	std::array<char, 4096> buf{};
	size_t n;
	while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
		out.append(buf.data(), n);
	const int status = pclose(pipe);
	return out + "\n[status " + std::to_string(status) + "]";
}

std::string slurp(const std::string &path)
{
	std::ifstream f(path, std::ios::binary);
	std::ostringstream os;
	os << f.rdbuf();
	return os.str();
}

Outcome cli_determinism()
{
	Outcome o;
	const std::string cli = CLIFFWALLS_CLI_PATH;
	const std::vector<std::string> commands = {
	    "cliff k3 --r 3 --g 9",
	    "cliff k3 --r 3 --g 9 --format json",
	    "cliff k3 --r 2 --g 5 --format csv",
	    "cliff p2 --r 4 --l 6 --format json",
	    "cliff k3 --r 3 --g 8",
	    "h0 k3 --r 1 --g 5 --d 4 --format json",
	    "h0 k3 --r 2 --g 10 --d 18",
	    "h0 p2 --r 1 --l 5 --d 5 --format csv",
	    "h0 k3 --r 2 --g 4 --d 9",
	    "plot k3 --r 2 --d 6 --g 5",
	    "plot p2 --r 1 --d 5 --l 5",
	    "verify --suite q-step1 --rmax 8 --gmax 100 --format json",
	    "verify --suite plane-cases --lmax 20",
	    "verify --suite sharpness --rmin 6 --rmax 6 --gmax 30 --format csv",
	    "suites",
	};
	for (const auto &c : commands) {
		const std::string cmd = "'" + cli + "' " + c + " 2>&1";
		const std::string first = run_capture(cmd), second = run_capture(cmd);
		o.expect(first == second, [&] { return "output differs for: " + c; });
		o.expect(first.find("<popen failed>") == std::string::npos, [&] { return "could not run: " + c; });
	}
	const std::string svg_a = "acceptance_plot_a.svg", svg_b = "acceptance_plot_b.svg";
	run_capture("'" + cli + "' plot k3 --r 3 --d 12 --g 9 --out " + svg_a);
	run_capture("'" + cli + "' plot k3 --r 3 --d 12 --g 9 --out " + svg_b);
	const std::string a = slurp(svg_a), b = slurp(svg_b);
	o.expect(!a.empty() && a == b, [&] { return "SVG files differ or are empty"; });
	std::remove(svg_a.c_str());
	std::remove(svg_b.c_str());
	if (o.ok)
		o.detail = std::to_string(commands.size() + 1) + " commands byte-identical";
	return o;
}

} // namespace

int main()
{
	const std::vector<Criterion> criteria = {
	    {1, "rank-2 identity Cliff_2 = floor((g-1)/2), g in [4,200]", 1, rank2_identity},
	    {2, "Cliff_r < floor((g-1)/2) strictly, r in [3,8], g in [r^2,200]", 1, mercat_failure},
	    {3, "construction valid and attains Cliff_r, r in [2,8], g in [max(r^2,6),120]", 1, attainment},
	    {4, "sharp examples below the bound, gap < (t^2-k^2)/r + r/g + 3/2", 2, sharpness_gap},
	    {5, "Cliff_r > 2sqrt(g-1) - 2 - 2sqrt(g-1)/g, r in [2,6], g in [r^2,120]", 1, corollary_floor},
	    {6, "proof-step suites q-step1, fs-step2, rank2, plane-cases", 30, proof_steps},
	    {7, "l(E) cap against max_convex_chain, r in [3,5], g in [r^2,36]", 300, polygon_oracle},
	    {8, "plane: h0 bound 3 at d = l and Cliff_r = l-4 with all cases verified", 1, plane_sharpness},
	    {9, "random norm, L and floor_sqrt properties (1e5 each)", 30, random_properties},
	    {10, "CLI output byte-identical across runs", 5, cli_determinism},
	};
	int failed = 0;
	for (const auto &c : criteria) {
		const auto start = std::chrono::steady_clock::now();
		Outcome o = c.body();
		const double secs =
		    std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
		const bool in_time = secs < c.time_limit_seconds;
		const bool pass = o.ok && in_time;
		failed += !pass;
		std::ostringstream line;
		line.setf(std::ios::fixed);
		line.precision(3);
		line << (pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name << " ["
		     << o.checks << " checks, " << o.failures << " failed, " << secs << " s, limit "
		     << c.time_limit_seconds << " s]";
		if (!o.ok)
			line << " first failure: " << o.detail;
		else if (!in_time)
			line << " over time limit";
		else if (!o.detail.empty())
			line << " (" << o.detail << ")";
		std::cout << line.str() << std::endl;
	}
	std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
	return failed == 0 ? 0 : 1;
}
