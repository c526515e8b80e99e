// Command-line front end: Clifford indices, h0 bounds, plots and verification suites.

#include "cliffwalls/clifford.hpp"
#include "cliffwalls/hn_polygon.hpp"
#include "cliffwalls/plane_curves.hpp"
#include "cliffwalls/verifier.hpp"
#include "cliffwalls/walls.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using namespace cliffwalls;
using nlohmann::json;

namespace {

constexpr const char *kSchema = "cliff-walls/1";

enum ExitCode { kOk = 0, kHypothesis = 1, kVerificationFailed = 2, kIo = 3 };

struct IoError : std::runtime_error {
	using std::runtime_error::runtime_error;
};

struct Options {
	std::string surface = "k3";
	std::int64_t r = 0;
	std::optional<std::int64_t> g, l, d;
	std::string format = "table";
	int precision = 6;
	std::string out;
};

void emit(const Options &opt, const std::string &text)
{
	if (opt.out.empty()) {
		std::cout << text;
		return;
	}
	std::ofstream f(opt.out, std::ios::binary);
	if (!f)
		throw IoError("cannot open " + opt.out + " for writing");
	f << text;
	if (!f)
		throw IoError("write to " + opt.out + " failed");
}

json exact(const Rational &v)
{
	return {{"num", v.num().get_str()}, {"den", v.den().get_str()}};
}

// num/den as JSON integers when they fit, strings otherwise
json integer_json(const Integer &n)
{
	if (n.fits_slong_p())
		return n.get_si();
	return n.get_str();
}

std::string csv_line(const std::vector<std::string> &cells)
{
	std::string out;
	for (size_t i = 0; i < cells.size(); ++i) {
		if (i)
			out += ',';
		const bool quote = cells[i].find_first_of(",\"\n") != std::string::npos;
		if (!quote) {
			out += cells[i];
			continue;
		}
		out += '"';
		for (char c : cells[i])
			out += c == '"' ? std::string("\"\"") : std::string(1, c);
		out += '"';
	}
	return out + "\n";
}

// Two-column key/value table, keys padded to the widest.
std::string kv_table(const std::vector<std::pair<std::string, std::string>> &rows)
{
	size_t width = 0;
	for (const auto &[k, v] : rows)
		width = std::max(width, k.size());
	std::string out;
	for (const auto &[k, v] : rows)
		out += k + std::string(width - k.size() + 2, ' ') + v + "\n";
	return out;
}

std::int64_t need(const std::optional<std::int64_t> &v, const char *flag)
{
	if (!v)
		throw CLI::RequiredError(flag);
	return *v;
}

// ---------------------------------------------------------------- cliff

std::string cmd_cliff(const Options &opt)
{
	json params = {{"r", opt.r}};
	Rational value;
	bool valid = true;
	std::string provenance, note;
	if (opt.surface == "k3") {
		const std::int64_t g = need(opt.g, "--g");
		params["g"] = g;
		value = clifford_index_k3({opt.r, g});
		if (opt.r == 1) {
			provenance = "k3-rank-one";
		} else {
			provenance = "k3-closed-form";
			const LMConstruction c = lm_construction({opt.r, g});
			valid = c.valid;
			if (!c.genus_in_range)
				note = "construction unavailable at this genus";
			else if (!c.inequality_holds)
				note = "construction inequality fails";
		}
	} else {
		const std::int64_t l = need(opt.l, "--l");
		params["l"] = l;
		const PlaneClifford c = clifford_plane(opt.r, l);
		value = c.value;
		valid = c.record.all();
		provenance = "plane-clifford-index";
		if (!valid)
			note = "case verification failed";
	}

	if (opt.format == "json") {
		json j = {{"schema", kSchema},       {"surface", opt.surface},
		          {"params", params},        {"value_num", integer_json(value.num())},
		          {"value_den", integer_json(value.den())}, {"valid", valid},
		          {"provenance", provenance}, {"decimal", value.to_decimal(opt.precision)}};
		if (!note.empty())
			j["note"] = note;
		return j.dump(2) + "\n";
	}
	const std::string second = opt.surface == "k3" ? "g" : "l";
	const std::string second_value = std::to_string(params[second].get<std::int64_t>());
	if (opt.format == "csv")
		return csv_line({"surface", "r", second, "value_num", "value_den", "decimal", "valid",
		                 "provenance", "note"}) +
		       csv_line({opt.surface, std::to_string(opt.r), second_value, value.num().get_str(),
		                 value.den().get_str(), value.to_decimal(opt.precision),
		                 valid ? "true" : "false", provenance, note});
	std::vector<std::pair<std::string, std::string>> rows = {
	    {"surface", opt.surface},
	    {"r", std::to_string(opt.r)},
	    {second, second_value},
	    {"Cliff_r", value.to_string()},
	    {"decimal", value.to_decimal(opt.precision)},
	    {"valid", valid ? "true" : "false"},
	    {"provenance", provenance}};
	if (!note.empty())
		rows.emplace_back("note", note);
	return kv_table(rows);
}

// ---------------------------------------------------------------- h0

std::string cmd_h0(const Options &opt)
{
	const std::int64_t d = need(opt.d, "--d");
	json params = {{"r", opt.r}, {"d", d}};
	BoundReport rep;
	std::string second;
	if (opt.surface == "k3") {
		const std::int64_t g = need(opt.g, "--g");
		params["g"] = g;
		second = "g";
		rep = h0_closed_form_bound({opt.r, d}, SurfaceK3(g));
	} else {
		const std::int64_t l = need(opt.l, "--l");
		params["l"] = l;
		second = "l";
		rep = h0_bound_plane(opt.r, d, l);
	}
	const std::string relation = rep.strict ? "<" : "<=";
	const std::string second_value = std::to_string(params[second].get<std::int64_t>());

	if (opt.format == "json") {
		json j = {{"schema", kSchema},
		          {"surface", opt.surface},
		          {"params", params},
		          {"value_num", integer_json(rep.value.num())},
		          {"value_den", integer_json(rep.value.den())},
		          {"decimal", rep.value.to_decimal(opt.precision)},
		          {"strict", rep.strict},
		          {"cap", integer_json(rep.cap())},
		          {"valid", true},
		          {"provenance", rep.provenance}};
		if (rep.sharper_enclosure)
			j["triangle_enclosure"] = exact(*rep.sharper_enclosure);
		if (rep.slack_delta)
			j["slack_delta_enclosure"] = exact(*rep.slack_delta);
		return j.dump(2) + "\n";
	}
	if (opt.format == "csv")
		return csv_line({"surface", "r", second, "d", "value_num", "value_den", "decimal", "strict",
		                 "cap", "provenance"}) +
		       csv_line({opt.surface, std::to_string(opt.r), second_value, std::to_string(d),
		                 rep.value.num().get_str(), rep.value.den().get_str(),
		                 rep.value.to_decimal(opt.precision), rep.strict ? "true" : "false",
		                 rep.cap().get_str(), rep.provenance});
	std::vector<std::pair<std::string, std::string>> rows = {
	    {"surface", opt.surface},
	    {"r", std::to_string(opt.r)},
	    {second, second_value},
	    {"d", std::to_string(d)},
	    {"bound", "h0 " + relation + " " + rep.value.to_string()},
	    {"decimal", rep.value.to_decimal(opt.precision)},
	    {"cap", rep.cap().get_str()},
	    {"provenance", rep.provenance}};
	if (rep.sharper_enclosure)
		rows.emplace_back("triangle", "h0 <= " + rep.sharper_enclosure->to_decimal(opt.precision));
	if (rep.slack_delta)
		rows.emplace_back("delta", "<= " + rep.slack_delta->to_decimal(opt.precision));
	return kv_table(rows);
}

// ---------------------------------------------------------------- plot

// Affine map from a rational box onto a pixel panel, y pointing up.
struct Panel {
	Rational x0, x1, y0, y1;
	Rational left, top, width, height;

	Rational px(const Rational &x) const { return left + (x - x0) / (x1 - x0) * width; }
	Rational py(const Rational &y) const { return top + (y1 - y) / (y1 - y0) * height; }
};

std::string coord(const Rational &v) { return v.to_decimal(6); }

std::string data_attr(const std::string &name, const Rational &v)
{
	return " data-" + name + "-num=\"" + v.num().get_str() + "\" data-" + name + "-den=\"" +
	       v.den().get_str() + "\"";
}

std::string axes(const Panel &p)
{
	std::ostringstream os;
	const Rational zero_y = min(max(Rational(0), p.y0), p.y1);
	const Rational zero_x = min(max(Rational(0), p.x0), p.x1);
	os << "  <line class=\"axis-x\" x1=\"" << coord(p.px(p.x0)) << "\" y1=\"" << coord(p.py(zero_y))
	   << "\" x2=\"" << coord(p.px(p.x1)) << "\" y2=\"" << coord(p.py(zero_y))
	   << "\" stroke=\"#888\"/>\n";
	os << "  <line class=\"axis-y\" x1=\"" << coord(p.px(zero_x)) << "\" y1=\"" << coord(p.py(p.y0))
	   << "\" x2=\"" << coord(p.px(zero_x)) << "\" y2=\"" << coord(p.py(p.y1))
	   << "\" stroke=\"#888\"/>\n";
	return os.str();
}

std::string cmd_plot(const Options &opt)
{
	const std::int64_t d = need(opt.d, "--d");
	const bool k3 = opt.surface == "k3";
	std::int64_t second = 0;
	Rational beta_lo, beta_hi;
	Triangle tri;
	std::function<Rational(const Rational &)> curve;
	// left/right limits of the curve at an integer
	std::function<Rational(const Rational &)> curve_limit;
	if (k3) {
		second = need(opt.g, "--g");
		const SurfaceK3 s(second);
		const BetaBounds b = first_wall_beta_bounds({opt.r, d}, s);
		beta_lo = b.beta1_min;
		beta_hi = b.beta2_max;
		tri = bounding_triangle({opt.r, d}, s);
		curve = [s](const Rational &x) { return gamma_value(x, s); };
		curve_limit = [s](const Rational &n) { return gamma_value(n, s) - 1; };
	} else {
		second = need(opt.l, "--l");
		if (opt.r < 1 || second < 1 || d < 0)
			throw HypothesisError("r >= 1, l >= 1 and d >= 0 required");
		const PlaneWallBetas b = plane_first_wall_betas(opt.r, d, second);
		beta_lo = b.beta1_min;
		beta_hi = b.beta2_max;
		const ChernCharacter v = pushforward_class_p2(opt.r, d, second);
		tri = {{0, 0}, plane_triangle_apex(opt.r, d, second), zbar(v)};
		curve = [](const Rational &x) { return gamma_tilde(x); };
		curve_limit = [](const Rational &n) { return n * n / 2 - 1; };
	}

	const Integer cell_lo = min(Rational(-1), beta_lo).floor();
	const Integer cell_hi = max(Rational(1), beta_hi).ceil();
	constexpr int kSamples = 32;

	// curve samples per unit cell, with the open ends at the one-sided limit
	std::vector<std::vector<std::pair<Rational, Rational>>> cells;
	Rational a_lo = 0, a_hi = 0;
	for (Integer n = cell_lo; n < cell_hi; ++n) {
		std::vector<std::pair<Rational, Rational>> pts;
		for (int k = 0; k <= kSamples; ++k) {
			const Rational x = Rational(n) + Rational(k, kSamples);
			const Rational y = (k == 0 || k == kSamples) ? curve_limit(x) : curve(x);
			a_lo = min(a_lo, y);
			a_hi = max(a_hi, y);
			pts.emplace_back(x, y);
		}
		cells.push_back(std::move(pts));
	}
	for (Integer n = cell_lo; n <= cell_hi; ++n)
		a_hi = max(a_hi, curve(Rational(n)));
	a_lo -= 1;
	a_hi += 1;

	const Panel slice{Rational(cell_lo), Rational(cell_hi), a_lo, a_hi, 40, 40, 400, 300};
	Rational zx_lo = min(min(Rational(0), tri.apex.x), tri.q.x) - 1;
	Rational zx_hi = max(max(Rational(0), tri.apex.x), tri.q.x) + 1;
	Rational zy_lo = min(min(Rational(0), tri.apex.y), tri.q.y) - 1;
	Rational zy_hi = max(max(Rational(0), tri.apex.y), tri.q.y) + 1;
	const Panel plane{zx_lo, zx_hi, zy_lo, zy_hi, 520, 40, 400, 300};

	std::ostringstream os;
	const std::string second_name = k3 ? "g" : "l";
	os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
	os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"960\" height=\"380\""
	   << " data-surface=\"" << opt.surface << "\" data-r=\"" << opt.r << "\" data-d=\"" << d
	   << "\" data-" << second_name << "=\"" << second << "\">\n";
	os << " <g id=\"slice-panel\">\n";
	os << axes(slice);
	const Rational band_l = slice.px(beta_lo), band_r = slice.px(beta_hi);
	os << "  <rect class=\"wall-band\" x=\"" << coord(band_l) << "\" y=\"" << coord(slice.top)
	   << "\" width=\"" << coord(band_r - band_l) << "\" height=\"" << coord(slice.height)
	   << "\" fill=\"#4a90d9\" fill-opacity=\"0.2\"" << data_attr("beta1", beta_lo)
	   << data_attr("beta2", beta_hi) << "/>\n";
	const std::string path_class = k3 ? "gamma-path" : "gamma-tilde-path";
	Integer n = cell_lo;
	for (const auto &pts : cells) {
		os << "  <path class=\"" << path_class << "\" data-cell=\"" << n.get_str() << "\" d=\"";
		for (size_t i = 0; i < pts.size(); ++i)
			os << (i ? " L" : "M") << coord(slice.px(pts[i].first)) << ","
			   << coord(slice.py(pts[i].second));
		os << "\" fill=\"none\" stroke=\"#222\"/>\n";
		++n;
	}
	// the jump at each interior integer
	for (Integer m = cell_lo; m <= cell_hi; ++m) {
		const Rational x(m);
		os << "  <line class=\"gamma-jump\" x1=\"" << coord(slice.px(x)) << "\" y1=\""
		   << coord(slice.py(curve_limit(x))) << "\" x2=\"" << coord(slice.px(x)) << "\" y2=\""
		   << coord(slice.py(curve(x))) << "\" stroke=\"#222\" stroke-dasharray=\"2,2\"/>\n";
	}
	os << " </g>\n";
	os << " <g id=\"zbar-panel\">\n";
	os << axes(plane);
	os << "  <polygon class=\"triangle\" points=\"";
	const ZbarPoint corners[3] = {tri.o, tri.apex, tri.q};
	for (int i = 0; i < 3; ++i)
		os << (i ? " " : "") << coord(plane.px(corners[i].x)) << "," << coord(plane.py(corners[i].y));
	os << "\" fill=\"#d94a4a\" fill-opacity=\"0.2\" stroke=\"#d94a4a\""
	   << data_attr("apex-x", tri.apex.x) << data_attr("apex-y", tri.apex.y)
	   << data_attr("q-x", tri.q.x) << data_attr("q-y", tri.q.y) << "/>\n";
	os << " </g>\n";
	os << "</svg>\n";
	return os.str();
}

// ---------------------------------------------------------------- verify

json report_json(const VerificationReport &rep)
{
	json failures = json::array();
	for (const auto &f : rep.failures) {
		json params = json::object();
		for (const auto &[k, v] : f.params)
			params[k] = v;
		failures.push_back({{"params", params},
		                    {"check", f.check},
		                    {"lhs", exact(f.lhs)},
		                    {"rhs", exact(f.rhs)},
		                    {"relation", f.relation},
		                    {"squared", f.squared}});
	}
	return {{"schema", kSchema},
	        {"suite", rep.suite},
	        {"total", rep.total},
	        {"skipped", rep.skipped},
	        {"passed", rep.passed()},
	        {"pass", rep.pass()},
	        {"failures", failures},
	        {"notes", rep.notes}};
}

std::string cmd_verify(const Options &opt, const VerificationReport &rep)
{
	if (opt.format == "json")
		return report_json(rep).dump(2) + "\n";
	if (opt.format == "csv") {
		std::string out = csv_line({"suite", "params", "check", "lhs", "relation", "rhs", "squared"});
		for (const auto &f : rep.failures) {
			std::string params;
			for (const auto &[k, v] : f.params)
				params += (params.empty() ? "" : " ") + k + "=" + std::to_string(v);
			out += csv_line({rep.suite, params, f.check, f.lhs.to_string(), f.relation,
			                 f.rhs.to_string(), f.squared ? "true" : "false"});
		}
		return out;
	}
	std::string out = kv_table({{"suite", rep.suite},
	                            {"checks", std::to_string(rep.total)},
	                            {"passed", std::to_string(rep.passed())},
	                            {"failed", std::to_string(rep.failures.size())},
	                            {"skipped", std::to_string(rep.skipped)},
	                            {"result", rep.pass() ? "PASS" : "FAIL"}});
	for (const auto &f : rep.failures)
		out += "  " + f.describe() + "\n";
	for (const auto &n : rep.notes)
		out += "  note: " + n + "\n";
	return out;
}

} // namespace

int main(int argc, char **argv)
{
	CLI::App app{"Clifford indices and h0 bounds of curves on K3 surfaces and the plane"};
	app.require_subcommand(1);
	Options opt;

	auto add_common = [&](CLI::App *sub, std::vector<std::string> formats) {
		sub->add_option("--format", opt.format, "output format")
		    ->check(CLI::IsMember(formats))
		    ->capture_default_str();
		sub->add_option("--precision", opt.precision, "decimal digits for display")
		    ->check(CLI::Range(0, 60))
		    ->capture_default_str();
		sub->add_option("--out", opt.out, "write to this file instead of stdout");
	};
	auto add_surface = [&](CLI::App *sub, bool with_d) {
		sub->add_option("surface", opt.surface, "k3 or p2")->check(CLI::IsMember({"k3", "p2"}))->required();
		sub->add_option("--r", opt.r, "rank")->required();
		sub->add_option("--g", opt.g, "genus (k3)");
		sub->add_option("--l", opt.l, "curve degree (p2)");
		if (with_d)
			sub->add_option("--d", opt.d, "degree")->required();
	};

	CLI::App *cliff = app.add_subcommand("cliff", "rank r Clifford index");
	add_surface(cliff, false);
	add_common(cliff, {"table", "json", "csv"});

	CLI::App *h0 = app.add_subcommand("h0", "upper bound for h0 of a semistable bundle");
	add_surface(h0, true);
	add_common(h0, {"table", "json", "csv"});

	CLI::App *plot = app.add_subcommand("plot", "SVG of Gamma, the first-wall band and the triangle");
	add_surface(plot, true);
	std::string plot_format = "svg";
	plot->add_option("--out", opt.out, "SVG file (stdout if omitted)");
	plot->add_option("--format", plot_format, "only svg")->check(CLI::IsMember({"svg"}));

	std::vector<std::string> suite_names;
	for (const auto &s : suite_registry())
		suite_names.push_back(s.name);
	std::string suite_name;
	std::optional<std::int64_t> rmin, rmax, gmin, gmax, lmin, lmax;
	bool timing = false;
	CLI::App *verify = app.add_subcommand("verify", "run a verification suite");
	verify->add_option("--suite", suite_name, "suite name")->required()->check(CLI::IsMember(suite_names));
	verify->add_option("--rmin", rmin);
	verify->add_option("--rmax", rmax);
	verify->add_option("--gmin", gmin);
	verify->add_option("--gmax", gmax);
	verify->add_option("--lmin", lmin);
	verify->add_option("--lmax", lmax);
	verify->add_flag("--timing", timing, "print elapsed time to stderr");
	add_common(verify, {"table", "json", "csv"});

	CLI::App *suites = app.add_subcommand("suites", "list verification suites");

	try {
		app.parse(argc, argv);
	} catch (const CLI::ParseError &e) {
		// usage errors share the invalid-input code; --help stays 0
		return app.exit(e) == 0 ? kOk : kHypothesis;
	}

	try {
		std::string text;
		int code = kOk;
		if (cliff->parsed()) {
			text = cmd_cliff(opt);
		} else if (h0->parsed()) {
			text = cmd_h0(opt);
		} else if (plot->parsed()) {
			text = cmd_plot(opt);
		} else if (suites->parsed()) {
			for (const auto &s : suite_registry())
				text += s.name + std::string(16 - std::min<size_t>(15, s.name.size()), ' ') + s.summary + "\n";
		} else {
			const SuiteInfo &suite = *find_suite(suite_name);
			auto range = [](const std::optional<IntRange> &def, std::optional<std::int64_t> lo,
			                std::optional<std::int64_t> hi) -> std::optional<IntRange> {
				if (!lo && !hi)
					return std::nullopt;
				const std::int64_t a = lo ? *lo : def ? def->lo : *hi;
				const std::int64_t b = hi ? *hi : def ? def->hi : *lo;
				return IntRange(a, b);
			};
			GridSpec grid;
			grid.r = range(suite.r, rmin, rmax);
			grid.g = range(suite.g, gmin, gmax);
			grid.l = range(suite.l, lmin, lmax);
			const VerificationReport rep = suite.run(grid);
			if (timing)
				std::cerr << "elapsed " << rep.elapsed_seconds << " s\n";
			text = cmd_verify(opt, rep);
			code = rep.pass() ? kOk : kVerificationFailed;
		}
		emit(opt, text);
		return code;
	} catch (const CLI::ParseError &e) {
		return app.exit(e) == 0 ? kOk : kHypothesis;
	} catch (const HypothesisError &e) {
		std::cerr << "error: " << e.what() << "\n";
		return kHypothesis;
	} catch (const DomainError &e) {
		std::cerr << "error: " << e.what() << "\n";
		return kHypothesis;
	} catch (const IoError &e) {
		std::cerr << "error: " << e.what() << "\n";
		return kIo;
	}
}
