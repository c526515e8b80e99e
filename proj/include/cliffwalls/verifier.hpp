#pragma once

#include "cliffwalls/numerics.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cliffwalls {

struct IntRange {
	std::int64_t lo;
	std::int64_t hi;

	IntRange(std::int64_t lo_, std::int64_t hi_);
	bool contains(std::int64_t v) const { return lo <= v && v <= hi; }
};

// Unset ranges fall back to the suite defaults.
struct GridSpec {
	std::optional<IntRange> r;
	std::optional<IntRange> g;
	std::optional<IntRange> l;
};

struct Failure {
	std::vector<std::pair<std::string, std::int64_t>> params;
	std::string check;
	Rational lhs;
	Rational rhs;
	std::string relation;
	bool squared = false; // both sides were squared to clear a root

	std::string describe() const;
};

struct VerificationReport {
	std::string suite;
	std::int64_t total = 0;   // checks evaluated
	std::int64_t skipped = 0; // parameter tuples outside the hypotheses
	std::vector<Failure> failures;
	std::vector<std::string> notes;
	double elapsed_seconds = 0;

	bool pass() const { return failures.empty(); }
	std::int64_t passed() const { return total - static_cast<std::int64_t>(failures.size()); }
};

VerificationReport verify_Q(const IntRange &r, const IntRange &g);
VerificationReport verify_fs(const IntRange &r, const IntRange &g);
VerificationReport verify_lE_cap(const IntRange &r, const IntRange &g);
VerificationReport verify_rank2(const IntRange &g);
VerificationReport verify_plane(const IntRange &l, const IntRange &r);
// gap <= |t^2 - k^2|/r + r/g + slack, plus the exact decomposition of the gap
VerificationReport verify_sharpness(const IntRange &r, const IntRange &g,
                                    const Rational &slack = 1);

VerificationReport verify_rank2_identity(const IntRange &g);
VerificationReport verify_mercat(const IntRange &r, const IntRange &g);
VerificationReport verify_attainment(const IntRange &r, const IntRange &g);
VerificationReport verify_corollary(const IntRange &r, const IntRange &g);
VerificationReport verify_delta_slack(const IntRange &r, const IntRange &g);

struct SuiteInfo {
	std::string name;
	std::string summary;
	// default ranges; unset means the suite ignores that parameter
	std::optional<IntRange> r;
	std::optional<IntRange> g;
	std::optional<IntRange> l;
	std::function<VerificationReport(const GridSpec &)> run;

	// fill unset ranges from the defaults
	GridSpec resolve(const GridSpec &given) const;
};

const std::vector<SuiteInfo> &suite_registry();
const SuiteInfo *find_suite(const std::string &name);

} // namespace cliffwalls
