#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace cliffwalls {

using Integer = mpz_class;

// Input outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
	using std::domain_error::domain_error;
};

// A theorem hypothesis (g >= r^2, l >= 5, ...) does not hold.
class HypothesisError : public std::out_of_range {
public:
	using std::out_of_range::out_of_range;
};

class Rational {
public:
	Rational() = default;

	template <std::integral T>
	Rational(T n) : q_(static_cast<long>(n)) {}

	Rational(const Integer &n) : q_(n) {}
	// unevaluated gmpxx expressions such as `k + 1` or `-k`
	template <class T, class U>
	Rational(const __gmp_expr<T, U> &e) : q_(e) {}
	Rational(const Integer &n, const Integer &d);

	// "p", "-p" or "p/q"
	static Rational parse(std::string_view text);

	Integer num() const { return q_.get_num(); }
	Integer den() const { return q_.get_den(); }

	int sign() const { return sgn(q_); }
	bool is_zero() const { return sign() == 0; }
	bool is_integer() const { return q_.get_den() == 1; }

	Integer floor() const;
	Integer ceil() const;
	Rational abs() const;

	std::string to_string() const;
	// round half away from zero to `digits` decimals, computed exactly
	std::string to_decimal(int digits) const;
	double to_double() const { return q_.get_d(); }

	Rational operator-() const;
	Rational &operator+=(const Rational &o);
	Rational &operator-=(const Rational &o);
	Rational &operator*=(const Rational &o);
	Rational &operator/=(const Rational &o);

	friend Rational operator+(Rational a, const Rational &b) { return a += b; }
	friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
	friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
	friend Rational operator/(Rational a, const Rational &b) { return a /= b; }

	friend bool operator==(const Rational &a, const Rational &b) { return cmp(a.q_, b.q_) == 0; }
	friend std::strong_ordering operator<=>(const Rational &a, const Rational &b)
	{
		return cmp(a.q_, b.q_) <=> 0;
	}

	friend std::ostream &operator<<(std::ostream &os, const Rational &r) { return os << r.to_string(); }

	const mpq_class &raw() const { return q_; }

private:
	explicit Rational(mpq_class q) : q_(std::move(q)) {}
	mpq_class q_;
};

Rational pow2(const Rational &x);
Rational min(const Rational &a, const Rational &b);
Rational max(const Rational &a, const Rational &b);

// Integer floor division with the quotient rounded towards -infinity.
std::int64_t floor_div(std::int64_t a, std::int64_t b);
std::int64_t to_int64(const Integer &n);

// Largest m >= 0 with m^2 <= q, by integer bisection on m^2 * den <= num.
Integer floor_sqrt(const Rational &q);

// Rational bounds on sqrt(q) with denominator `scale`:
// sqrt_lower <= sqrt(q) < sqrt_upper.
Rational sqrt_lower(const Rational &q, const Integer &scale);
Rational sqrt_upper(const Rational &q, const Integer &scale);

bool is_perfect_square(const Rational &q);
// exact square root of a perfect-square rational
Rational exact_sqrt(const Rational &q);

// sign(a + b*sqrt(p)) for p >= 0
int sign_surd(const Rational &a, const Rational &b, const Rational &p);
// sign(a + b*sqrt(p) + c*sqrt(q)) for p, q >= 0
int sign_surd(const Rational &a, const Rational &b, const Rational &p,
              const Rational &c, const Rational &q);

// floor(sqrt(p) + sqrt(q)), exact
Integer floor_sqrt_sum(const Rational &p, const Rational &q);

// a + b*sqrt(radicand), radicand >= 0
struct Surd {
	Rational a;
	Rational b;
	Rational radicand;

	Surd(Rational rational = 0) : a(std::move(rational)) {}
	Surd(Rational a_, Rational b_, Rational radicand_);

	int sign() const { return sign_surd(a, b, radicand); }
	double to_double() const;
	std::string to_string() const;
};

std::strong_ordering compare(const Surd &x, const Surd &y);
std::strong_ordering compare(const Surd &x, const Rational &y);

// Lower is the smaller root whatever the sign of the leading coefficient.
enum class Branch { Lower, Upper };

// One real root of a*t^2 + b*t + c with a != 0, together with an interval
// (lo, hi) containing it and no other root.
class QuadraticRoot {
public:
	QuadraticRoot(Rational a, Rational b, Rational c, Branch branch);

	const Rational &a() const { return a_; }
	const Rational &b() const { return b_; }
	const Rational &c() const { return c_; }
	Branch branch() const { return branch_; }
	const Rational &lo() const { return lo_; }
	const Rational &hi() const { return hi_; }
	Rational discriminant() const { return b_ * b_ - 4 * a_ * c_; }

	Rational evaluate(const Rational &t) const { return (a_ * t + b_) * t + c_; }
	Surd as_surd() const;
	double to_double() const { return as_surd().to_double(); }

private:
	Rational a_, b_, c_;
	Branch branch_;
	Rational lo_, hi_;
};

std::strong_ordering compare_root(const QuadraticRoot &r, const Rational &x);

// A real number that is either rational or a quadratic root.
using Abscissa = std::variant<Rational, QuadraticRoot>;

// The requested root, collapsed to a Rational when the discriminant is a
// rational square.
Abscissa make_root(const Rational &a, const Rational &b, const Rational &c, Branch branch);

Surd as_surd(const Abscissa &x);
std::strong_ordering compare(const Abscissa &x, const Abscissa &y);
std::strong_ordering compare(const Abscissa &x, const Rational &y);
double to_double(const Abscissa &x);
std::string to_string(const Abscissa &x);

} // namespace cliffwalls
