#include "cliffwalls/numerics.hpp"

#include <cmath>
#include <sstream>

namespace cliffwalls {

Rational::Rational(const Integer &n, const Integer &d)
{
	if (d == 0)
		throw DomainError("zero denominator");
	q_ = mpq_class(n, d);
	q_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
	std::string s(text);
	auto slash = s.find('/');
	try {
		if (slash == std::string::npos)
			return Rational(Integer(s));
		return Rational(Integer(s.substr(0, slash)), Integer(s.substr(slash + 1)));
	} catch (const std::invalid_argument &) {
		throw DomainError("not a rational: " + s);
	}
}

Integer Rational::floor() const
{
	Integer r;
	mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
	return r;
}

Integer Rational::ceil() const
{
	Integer r;
	mpz_cdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
	return r;
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(q_))); }

std::string Rational::to_string() const
{
	if (is_integer())
		return q_.get_num().get_str();
	return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::string Rational::to_decimal(int digits) const
{
	Integer scale;
	mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
	// |q| * 10^digits rounded half up, sign reattached afterwards
	mpq_class scaled = ::abs(q_) * scale;
	Integer twice = 2 * scaled.get_num() + scaled.get_den();
	Integer rounded;
	mpz_fdiv_q(rounded.get_mpz_t(), twice.get_mpz_t(), Integer(2 * scaled.get_den()).get_mpz_t());
	std::string body = rounded.get_str();
	if (digits > 0) {
		if (body.size() <= static_cast<size_t>(digits))
			body.insert(0, static_cast<size_t>(digits) + 1 - body.size(), '0');
		body.insert(body.size() - static_cast<size_t>(digits), ".");
	}
	if (sign() < 0 && rounded != 0)
		body.insert(0, "-");
	return body;
}

Rational Rational::operator-() const { return Rational(mpq_class(-q_)); }
Rational &Rational::operator+=(const Rational &o) { q_ += o.q_; return *this; }
Rational &Rational::operator-=(const Rational &o) { q_ -= o.q_; return *this; }
Rational &Rational::operator*=(const Rational &o) { q_ *= o.q_; return *this; }

Rational &Rational::operator/=(const Rational &o)
{
	if (o.is_zero())
		throw DomainError("division by zero");
	q_ /= o.q_;
	return *this;
}

Rational pow2(const Rational &x) { return x * x; }
Rational min(const Rational &a, const Rational &b) { return b < a ? b : a; }
Rational max(const Rational &a, const Rational &b) { return a < b ? b : a; }

std::int64_t floor_div(std::int64_t a, std::int64_t b)
{
	std::int64_t q = a / b;
	if ((a % b != 0) && ((a < 0) != (b < 0)))
		--q;
	return q;
}

std::int64_t to_int64(const Integer &n)
{
	if (!n.fits_slong_p())
		throw DomainError("integer does not fit in 64 bits: " + n.get_str());
	return n.get_si();
}

Integer floor_sqrt(const Rational &q)
{
	if (q.sign() < 0)
		throw DomainError("floor_sqrt of negative value " + q.to_string());
	const Integer p = q.num();
	const Integer d = q.den();
	auto fits = [&](const Integer &m) { return m * m * d <= p; };
	Integer lo = 0, hi = 1;
	while (fits(hi)) {
		lo = hi;
		hi *= 2;
	}
	// fits(lo), !fits(hi)
	while (hi - lo > 1) {
		Integer mid = (lo + hi) / 2;
		if (fits(mid))
			lo = mid;
		else
			hi = mid;
	}
	return lo;
}

Rational sqrt_lower(const Rational &q, const Integer &scale)
{
	return Rational(floor_sqrt(pow2(Rational(scale)) * q), scale);
}

Rational sqrt_upper(const Rational &q, const Integer &scale)
{
	return Rational(floor_sqrt(pow2(Rational(scale)) * q) + 1, scale);
}

bool is_perfect_square(const Rational &q)
{
	if (q.sign() < 0)
		return false;
	return mpz_perfect_square_p(q.num().get_mpz_t()) && mpz_perfect_square_p(q.den().get_mpz_t());
}

Rational exact_sqrt(const Rational &q)
{
	if (!is_perfect_square(q))
		throw DomainError("not a rational square: " + q.to_string());
	Integer n, d;
	mpz_sqrt(n.get_mpz_t(), q.num().get_mpz_t());
	mpz_sqrt(d.get_mpz_t(), q.den().get_mpz_t());
	return Rational(n, d);
}

int sign_surd(const Rational &a, const Rational &b, const Rational &p)
{
	if (p.sign() < 0)
		throw DomainError("negative radicand");
	const int sa = a.sign();
	const int sb = p.is_zero() ? 0 : b.sign();
	if (sb == 0 || sa == sb)
		return sa != 0 ? sa : sb;
	if (sa == 0)
		return sb;
	// opposite signs: compare a^2 with b^2 p
	auto o = a * a <=> b * b * p;
	if (o > 0)
		return sa;
	if (o < 0)
		return sb;
	return 0;
}

int sign_surd(const Rational &a, const Rational &b, const Rational &p,
              const Rational &c, const Rational &q)
{
	if (q.sign() < 0)
		throw DomainError("negative radicand");
	const int sx = sign_surd(a, b, p);
	const int sy = q.is_zero() ? 0 : c.sign();
	if (sy == 0 || sx == sy)
		return sx != 0 ? sx : sy;
	if (sx == 0)
		return sy;
	// |x| vs |y| with x = a + b sqrt(p), y = c sqrt(q)
	const int s = sign_surd(a * a + b * b * p - c * c * q, 2 * a * b, p);
	if (s > 0)
		return sx;
	if (s < 0)
		return sy;
	return 0;
}

Integer floor_sqrt_sum(const Rational &p, const Rational &q)
{
	// floor(sqrt p) + floor(sqrt q) <= result <= that + 1
	Integer k = floor_sqrt(p) + floor_sqrt(q) + 1;
	if (sign_surd(Rational(-k), 1, p, 1, q) >= 0)
		return k;
	return k - 1;
}

Surd::Surd(Rational a_, Rational b_, Rational radicand_)
    : a(std::move(a_)), b(std::move(b_)), radicand(std::move(radicand_))
{
	if (radicand.sign() < 0)
		throw DomainError("negative radicand");
	if (is_perfect_square(radicand)) {
		a += b * exact_sqrt(radicand);
		b = 0;
		radicand = 0;
	}
}

double Surd::to_double() const
{
	return a.to_double() + b.to_double() * std::sqrt(radicand.to_double());
}

std::string Surd::to_string() const
{
	if (b.is_zero())
		return a.to_string();
	std::ostringstream os;
	os << a << (b.sign() < 0 ? " - " : " + ") << b.abs() << "*sqrt(" << radicand << ")";
	return os.str();
}

static std::strong_ordering from_sign(int s)
{
	return s < 0 ? std::strong_ordering::less
	             : s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

std::strong_ordering compare(const Surd &x, const Surd &y)
{
	return from_sign(sign_surd(x.a - y.a, x.b, x.radicand, -y.b, y.radicand));
}

std::strong_ordering compare(const Surd &x, const Rational &y)
{
	return from_sign(sign_surd(x.a - y, x.b, x.radicand));
}

QuadraticRoot::QuadraticRoot(Rational a, Rational b, Rational c, Branch branch)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), branch_(branch)
{
	if (a_.is_zero())
		throw DomainError("quadratic root needs a != 0");
	const Rational disc = discriminant();
	if (disc.sign() < 0)
		throw DomainError("quadratic has no real root");
	const Rational mid = -b_ / (2 * a_);
	if (disc.is_zero()) {
		// both branches name the vertex; keep the intervals ordered
		lo_ = branch_ == Branch::Lower ? mid - 1 : mid;
		hi_ = branch_ == Branch::Lower ? mid : mid + 1;
		return;
	}
	// the vertex separates the two roots; the half width overestimates sqrt(disc)/(2|a|)
	const Rational half = Rational(floor_sqrt(disc) + 1) / (2 * a_.abs());
	if (branch_ == Branch::Lower) {
		lo_ = mid - half;
		hi_ = mid;
	} else {
		lo_ = mid;
		hi_ = mid + half;
	}
}

Surd QuadraticRoot::as_surd() const
{
	const Rational mid = -b_ / (2 * a_);
	const Rational coef = Rational(branch_ == Branch::Upper ? 1 : -1) / (2 * a_.abs());
	return Surd(mid, coef, discriminant());
}

std::strong_ordering compare_root(const QuadraticRoot &r, const Rational &x)
{
	if (r.discriminant().is_zero())
		return -r.b() / (2 * r.a()) <=> x;
	if (x <= r.lo())
		return std::strong_ordering::greater;
	if (x >= r.hi())
		return std::strong_ordering::less;
	const int sx = r.evaluate(x).sign();
	if (sx == 0)
		return std::strong_ordering::equal;
	// the only sign change inside (lo, hi) is at the root
	if (sx == r.evaluate(r.lo()).sign())
		return std::strong_ordering::greater;
	return std::strong_ordering::less;
}

Abscissa make_root(const Rational &a, const Rational &b, const Rational &c, Branch branch)
{
	QuadraticRoot root(a, b, c, branch);
	const Rational disc = root.discriminant();
	if (is_perfect_square(disc)) {
		Surd s = root.as_surd();
		return s.a;
	}
	return root;
}

Surd as_surd(const Abscissa &x)
{
	if (const auto *q = std::get_if<Rational>(&x))
		return Surd(*q);
	return std::get<QuadraticRoot>(x).as_surd();
}

std::strong_ordering compare(const Abscissa &x, const Abscissa &y)
{
	if (const auto *qy = std::get_if<Rational>(&y))
		return compare(x, *qy);
	return compare(as_surd(x), as_surd(y));
}

std::strong_ordering compare(const Abscissa &x, const Rational &y)
{
	if (const auto *qx = std::get_if<Rational>(&x))
		return *qx <=> y;
	return compare_root(std::get<QuadraticRoot>(x), y);
}

double to_double(const Abscissa &x) { return as_surd(x).to_double(); }

std::string to_string(const Abscissa &x) { return as_surd(x).to_string(); }

} // namespace cliffwalls
