#pragma once

#include "trinomial/rational.hpp"

#include <utility>

namespace trinomial {

// Element p + q*s of the quadratic extension Q(sqrt(c)), with s^2 = c.
// The radicand is kept symbolic even when c is a perfect square; value
// equality still sees through it (see operator==). Elements over different
// radicands must never be combined; doing so throws std::domain_error.
class QuadExt {
public:
    QuadExt() = default;
    QuadExt(Rational p, Rational q, Rational radicand)
        : p_(std::move(p)), q_(std::move(q)), c_(std::move(radicand)) {}

    static QuadExt from_rational(Rational value, Rational radicand) {
        return QuadExt(std::move(value), 0, std::move(radicand));
    }
    static QuadExt zero(Rational radicand) { return from_rational(0, std::move(radicand)); }
    static QuadExt one(Rational radicand) { return from_rational(1, std::move(radicand)); }
    // The generator s itself, 0 + 1*s.
    static QuadExt sqrt_radicand(Rational radicand) { return QuadExt(0, 1, std::move(radicand)); }

    const Rational& rational_part() const { return p_; }
    const Rational& radical_part() const { return q_; }
    const Rational& radicand() const { return c_; }

    // Value tests; these collapse q*sqrt(c) into the rationals when c is a
    // perfect square, so e.g. -1/4 + (1/256)*sqrt(16) compares equal to -15/64.
    bool is_zero() const;
    bool is_rational_value() const;
    // (p + q*t, 0) when c = t^2 with rational t >= 0, else (p, q) unchanged.
    std::pair<Rational, Rational> canonical() const;

    QuadExt conjugate() const { return QuadExt(p_, -q_, c_); }
    // N(p + q s) = p^2 - q^2 c; zero exactly when the element or its
    // conjugate has value zero.
    Rational field_norm() const { return p_ * p_ - q_ * q_ * c_; }

    // Throws std::domain_error when field_norm() == 0.
    QuadExt inverse() const;

    QuadExt& operator+=(const QuadExt& o);
    QuadExt& operator-=(const QuadExt& o);
    QuadExt& operator*=(const QuadExt& o);
    QuadExt& operator/=(const QuadExt& o);

    QuadExt& operator+=(const Rational& o);
    QuadExt& operator-=(const Rational& o);
    QuadExt& operator*=(const Rational& o);
    QuadExt& operator/=(const Rational& o);

    QuadExt operator-() const { return QuadExt(-p_, -q_, c_); }

    // "p", "q*sqrt(c)" or "p + q*sqrt(c)" after canonical collapse.
    std::string str() const;

private:
    void require_same_radicand(const QuadExt& o) const;

    Rational p_ = 0;
    Rational q_ = 0;
    Rational c_ = 0;
};

QuadExt operator+(QuadExt a, const QuadExt& b);
QuadExt operator-(QuadExt a, const QuadExt& b);
QuadExt operator*(QuadExt a, const QuadExt& b);
QuadExt operator/(QuadExt a, const QuadExt& b);

QuadExt operator+(QuadExt a, const Rational& b);
QuadExt operator-(QuadExt a, const Rational& b);
QuadExt operator*(QuadExt a, const Rational& b);
QuadExt operator/(QuadExt a, const Rational& b);
QuadExt operator*(const Rational& a, QuadExt b);

// Value equality; throws std::domain_error on mismatched radicands.
bool operator==(const QuadExt& a, const QuadExt& b);
bool operator!=(const QuadExt& a, const QuadExt& b);

}  // namespace trinomial
