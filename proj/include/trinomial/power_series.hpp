#pragma once

#include "trinomial/quadext.hpp"

#include <cstddef>
#include <vector>

namespace trinomial {

// Dense truncated power series over Q(sqrt(c)). coefficient(k) is the
// coefficient of u^k for k < truncation_order(); higher terms are unknown,
// not zero. Binary operations truncate to the shorter operand.
class PowerSeries {
public:
    PowerSeries(Rational radicand, std::vector<QuadExt> coefficients);

    // Constant series 1 + 0*u + ... with `order` known coefficients.
    static PowerSeries one(const Rational& radicand, std::size_t order);
    // a + b*u padded with zeros up to `order` coefficients.
    static PowerSeries linear(const QuadExt& a, const QuadExt& b, std::size_t order);

    std::size_t truncation_order() const { return coeffs_.size(); }
    const QuadExt& operator[](std::size_t k) const { return coeffs_.at(k); }
    const Rational& radicand() const { return radicand_; }
    const std::vector<QuadExt>& coefficients() const { return coeffs_; }

    PowerSeries& operator+=(const PowerSeries& o);
    PowerSeries& operator-=(const PowerSeries& o);

private:
    Rational radicand_;
    std::vector<QuadExt> coeffs_;
};

PowerSeries operator+(PowerSeries a, const PowerSeries& b);
PowerSeries operator-(PowerSeries a, const PowerSeries& b);
PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
PowerSeries operator*(const QuadExt& scale, const PowerSeries& a);

// 1/a; requires a nonzero (and symbolically invertible) constant term.
PowerSeries inverse(const PowerSeries& a);

// sqrt(a) with constant term 1; callers factor any other leading constant
// into a RadicalScalar first. Throws std::domain_error otherwise.
PowerSeries sqrt(const PowerSeries& a);

// a^(-1/2) = inverse(sqrt(a)); same constant-term-1 requirement.
PowerSeries rsqrt(const PowerSeries& a);

bool operator==(const PowerSeries& a, const PowerSeries& b);

}  // namespace trinomial
