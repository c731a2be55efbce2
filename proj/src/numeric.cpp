#include "trinomial/numeric.hpp"

#include <mpfr.h>

#include <cmath>
#include <stdexcept>

namespace trinomial {

unsigned digits10_for_bits(unsigned bits) {
    return static_cast<unsigned>(std::ceil(bits * 0.3010299956639812)) + 2;
}

PrecisionGuard::PrecisionGuard(unsigned bits) : saved_digits10_(Real::default_precision()) {
    Real::default_precision(digits10_for_bits(bits));
}

PrecisionGuard::~PrecisionGuard() { Real::default_precision(saved_digits10_); }

Real round_to_bits(const Real& v, unsigned bits) {
    Real out;
    mpfr_set_prec(out.backend().data(), bits);
    mpfr_set(out.backend().data(), v.backend().data(), MPFR_RNDN);
    return out;
}

Real pi_bits(unsigned bits) {
    Real out;
    mpfr_set_prec(out.backend().data(), bits);
    mpfr_const_pi(out.backend().data(), MPFR_RNDN);
    return out;
}

Real to_real(const Rational& value, unsigned bits) {
    Real out;
    mpfr_set_prec(out.backend().data(), bits);
    mpfr_set_q(out.backend().data(), value.backend().data(), MPFR_RNDN);
    return out;
}

Real to_real(const Integer& value, unsigned bits) {
    Real out;
    mpfr_set_prec(out.backend().data(), bits);
    mpfr_set_z(out.backend().data(), value.backend().data(), MPFR_RNDN);
    return out;
}

Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }

Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

Complex operator/(const Complex& a, const Complex& b) {
    const Real den = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
}

Complex conj(const Complex& a) { return {a.re, -a.im}; }

Real abs(const Complex& a) {
    using boost::multiprecision::hypot;
    return hypot(a.re, a.im);
}

Real arg(const Complex& a) {
    using boost::multiprecision::atan2;
    return atan2(a.im, a.re);
}

Complex pow_real(const Complex& a, const Real& e) {
    using boost::multiprecision::cos;
    using boost::multiprecision::log;
    using boost::multiprecision::exp;
    using boost::multiprecision::sin;
    const Real r = abs(a);
    if (r == 0) {
        if (e <= 0) throw std::domain_error("zero base with nonpositive exponent");
        return {Real(0), Real(0)};
    }
    const Real theta = arg(a) * e;
    const Real mag = exp(log(r) * e);
    return {mag * cos(theta), mag * sin(theta)};
}

namespace {

constexpr unsigned kGuardBits = 32;

}  // namespace

Real numeric_eval(const QuadExt& x, unsigned precision_bits) {
    const unsigned wb = precision_bits + kGuardBits;
    PrecisionGuard guard(wb);
    if (x.radicand() < 0 && x.radical_part() != 0) {
        throw std::domain_error("value lies off the real line; use numeric_eval_complex");
    }
    Real acc = to_real(x.rational_part(), wb);
    if (x.radical_part() != 0) {
        acc += to_real(x.radical_part(), wb) * sqrt(to_real(x.radicand(), wb));
    }
    return round_to_bits(acc, precision_bits);
}

Complex numeric_eval_complex(const QuadExt& x, unsigned precision_bits) {
    const unsigned wb = precision_bits + kGuardBits;
    PrecisionGuard guard(wb);
    Real re = to_real(x.rational_part(), wb);
    Real im(0);
    if (x.radical_part() != 0) {
        if (x.radicand() >= 0) {
            re += to_real(x.radical_part(), wb) * sqrt(to_real(x.radicand(), wb));
        } else {
            // embedding s = +i sqrt(|c|)
            im = to_real(x.radical_part(), wb) * sqrt(to_real(-x.radicand(), wb));
        }
    }
    return {round_to_bits(re, precision_bits), round_to_bits(im, precision_bits)};
}

Real numeric_eval(const RadicalScalar& x, unsigned precision_bits) {
    const unsigned wb = precision_bits + kGuardBits;
    PrecisionGuard guard(wb);
    const Real base = numeric_eval(x.base, wb);
    if (base == 0) {
        if (x.exponent > 0) return round_to_bits(Real(0), precision_bits);
        throw std::domain_error("zero base with nonpositive exponent");
    }
    if (base < 0) {
        if (!is_integer(x.exponent)) {
            throw std::domain_error("negative base with non-integer exponent has no real value");
        }
        const long e = static_cast<long>(numerator(x.exponent));
        return round_to_bits(pow(base, e), precision_bits);
    }
    const Real e = to_real(x.exponent, wb);
    return round_to_bits(pow(base, e), precision_bits);
}

Complex numeric_eval_complex(const RadicalScalar& x, unsigned precision_bits) {
    const unsigned wb = precision_bits + kGuardBits;
    PrecisionGuard guard(wb);
    const Complex base = numeric_eval_complex(x.base, wb);
    const Complex out = pow_real(base, to_real(x.exponent, wb));
    return {round_to_bits(out.re, precision_bits), round_to_bits(out.im, precision_bits)};
}

}  // namespace trinomial
