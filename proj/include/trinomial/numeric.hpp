#pragma once

#include "trinomial/quadext.hpp"
#include "trinomial/radical.hpp"
#include "trinomial/rational.hpp"

#include <boost/multiprecision/mpfr.hpp>

namespace trinomial {

using Real = boost::multiprecision::mpfr_float;

// Sets the boost default precision (in bits, converted to decimal digits)
// for the lifetime of the guard. All temporaries created in scope carry at
// least this precision.
class PrecisionGuard {
public:
    explicit PrecisionGuard(unsigned bits);
    ~PrecisionGuard();
    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;

private:
    unsigned saved_digits10_;
};

unsigned digits10_for_bits(unsigned bits);

// Correctly rounds v to exactly `bits` bits of mantissa.
Real round_to_bits(const Real& v, unsigned bits);

Real pi_bits(unsigned bits);

Real to_real(const Rational& value, unsigned bits);
Real to_real(const Integer& value, unsigned bits);

// Minimal complex-on-mpfr value type; only what the conjugate-pair regime
// and its tests need.
struct Complex {
    Real re;
    Real im;
};

Complex operator+(const Complex& a, const Complex& b);
Complex operator-(const Complex& a, const Complex& b);
Complex operator*(const Complex& a, const Complex& b);
Complex operator/(const Complex& a, const Complex& b);
Complex conj(const Complex& a);
Real abs(const Complex& a);
Real arg(const Complex& a);
// Principal branch of a^e for real e.
Complex pow_real(const Complex& a, const Real& e);

// Embedding: s = sqrt(c) for c >= 0, s = +i*sqrt(|c|) for c < 0.
// The real overloads throw std::domain_error when the value is not real
// (negative radicand with nonzero radical part, or a negative RadicalScalar
// base raised to a non-integer exponent).
Real numeric_eval(const QuadExt& x, unsigned precision_bits);
Real numeric_eval(const RadicalScalar& x, unsigned precision_bits);
Complex numeric_eval_complex(const QuadExt& x, unsigned precision_bits);
Complex numeric_eval_complex(const RadicalScalar& x, unsigned precision_bits);

}  // namespace trinomial
