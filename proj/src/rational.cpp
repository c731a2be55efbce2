#include "trinomial/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace trinomial {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char ch : s) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    }
    return true;
}

[[noreturn]] void reject(std::string_view text) {
    throw std::invalid_argument("not an exact rational: '" + std::string(text) + "'");
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (s.empty()) reject(text);

    Rational value;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        std::string_view num = s.substr(0, slash);
        std::string_view den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) reject(text);
        const Integer n{std::string(num)};
        const Integer d{std::string(den)};
        if (d == 0) reject(text);
        value = Rational(n, d);
    } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view whole = s.substr(0, dot);
        std::string_view frac = s.substr(dot + 1);
        if (!all_digits(whole) || !all_digits(frac)) reject(text);
        Integer scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        const Integer head{std::string(whole)};
        const Integer tail{std::string(frac)};
        value = Rational(head * scale + tail, scale);
    } else {
        if (!all_digits(s)) reject(text);
        const Integer n{std::string(s)};
        value = Rational(n);
    }
    return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& value) { return value.str(); }

bool is_perfect_square(const Rational& value, Rational* root) {
    if (value < 0) return false;
    const Integer num = numerator(value);
    const Integer den = denominator(value);
    const Integer rn = sqrt(num);
    const Integer rd = sqrt(den);
    if (rn * rn != num || rd * rd != den) return false;
    if (root != nullptr) *root = Rational(rn, rd);
    return true;
}

bool is_integer(const Rational& value) { return denominator(value) == 1; }

bool is_half_integer(const Rational& value) { return denominator(value) == 2; }

Rational rational_pow(const Rational& base, long exponent) {
    if (exponent == 0) return 1;
    if (base == 0) {
        if (exponent < 0) throw std::domain_error("0 raised to a negative power");
        return 0;
    }
    Rational acc = 1;
    Rational b = exponent < 0 ? Rational(1) / base : base;
    unsigned long e = exponent < 0 ? 0ul - static_cast<unsigned long>(exponent)
                                   : static_cast<unsigned long>(exponent);
    while (e != 0) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

Integer binomial_exact(unsigned long n, unsigned long k) {
    Integer out;
    mpz_bin_uiui(out.backend().data(), n, k);
    return out;
}

Integer factorial_exact(unsigned long n) {
    Integer out;
    mpz_fac_ui(out.backend().data(), n);
    return out;
}

Rational binomial_rational(const Rational& alpha, unsigned long k) {
    Rational num = 1;
    for (unsigned long i = 0; i < k; ++i) num *= alpha - static_cast<long>(i);
    return num / Rational(factorial_exact(k));
}

}  // namespace trinomial
