#include "trinomial/exact.hpp"

#include "trinomial/power_series.hpp"

#include <cassert>
#include <stdexcept>
#include <vector>

namespace trinomial {

namespace {

// (x^2 + b x + c)^n truncated at degree `cap`, by repeated squaring of the
// dense coefficient array. Works over Integer or Rational.
template <typename T>
std::vector<T> square_truncated(const std::vector<T>& a, std::size_t cap) {
    const std::size_t len = std::min(2 * a.size() - 1, cap + 1);
    std::vector<T> out(len, T(0));
    for (std::size_t i = 0; i < a.size() && i < len; ++i) {
        if (a[i] == 0) continue;
        if (2 * i < len) out[2 * i] += a[i] * a[i];
        for (std::size_t j = i + 1; j < a.size() && i + j < len; ++j) {
            if (a[j] == 0) continue;
            out[i + j] += 2 * a[i] * a[j];
        }
    }
    return out;
}

template <typename T>
std::vector<T> times_trinomial_truncated(const std::vector<T>& a, const T& b, const T& c,
                                         std::size_t cap) {
    const std::size_t len = std::min(a.size() + 2, cap + 1);
    std::vector<T> out(len, T(0));
    for (std::size_t i = 0; i < a.size() && i < len; ++i) {
        if (a[i] == 0) continue;
        out[i] += a[i] * c;
        if (i + 1 < len) out[i + 1] += a[i] * b;
        if (i + 2 < len) out[i + 2] += a[i];
    }
    return out;
}

template <typename T>
T poly_power_coefficient(const T& b, const T& c, unsigned long n) {
    if (n == 0) return T(1);
    // highest bit first
    int top = 63;
    while (((n >> top) & 1ul) == 0) --top;
    std::vector<T> acc = {c, b, T(1)};
    if (acc.size() > n + 1) acc.resize(n + 1);
    for (int bit = top - 1; bit >= 0; --bit) {
        acc = square_truncated(acc, n);
        if ((n >> bit) & 1ul) acc = times_trinomial_truncated(acc, b, c, n);
    }
    return n < acc.size() ? acc[n] : T(0);
}

}  // namespace

Rational tn_direct_sum(const TrinomialParams& params, unsigned long n) {
    // choose k factors contributing x^2, k contributing c and n-2k
    // contributing b x; only i = k reaches total degree n.
    std::vector<Rational> b_pow(n + 1), c_pow(n / 2 + 1);
    b_pow[0] = 1;
    for (unsigned long i = 1; i <= n; ++i) b_pow[i] = b_pow[i - 1] * params.b;
    c_pow[0] = 1;
    for (unsigned long i = 1; i <= n / 2; ++i) c_pow[i] = c_pow[i - 1] * params.c;
    Rational acc = 0;
    for (unsigned long k = 0; 2 * k <= n; ++k) {
        const Integer ways = binomial_exact(n, k) * binomial_exact(n - k, k);
        acc += Rational(ways) * b_pow[n - 2 * k] * c_pow[k];
    }
    return acc;
}

Rational tn_poly_power(const TrinomialParams& params, unsigned long n) {
    if (is_integer(params.b) && is_integer(params.c)) {
        return Rational(
            poly_power_coefficient<Integer>(numerator(params.b), numerator(params.c), n));
    }
    return poly_power_coefficient<Rational>(params.b, params.c, n);
}

std::vector<Rational> tn_recurrence(const TrinomialParams& params, unsigned long n_max) {
    std::vector<Rational> out;
    out.reserve(n_max + 1);
    out.emplace_back(1);
    if (n_max == 0) return out;
    out.push_back(params.b);

    if (is_integer(params.b) && is_integer(params.c)) {
        // integer inputs give integer T_n; exactness of each division by n is
        // a built-in consistency check on the recurrence itself
        const Integer b = numerator(params.b);
        const Integer d = numerator(params.discriminant());
        Integer prev2 = 1;
        Integer prev1 = b;
        for (unsigned long n = 2; n <= n_max; ++n) {
            Integer num = (2 * n - 1) * b * prev1 - Integer(n - 1) * d * prev2;
            if (num % n != 0) {
                throw std::logic_error("trinomial recurrence produced an inexact division at n=" +
                                       std::to_string(n));
            }
            Integer cur = num / n;
            out.emplace_back(cur);
            prev2 = std::move(prev1);
            prev1 = std::move(cur);
        }
        return out;
    }

    const Rational d = params.discriminant();
    for (unsigned long n = 2; n <= n_max; ++n) {
        const Rational cur =
            ((2 * n - 1) * params.b * out[n - 1] - Rational(n - 1) * d * out[n - 2]) / n;
        out.push_back(cur);
    }
    return out;
}

std::vector<Rational> tn_series(const TrinomialParams& params, unsigned long n_max) {
    const Rational& c = params.c;
    const std::size_t len = n_max + 1;
    // 1 - 2bt + d t^2 under the reciprocal square root
    std::vector<QuadExt> poly(len, QuadExt::zero(c));
    poly[0] = QuadExt::one(c);
    if (len > 1) poly[1] = QuadExt::from_rational(-2 * params.b, c);
    if (len > 2) poly[2] = QuadExt::from_rational(params.discriminant(), c);
    const PowerSeries f = rsqrt(PowerSeries(c, std::move(poly)));
    std::vector<Rational> out;
    out.reserve(len);
    for (std::size_t k = 0; k < len; ++k) {
        assert(f[k].radical_part() == 0);
        out.push_back(f[k].rational_part());
    }
    return out;
}

}  // namespace trinomial
