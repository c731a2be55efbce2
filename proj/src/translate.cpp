#include "trinomial/translate.hpp"

#include <stdexcept>
#include <vector>

namespace trinomial {

std::vector<Rational> bernoulli_numbers(int count) {
    if (count < 0) throw std::invalid_argument("negative Bernoulli index");
    std::vector<Rational> b;
    b.reserve(count + 1);
    b.emplace_back(1);
    for (int m = 1; m <= count; ++m) {
        Rational acc = 0;
        for (int j = 0; j < m; ++j) {
            acc += Rational(binomial_exact(m + 1, j)) * b[j];
        }
        b.push_back(-acc / (m + 1));
    }
    return b;
}

namespace {

// exp of a formal series with zero constant term, to the same truncation.
std::vector<Rational> series_exp(const std::vector<Rational>& d) {
    std::vector<Rational> g(d.size());
    g[0] = 1;
    for (std::size_t m = 1; m < d.size(); ++m) {
        Rational acc = 0;
        for (std::size_t j = 1; j <= m; ++j) acc += Rational(j) * d[j] * g[m - j];
        g[m] = acc / Rational(m);
    }
    return g;
}

}  // namespace

TranslationCoeffs binom_asym_coeffs(const Rational& alpha, int order) {
    if (order < 1) throw std::invalid_argument("expansion order must be at least 1");
    if (is_integer(alpha) && alpha <= 0) {
        throw std::domain_error("1/Gamma(alpha) vanishes for nonpositive integer alpha");
    }
    const std::size_t J = static_cast<std::size_t>(order);

    // log Gamma(n+alpha) - log Gamma(n+1) = (alpha-1) log n + E(1/n), built
    // from Stirling's series with z = n(1 + alpha/n) resp. n(1 + 1/n).
    std::vector<Rational> E(J + 1, Rational(0));

    // (n + shift) log(1 + beta/n): log coefficients l_m = (-1)^(m+1) beta^m / m
    const auto add_log_part = [&](const Rational& beta, const Rational& shift, int sign) {
        std::vector<Rational> l(J + 2, Rational(0));
        Rational beta_pow = 1;
        for (std::size_t m = 1; m <= J + 1; ++m) {
            beta_pow *= beta;
            l[m] = Rational(m % 2 == 1 ? 1 : -1) * beta_pow / Rational(m);
        }
        for (std::size_t j = 0; j <= J; ++j) E[j] += Rational(sign) * l[j + 1];
        for (std::size_t j = 1; j <= J; ++j) E[j] += Rational(sign) * shift * l[j];
    };
    add_log_part(alpha, alpha - Rational(1, 2), +1);
    add_log_part(1, Rational(1, 2), -1);
    E[0] -= alpha - 1;
    if (E[0] != 0) throw std::logic_error("Stirling difference lost its constant term");

    // tail sum_k B_2k / (2k(2k-1)) [ (n+alpha)^(1-2k) - (n+1)^(1-2k) ]
    const std::size_t K = (J + 1) / 2;
    const std::vector<Rational> bern = bernoulli_numbers(static_cast<int>(2 * K));
    for (std::size_t k = 1; k <= K; ++k) {
        const Rational coef = bern[2 * k] / Rational(2 * k * (2 * k - 1));
        for (const auto& [beta, sign] : {std::pair<Rational, int>{alpha, +1}, {Rational(1), -1}}) {
            Rational beta_pow = 1;
            for (std::size_t m = 0; 2 * k - 1 + m <= J; ++m) {
                E[2 * k - 1 + m] += Rational(sign) * coef *
                                    binomial_rational(Rational(1) - Rational(2 * k), m) * beta_pow;
                beta_pow *= beta;
            }
        }
    }

    std::vector<Rational> g = series_exp(E);
    return {alpha, std::vector<Rational>(g.begin() + 1, g.end())};
}

Rational gamma_half_integer(const Rational& alpha) {
    if (!is_half_integer(alpha)) {
        throw std::domain_error("Gamma(alpha) = r sqrt(pi) needs a half-integer alpha");
    }
    Rational r = 1;
    Rational x(1, 2);
    while (x < alpha) {
        r *= x;
        x += 1;
    }
    while (x > alpha) {
        x -= 1;
        r /= x;
    }
    return r;
}

TranslatedTerm translate_term(const QuadExt& coeff, const Rational& alpha, const QuadExt& growth,
                              int order) {
    Rational pi_power = 0;
    Rational gamma_rational;
    if (is_half_integer(alpha)) {
        gamma_rational = gamma_half_integer(alpha);
        pi_power = Rational(-1, 2);
    } else if (is_integer(alpha) && alpha > 0) {
        gamma_rational = Rational(factorial_exact(static_cast<unsigned long>(numerator(alpha)) - 1));
    } else {
        throw std::domain_error(
            "exact translation needs a half-integer or positive integer exponent");
    }
    std::vector<Rational> corrections;
    if (order >= 1) corrections = binom_asym_coeffs(alpha, order).coeffs;
    return {growth, alpha - 1, coeff / gamma_rational, pi_power, std::move(corrections)};
}

}  // namespace trinomial
