#include "trinomial/numeric.hpp"
#include "trinomial/translate.hpp"

#include <doctest.h>

#include <stdexcept>
#include <vector>

using namespace trinomial;

namespace {

// the five closed-form polynomials of the displayed Gamma-ratio expansion
std::vector<Rational> e_closed_form(const Rational& a) {
    return {
        a * (a - 1) / 2,
        a * (a - 1) * (a - 2) * (3 * a - 1) / 24,
        a * a * (a - 1) * (a - 1) * (a - 2) * (a - 3) / 48,
        a * (a - 1) * (a - 2) * (a - 3) * (a - 4) *
            (15 * a * a * a - 30 * a * a + 5 * a + 2) / 5760,
        a * a * (a - 1) * (a - 1) * (a - 2) * (a - 3) * (a - 4) * (a - 5) *
            (3 * a * a - 7 * a - 2) / 11520,
    };
}

}  // namespace

TEST_CASE("Bernoulli numbers") {
    const auto b = bernoulli_numbers(12);
    const std::vector<Rational> want = {Rational(1),      Rational(-1, 2), Rational(1, 6),
                                        Rational(0),      Rational(-1, 30), Rational(0),
                                        Rational(1, 42),  Rational(0),      Rational(-1, 30),
                                        Rational(0),      Rational(5, 66),  Rational(0),
                                        Rational(-691, 2730)};
    CHECK(b == want);
}

TEST_CASE("golden translation rows") {
    CHECK(binom_asym_coeffs(Rational(1, 2), 5).coeffs ==
          std::vector<Rational>{Rational(-1, 8), Rational(1, 128), Rational(5, 1024),
                                Rational(-21, 32768), Rational(-399, 262144)});
    CHECK(binom_asym_coeffs(Rational(-1, 2), 4).coeffs ==
          std::vector<Rational>{Rational(3, 8), Rational(25, 128), Rational(105, 1024),
                                Rational(1659, 32768)});
    CHECK(binom_asym_coeffs(Rational(-3, 2), 3).coeffs ==
          std::vector<Rational>{Rational(15, 8), Rational(385, 128), Rational(4725, 1024)});
    CHECK(binom_asym_coeffs(Rational(-5, 2), 2).coeffs ==
          std::vector<Rational>{Rational(35, 8), Rational(1785, 128)});
    CHECK(binom_asym_coeffs(Rational(-7, 2), 1).coeffs == std::vector<Rational>{Rational(63, 8)});
}

TEST_CASE("generated coefficients match the closed-form polynomials") {
    const std::vector<Rational> alphas = {Rational(1, 2),  Rational(-1, 2), Rational(-3, 2),
                                          Rational(-5, 2), Rational(-7, 2), Rational(1),
                                          Rational(2),     Rational(5, 2),  Rational(-4, 3)};
    for (const Rational& a : alphas) {
        const auto got = binom_asym_coeffs(a, 5).coeffs;
        const auto want = e_closed_form(a);
        for (std::size_t j = 0; j < 5; ++j) CHECK(got[j] == want[j]);
    }
}

TEST_CASE("the pole row is exactly zero") {
    for (const Rational& e : binom_asym_coeffs(Rational(1), 8).coeffs) CHECK(e == 0);
}

TEST_CASE("rejected arguments") {
    CHECK_THROWS_AS(binom_asym_coeffs(Rational(0), 3), std::domain_error);
    CHECK_THROWS_AS(binom_asym_coeffs(Rational(-2), 3), std::domain_error);
    CHECK_THROWS_AS(binom_asym_coeffs(Rational(1, 2), 0), std::invalid_argument);
}

TEST_CASE("Gamma at half-integers") {
    CHECK(gamma_half_integer(Rational(1, 2)) == 1);
    CHECK(gamma_half_integer(Rational(-1, 2)) == -2);
    CHECK(gamma_half_integer(Rational(-3, 2)) == Rational(4, 3));
    CHECK(gamma_half_integer(Rational(7, 2)) == Rational(15, 8));
    CHECK(gamma_half_integer(Rational(-9, 2)) == Rational(-32, 945));
    // functional equation Gamma(a+1) = a Gamma(a)
    for (int k = -5; k <= 5; ++k) {
        const Rational a = Rational(2 * k + 1, 2);
        CHECK(gamma_half_integer(a + 1) == a * gamma_half_integer(a));
    }
    CHECK_THROWS_AS(gamma_half_integer(Rational(1)), std::domain_error);
    CHECK_THROWS_AS(gamma_half_integer(Rational(1, 3)), std::domain_error);
}

TEST_CASE("empirical truncation order of the binomial expansion") {
    // |C(n+a-1,n) Gamma(a) n^(1-a) - (1 + sum e_j n^-j)| should scale like
    // n^-(J+1); doubling n must shrink it by about 2^(J+1).
    const unsigned bits = 320;
    for (const Rational& alpha : {Rational(1, 2), Rational(-3, 2)}) {
        for (const int J : {3, 5}) {
            const auto e = binom_asym_coeffs(alpha, J).coeffs;
            // explicit return type: abs(...) is an expression template over locals
            const auto defect = [&](unsigned long n) -> Real {
                PrecisionGuard guard(bits);
                Real binom(1);
                for (unsigned long i = 1; i <= n; ++i) {
                    binom *= (to_real(alpha, bits) - 1 + Real(i)) / Real(i);
                }
                const Real gamma_a = to_real(gamma_half_integer(alpha), bits) * sqrt(pi_bits(bits));
                const Real normalised =
                    binom * gamma_a * pow(Real(n), 1 - to_real(alpha, bits));
                Real series(1);
                for (int j = 0; j < J; ++j) {
                    series += to_real(e[j], bits) / pow(Real(n), j + 1);
                }
                return abs(normalised - series);
            };
            const Real d1 = defect(512);
            const Real d2 = defect(1024);
            const Real ratio = d1 / d2;
            const Real expected = pow(Real(2), J + 1);
            CHECK(ratio > expected * Real(Rational(7, 10)));
            CHECK(ratio < expected * Real(Rational(14, 10)));
        }
    }
}

TEST_CASE("translated terms") {
    const QuadExt one = QuadExt::one(Rational(1));
    const QuadExt growth = QuadExt::from_rational(6, Rational(1));

    const TranslatedTerm leading = translate_term(one, Rational(1, 2), growth, 5);
    CHECK(leading.n_exponent == Rational(-1, 2));
    CHECK(leading.scalar == one);
    CHECK(leading.pi_power == Rational(-1, 2));
    CHECK(leading.corrections == binom_asym_coeffs(Rational(1, 2), 5).coeffs);

    // u^(9/2) translates with the Gamma(-9/2) normalisation
    const TranslatedTerm deep = translate_term(one, Rational(-9, 2), growth, 1);
    CHECK(deep.n_exponent == Rational(-11, 2));
    CHECK(deep.scalar == QuadExt::from_rational(Rational(-945, 32), Rational(1)));

    const TranslatedTerm zero = translate_term(QuadExt::zero(Rational(1)), Rational(1, 2), growth, 2);
    CHECK(zero.scalar.is_zero());

    const TranslatedTerm pole = translate_term(one, Rational(1), growth, 3);
    CHECK(pole.pi_power == 0);
    CHECK(pole.n_exponent == 0);
    for (const Rational& e : pole.corrections) CHECK(e == 0);

    CHECK_THROWS_AS(translate_term(one, Rational(1, 3), growth, 2), std::domain_error);
    CHECK_THROWS_AS(translate_term(one, Rational(-1), growth, 2), std::domain_error);
}
