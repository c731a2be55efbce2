#include "trinomial/power_series.hpp"

#include <algorithm>
#include <stdexcept>

namespace trinomial {

namespace {

void require_same_radicand(const PowerSeries& a, const PowerSeries& b) {
    if (a.radicand() != b.radicand()) {
        throw std::domain_error("power series radicand mismatch");
    }
}

}  // namespace

PowerSeries::PowerSeries(Rational radicand, std::vector<QuadExt> coefficients)
    : radicand_(std::move(radicand)), coeffs_(std::move(coefficients)) {
    if (coeffs_.empty()) throw std::invalid_argument("power series needs at least one coefficient");
    for (const QuadExt& c : coeffs_) {
        if (c.radicand() != radicand_) {
            throw std::domain_error("power series coefficient over a different radicand");
        }
    }
}

PowerSeries PowerSeries::one(const Rational& radicand, std::size_t order) {
    if (order == 0) throw std::invalid_argument("truncation order must be positive");
    std::vector<QuadExt> coeffs(order, QuadExt::zero(radicand));
    coeffs[0] = QuadExt::one(radicand);
    return PowerSeries(radicand, std::move(coeffs));
}

PowerSeries PowerSeries::linear(const QuadExt& a, const QuadExt& b, std::size_t order) {
    if (order == 0) throw std::invalid_argument("truncation order must be positive");
    std::vector<QuadExt> coeffs(order, QuadExt::zero(a.radicand()));
    coeffs[0] = a;
    if (order > 1) coeffs[1] = b;
    return PowerSeries(a.radicand(), std::move(coeffs));
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& o) {
    require_same_radicand(*this, o);
    coeffs_.resize(std::min(coeffs_.size(), o.coeffs_.size()), QuadExt::zero(radicand_));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& o) {
    require_same_radicand(*this, o);
    coeffs_.resize(std::min(coeffs_.size(), o.coeffs_.size()), QuadExt::zero(radicand_));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    return *this;
}

PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    require_same_radicand(a, b);
    const std::size_t order = std::min(a.truncation_order(), b.truncation_order());
    std::vector<QuadExt> out(order, QuadExt::zero(a.radicand()));
    for (std::size_t i = 0; i < order; ++i) {
        if (a[i].rational_part() == 0 && a[i].radical_part() == 0) continue;
        for (std::size_t j = 0; i + j < order; ++j) out[i + j] += a[i] * b[j];
    }
    return PowerSeries(a.radicand(), std::move(out));
}

PowerSeries operator*(const QuadExt& scale, const PowerSeries& a) {
    std::vector<QuadExt> out = a.coefficients();
    for (QuadExt& c : out) c *= scale;
    return PowerSeries(a.radicand(), std::move(out));
}

PowerSeries inverse(const PowerSeries& a) {
    const std::size_t order = a.truncation_order();
    if (a[0].is_zero()) throw std::domain_error("cannot invert a series with zero constant term");
    std::vector<QuadExt> out(order, QuadExt::zero(a.radicand()));
    const QuadExt inv0 = a[0].inverse();
    out[0] = inv0;
    for (std::size_t k = 1; k < order; ++k) {
        QuadExt acc = QuadExt::zero(a.radicand());
        for (std::size_t j = 1; j <= k; ++j) acc += a[j] * out[k - j];
        out[k] = -(acc * inv0);
    }
    return PowerSeries(a.radicand(), std::move(out));
}

PowerSeries sqrt(const PowerSeries& a) {
    const std::size_t order = a.truncation_order();
    if (!(a[0] == QuadExt::one(a.radicand()))) {
        throw std::domain_error("series square root requires constant term 1");
    }
    // s_0 = 1, and for k >= 1:  2 s_k = a_k - sum_{0<j<k} s_j s_{k-j}.
    std::vector<QuadExt> out(order, QuadExt::zero(a.radicand()));
    out[0] = QuadExt::one(a.radicand());
    for (std::size_t k = 1; k < order; ++k) {
        QuadExt acc = a[k];
        for (std::size_t j = 1; j < k; ++j) acc -= out[j] * out[k - j];
        out[k] = acc / Rational(2);
    }
    return PowerSeries(a.radicand(), std::move(out));
}

PowerSeries rsqrt(const PowerSeries& a) { return inverse(sqrt(a)); }

bool operator==(const PowerSeries& a, const PowerSeries& b) {
    if (a.radicand() != b.radicand() || a.truncation_order() != b.truncation_order()) return false;
    for (std::size_t k = 0; k < a.truncation_order(); ++k) {
        if (!(a[k] == b[k])) return false;
    }
    return true;
}

}  // namespace trinomial
