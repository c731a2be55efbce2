#include "trinomial/quadext.hpp"

#include <stdexcept>

namespace trinomial {

void QuadExt::require_same_radicand(const QuadExt& o) const {
    if (c_ != o.c_) {
        throw std::domain_error("quadratic extension radicand mismatch: sqrt(" + to_string(c_) +
                                ") vs sqrt(" + to_string(o.c_) + ")");
    }
}

bool QuadExt::is_zero() const {
    auto [p, q] = canonical();
    return p == 0 && q == 0;
}

bool QuadExt::is_rational_value() const { return canonical().second == 0; }

std::pair<Rational, Rational> QuadExt::canonical() const {
    Rational root;
    if (q_ != 0 && c_ >= 0 && is_perfect_square(c_, &root)) {
        return {p_ + q_ * root, Rational(0)};
    }
    return {p_, q_};
}

QuadExt QuadExt::inverse() const {
    const Rational norm = field_norm();
    if (norm == 0) {
        throw std::domain_error("element of norm zero has no inverse: " + str());
    }
    return QuadExt(p_ / norm, -q_ / norm, c_);
}

QuadExt& QuadExt::operator+=(const QuadExt& o) {
    require_same_radicand(o);
    p_ += o.p_;
    q_ += o.q_;
    return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) {
    require_same_radicand(o);
    p_ -= o.p_;
    q_ -= o.q_;
    return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& o) {
    require_same_radicand(o);
    const Rational p = p_ * o.p_ + q_ * o.q_ * c_;
    const Rational q = p_ * o.q_ + q_ * o.p_;
    p_ = p;
    q_ = q;
    return *this;
}

QuadExt& QuadExt::operator/=(const QuadExt& o) { return *this *= o.inverse(); }

QuadExt& QuadExt::operator+=(const Rational& o) {
    p_ += o;
    return *this;
}

QuadExt& QuadExt::operator-=(const Rational& o) {
    p_ -= o;
    return *this;
}

QuadExt& QuadExt::operator*=(const Rational& o) {
    p_ *= o;
    q_ *= o;
    return *this;
}

QuadExt& QuadExt::operator/=(const Rational& o) {
    if (o == 0) throw std::domain_error("division by zero rational");
    p_ /= o;
    q_ /= o;
    return *this;
}

std::string QuadExt::str() const {
    auto [p, q] = canonical();
    if (q == 0) return to_string(p);
    std::string radical = to_string(q) + "*sqrt(" + to_string(c_) + ")";
    if (p == 0) return radical;
    if (q > 0) return to_string(p) + " + " + radical;
    return to_string(p) + " - " + to_string(-q) + "*sqrt(" + to_string(c_) + ")";
}

QuadExt operator+(QuadExt a, const QuadExt& b) { return a += b; }
QuadExt operator-(QuadExt a, const QuadExt& b) { return a -= b; }
QuadExt operator*(QuadExt a, const QuadExt& b) { return a *= b; }
QuadExt operator/(QuadExt a, const QuadExt& b) { return a /= b; }

QuadExt operator+(QuadExt a, const Rational& b) { return a += b; }
QuadExt operator-(QuadExt a, const Rational& b) { return a -= b; }
QuadExt operator*(QuadExt a, const Rational& b) { return a *= b; }
QuadExt operator/(QuadExt a, const Rational& b) { return a /= b; }
QuadExt operator*(const Rational& a, QuadExt b) { return b *= a; }

bool operator==(const QuadExt& a, const QuadExt& b) {
    if (a.radicand() != b.radicand()) {
        throw std::domain_error("comparing elements over different radicands");
    }
    return (a - b).is_zero();
}

bool operator!=(const QuadExt& a, const QuadExt& b) { return !(a == b); }

}  // namespace trinomial
