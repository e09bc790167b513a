#include "logtone/rational.hpp"

#include <stdexcept>

namespace logtone {

Rational::Rational(long num, long den) {
    if (den == 0) {
        throw std::domain_error("rational denominator must be nonzero");
    }
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational::Rational(mpq_class q) : value_(std::move(q)) {
    value_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (sgn(den) == 0) {
        throw std::domain_error("rational denominator must be nonzero");
    }
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational Rational::from_string(const std::string& text) {
    mpq_class q;
    if (text.empty() || q.set_str(text, 10) != 0) {
        throw std::domain_error("cannot parse rational literal '" + text + "'");
    }
    if (sgn(mpq_class(q.get_den())) == 0) {
        throw std::domain_error("rational denominator must be nonzero in '" + text + "'");
    }
    q.canonicalize();
    return Rational(std::move(q));
}

Rational Rational::pow2(long t) {
    mpz_class power;
    mpz_ui_pow_ui(power.get_mpz_t(), 2, static_cast<unsigned long>(t < 0 ? -t : t));
    return t >= 0 ? Rational(power, mpz_class(1)) : Rational(mpz_class(1), power);
}

std::optional<long> Rational::exact_power_of_two() const {
    if (sign() <= 0) {
        return std::nullopt;
    }
    const mpz_class num = numerator();
    const mpz_class den = denominator();
    // Reduced form: at most one of numerator/denominator can exceed 1.
    if (den == 1 && mpz_popcount(num.get_mpz_t()) == 1) {
        return static_cast<long>(mpz_scan1(num.get_mpz_t(), 0));
    }
    if (num == 1 && mpz_popcount(den.get_mpz_t()) == 1) {
        return -static_cast<long>(mpz_scan1(den.get_mpz_t(), 0));
    }
    return std::nullopt;
}

Rational Rational::reciprocal() const {
    if (is_zero()) {
        throw std::domain_error("reciprocal of zero");
    }
    return Rational(denominator(), numerator());
}

Rational Rational::abs() const {
    return sign() < 0 ? -*this : *this;
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) {
        throw std::domain_error("division by zero rational");
    }
    return Rational(mpq_class(a.value_ / b.value_));
}

}  // namespace logtone
