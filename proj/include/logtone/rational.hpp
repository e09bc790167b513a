#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

namespace logtone {

// Arbitrary-precision rational number, always reduced to lowest terms with a
// positive denominator. Zero is canonically 0/1.
class Rational {
public:
    Rational() : value_(0) {}
    Rational(long n) : value_(n) {}
    Rational(long num, long den);
    explicit Rational(mpq_class q);
    explicit Rational(const mpz_class& num, const mpz_class& den);

    // Parses "a" or "a/b" with optional leading '-'. Throws std::domain_error
    // on malformed input or a zero denominator.
    static Rational from_string(const std::string& text);

    // 2^t as an exact rational; t may be negative.
    static Rational pow2(long t);

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    // If *this == 2^t for an integer t, returns t. Requires a positive value.
    std::optional<long> exact_power_of_two() const;

    Rational reciprocal() const;
    Rational abs() const;

    const mpq_class& raw() const { return value_; }
    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }

    std::string to_string() const { return value_.get_str(); }
    double to_double() const { return value_.get_d(); }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ + b.value_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ - b.value_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ * b.value_)); }
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational operator-() const { return Rational(mpq_class(-value_)); }

    bool operator==(const Rational& other) const { return value_ == other.value_; }
    std::strong_ordering operator<=>(const Rational& other) const {
        const int c = cmp(value_, other.value_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

private:
    mpq_class value_;
};

}  // namespace logtone
