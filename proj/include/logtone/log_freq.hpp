#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "logtone/rational.hpp"

namespace logtone {

// Exact frequency relative to an implicit reference f: the real number
//
//     unit * 1  +  sum over primes p of coeffs[p] * ln(p)
//
// Because {1, ln 2, ln 3, ln 5, ...} is linearly independent over the
// rationals, two LogFreq values denote the same real number exactly when
// their stored fields coincide, so equality, ratios and octave relations
// are all decidable.
class LogFreq {
public:
    using CoeffMap = std::map<std::uint64_t, Rational>;

    LogFreq() = default;  // the zero element

    static LogFreq from_unit(Rational q);

    // Canonicalizing constructor: drops zero coefficients. Keys must be prime.
    LogFreq(Rational unit, CoeffMap coeffs);

    const Rational& unit() const { return unit_; }
    const CoeffMap& coeffs() const { return coeffs_; }

    bool is_zero() const { return unit_.is_zero() && coeffs_.empty(); }

    bool operator==(const LogFreq& other) const = default;

private:
    Rational unit_;
    CoeffMap coeffs_;  // prime -> nonzero coefficient of ln(prime)
};

// ln(r) for a positive rational r, expanded over the prime factorizations of
// numerator and denominator. ln_of(1) is the zero element.
LogFreq ln_of(const Rational& r);
LogFreq ln_of(long n);

// a*x + b*y in canonical form.
LogFreq combine(const LogFreq& x, const LogFreq& y, const Rational& a, const Rational& b);

// The exact rational q with x == q*y, if one exists. An empty result means
// the interval x : y is irrational. y must be nonzero.
std::optional<Rational> rational_ratio(const LogFreq& x, const LogFreq& y);

// The integer t with x == 2^t * z, if the ratio x : z is exactly a positive
// power of two. z must be nonzero.
std::optional<long> octave_shift_between(const LogFreq& x, const LogFreq& z);

// Exact ordering of the denoted real numbers. Equality is decided
// symbolically; a nonzero sign is decided by evaluating with increasing
// precision until the enclosing interval excludes zero.
std::strong_ordering compare(const LogFreq& x, const LogFreq& y);

bool is_positive(const LogFreq& x);

// Decimal expansion of the value with `digits` fractional digits,
// round-half-even, correct in every printed digit.
std::string approx_value(const LogFreq& x, int digits);

// 1200 * log2(value(x) / value(ref)). Both values must be positive.
double cents_between(const LogFreq& x, const LogFreq& ref);

// value(x) / value(ref) as a double; ref must be nonzero.
double value_ratio(const LogFreq& x, const LogFreq& ref);

// Plain-text rendering of the stored combination, e.g. "ln(16)" or
// "1/4 + 3 ln(2)". Intended for diagnostics and JSON payloads.
std::string describe(const LogFreq& x);

// If x == ln(r) for a positive rational r (unit zero, integer coefficients),
// returns r.
std::optional<Rational> as_log_argument(const LogFreq& x);

}  // namespace logtone
