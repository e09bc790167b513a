#include "logtone/log_freq.hpp"

#include <stdexcept>

#include "logtone/factorize.hpp"

namespace logtone {

LogFreq LogFreq::from_unit(Rational q) {
    LogFreq result;
    result.unit_ = std::move(q);
    return result;
}

LogFreq::LogFreq(Rational unit, CoeffMap coeffs) : unit_(std::move(unit)) {
    for (auto& [prime, coeff] : coeffs) {
        if (!is_prime(prime)) {
            throw std::domain_error("LogFreq coefficient key " + std::to_string(prime) + " is not prime");
        }
        if (!coeff.is_zero()) {
            coeffs_.emplace(prime, std::move(coeff));
        }
    }
}

LogFreq ln_of(const Rational& r) {
    if (r.sign() <= 0) {
        throw std::domain_error("ln_of: argument must be positive");
    }
    auto to_u64 = [](const mpz_class& z) {
        if (!z.fits_ulong_p()) {
            throw std::range_error("ln_of: argument exceeds the factorization bound");
        }
        return static_cast<std::uint64_t>(z.get_ui());
    };
    LogFreq::CoeffMap coeffs;
    for (const auto& [p, e] : factorize(to_u64(r.numerator()))) {
        coeffs[p] = Rational(static_cast<long>(e));
    }
    for (const auto& [p, e] : factorize(to_u64(r.denominator()))) {
        coeffs[p] = coeffs[p] - Rational(static_cast<long>(e));
    }
    return LogFreq(Rational(0), std::move(coeffs));
}

LogFreq ln_of(long n) {
    return ln_of(Rational(n));
}

LogFreq combine(const LogFreq& x, const LogFreq& y, const Rational& a, const Rational& b) {
    LogFreq::CoeffMap coeffs;
    for (const auto& [p, c] : x.coeffs()) {
        coeffs[p] = a * c;
    }
    for (const auto& [p, c] : y.coeffs()) {
        auto it = coeffs.find(p);
        if (it == coeffs.end()) {
            coeffs.emplace(p, b * c);
        } else {
            it->second = it->second + b * c;
        }
    }
    return LogFreq(a * x.unit() + b * y.unit(), std::move(coeffs));
}

std::optional<Rational> rational_ratio(const LogFreq& x, const LogFreq& y) {
    if (y.is_zero()) {
        throw std::domain_error("rational_ratio: divisor is the zero element");
    }
    // Candidate quotient from the first nonzero coordinate of y, then a full
    // proportionality check across all coordinates via x - q*y == 0.
    Rational q;
    if (!y.unit().is_zero()) {
        q = x.unit() / y.unit();
    } else {
        const auto& [prime, coeff] = *y.coeffs().begin();
        auto it = x.coeffs().find(prime);
        if (it == x.coeffs().end()) {
            if (x.is_zero()) {
                return Rational(0);
            }
            return std::nullopt;
        }
        q = it->second / coeff;
    }
    if (!combine(x, y, Rational(1), -q).is_zero()) {
        return std::nullopt;
    }
    return q;
}

std::optional<long> octave_shift_between(const LogFreq& x, const LogFreq& z) {
    const auto ratio = rational_ratio(x, z);
    if (!ratio) {
        return std::nullopt;
    }
    return ratio->exact_power_of_two();
}

bool is_positive(const LogFreq& x) {
    return compare(x, LogFreq()) == std::strong_ordering::greater;
}

std::string describe(const LogFreq& x) {
    if (x.is_zero()) {
        return "0";
    }
    std::string text;
    auto append = [&text](const std::string& part) {
        if (!text.empty()) {
            text += " + ";
        }
        text += part;
    };
    if (!x.unit().is_zero()) {
        append(x.unit().to_string());
    }
    // Group integer coefficients into a single ln(rational) when possible.
    if (const auto arg = as_log_argument(LogFreq(Rational(0), x.coeffs()))) {
        if (!x.coeffs().empty()) {
            append("ln(" + arg->to_string() + ")");
        }
        return text;
    }
    for (const auto& [p, c] : x.coeffs()) {
        const std::string base = "ln(" + std::to_string(p) + ")";
        append(c == Rational(1) ? base : c.to_string() + " " + base);
    }
    return text;
}

std::optional<Rational> as_log_argument(const LogFreq& x) {
    if (!x.unit().is_zero()) {
        return std::nullopt;
    }
    mpz_class num = 1;
    mpz_class den = 1;
    for (const auto& [p, c] : x.coeffs()) {
        if (!c.is_integer()) {
            return std::nullopt;
        }
        const mpz_class e = c.numerator();
        // Display-oriented guard; enormous exponents are not worth expanding.
        if (::abs(e) > 1024) {
            return std::nullopt;
        }
        mpz_class power;
        mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(p),
                      mpz_class(::abs(e)).get_ui());
        (sgn(e) >= 0 ? num : den) *= power;
    }
    return Rational(num, den);
}

}  // namespace logtone
