#include "logtone/scale.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <stdexcept>

#include "logtone/factorize.hpp"

namespace logtone {
namespace {

void validate_degrees(const std::vector<LogFreq>& degrees) {
    for (std::size_t i = 0; i < degrees.size(); ++i) {
        if (!is_positive(degrees[i])) {
            throw std::domain_error("scale degrees must be positive frequencies");
        }
        if (i > 0 && compare(degrees[i - 1], degrees[i]) != std::strong_ordering::less) {
            throw std::domain_error("scale degrees must be strictly increasing");
        }
    }
}

mpz_class integer_power(std::uint64_t base, unsigned long exponent) {
    mpz_class result;
    mpz_ui_pow_ui(result.get_mpz_t(), base, exponent);
    return result;
}

// ln(base^exponent) as exponent * ln(base), without expanding the power.
LogFreq ln_of_power(std::uint64_t base, unsigned long exponent) {
    return combine(ln_of(Rational(static_cast<long>(base))), LogFreq(),
                   Rational(static_cast<long>(exponent)), Rational(0));
}

std::vector<std::uint64_t> divisors_of(std::uint64_t n) {
    const auto factors = factorize(n);
    std::vector<std::uint64_t> divisors{1};
    for (const auto& [p, e] : factors) {
        const std::size_t existing = divisors.size();
        std::uint64_t power = 1;
        for (unsigned i = 1; i <= e; ++i) {
            power *= p;
            for (std::size_t j = 0; j < existing; ++j) {
                divisors.push_back(divisors[j] * power);
            }
        }
    }
    std::sort(divisors.begin(), divisors.end());
    return divisors;
}

std::string render_log_base(const Rational& base) {
    const std::string text = base.to_string();
    return base.is_integer() ? text : "{" + text + "}";
}

}  // namespace

Scale::Scale(std::vector<LogFreq> degrees, std::string label)
    : degrees_(std::move(degrees)), label_(std::move(label)) {
    validate_degrees(degrees_);
}

Scale Scale::from_unsorted(std::vector<LogFreq> degrees, std::string label) {
    std::sort(degrees.begin(), degrees.end(),
              [](const LogFreq& a, const LogFreq& b) { return compare(a, b) == std::strong_ordering::less; });
    degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());
    return Scale(std::move(degrees), std::move(label));
}

Scale schneider_octave_scale(std::uint64_t m) {
    if (m < 2) {
        throw std::domain_error("octave-dividing scale requires m >= 2");
    }
    if (m > 1'000'000) {
        throw std::range_error("octave-dividing scale: m^2 exceeds the factorization bound");
    }
    std::vector<LogFreq> degrees;
    for (std::uint64_t k = m; k <= m * m; ++k) {
        degrees.push_back(ln_of(Rational(static_cast<long>(k))));
    }
    return Scale(std::move(degrees), "octave scale m=" + std::to_string(m));
}

RootApproximationScale root_approximation_scale(std::uint64_t n, unsigned k, std::uint64_t m) {
    if (n < 2 || m < 2 || k < 1) {
        throw std::domain_error("root approximation scale requires n, m >= 2 and k >= 1");
    }
    if (k > 20) {
        throw std::range_error("root approximation scale: 2^k degrees is too large");
    }
    const LogFreq ln_n = ln_of(Rational(static_cast<long>(n)));
    const LogFreq ln_m = ln_of(Rational(static_cast<long>(m)));
    std::vector<LogFreq> degrees;
    const unsigned long count = 1UL << k;
    for (unsigned long j = 0; j < count; ++j) {
        degrees.push_back(combine(ln_n, ln_m, Rational(static_cast<long>(j)), Rational(1)));
    }
    degrees.push_back(combine(ln_n, LogFreq(), Rational(static_cast<long>(2 * count)), Rational(0)));
    degrees.push_back(combine(ln_m, LogFreq(), Rational(2), Rational(0)));

    RootApproximationScale result;
    result.exact_power = integer_power(n, count) == mpz_class(static_cast<unsigned long>(m));
    result.scale = Scale::from_unsorted(std::move(degrees),
                                        "root approximation n=" + std::to_string(n) +
                                            " k=" + std::to_string(k) + " m=" + std::to_string(m));
    return result;
}

Scale factorization_scale(std::uint64_t n) {
    const auto factors = factorize(n);
    unsigned multiplicity = 0;
    for (const auto& [p, e] : factors) {
        multiplicity += e;
    }
    if (multiplicity < 2) {
        throw std::domain_error("factorization scale requires a composite argument");
    }
    const LogFreq ln_n = ln_of(Rational(static_cast<long>(n)));
    std::vector<LogFreq> degrees;
    for (const auto d : divisors_of(n)) {
        degrees.push_back(combine(ln_n, ln_of(Rational(static_cast<long>(d))), Rational(1), Rational(1)));
    }
    for (const auto& [p, e] : factors) {
        // b = ceil(log2(log_p n)): the smallest b with p^(2^b) >= n, decided
        // in exact integer arithmetic.
        unsigned long b = 1;
        while (integer_power(p, 1UL << b) < n) {
            ++b;
        }
        degrees.push_back(ln_of_power(p, 1UL << b));
    }
    return Scale::from_unsorted(std::move(degrees), "factorization scale N=" + std::to_string(n));
}

Scale projective_scale(const std::vector<std::uint64_t>& bases,
                       const std::vector<unsigned>& heights) {
    if (bases.empty() || bases.size() != heights.size()) {
        throw std::domain_error("projective scale needs matching nonempty base and height lists");
    }
    for (std::size_t i = 0; i < bases.size(); ++i) {
        if (bases[i] < 2) {
            throw std::domain_error("projective scale bases must be >= 2");
        }
        for (std::size_t j = i + 1; j < bases.size(); ++j) {
            if (bases[i] == bases[j]) {
                throw std::domain_error("projective scale bases must be pairwise distinct");
            }
        }
    }
    std::uint64_t combinations = 1;
    for (const auto h : heights) {
        combinations *= 2ULL * h + 1;
        if (combinations > 2'000'000ULL) {
            throw std::range_error("projective scale exponent box is too large");
        }
    }

    std::vector<long> exponents(bases.size(), 0);
    std::vector<LogFreq> degrees;
    for (std::uint64_t index = 0; index < combinations; ++index) {
        std::uint64_t rest = index;
        for (std::size_t i = 0; i < bases.size(); ++i) {
            const std::uint64_t span = 2ULL * heights[i] + 1;
            exponents[i] = static_cast<long>(rest % span) - static_cast<long>(heights[i]);
            rest /= span;
        }
        unsigned long g = 0;
        for (const auto a : exponents) {
            g = std::gcd(g, static_cast<unsigned long>(a < 0 ? -a : a));
        }
        if (g != 1) {
            continue;
        }
        mpz_class num = 1;
        mpz_class den = 1;
        for (std::size_t i = 0; i < bases.size(); ++i) {
            const auto power = integer_power(bases[i], static_cast<unsigned long>(std::labs(exponents[i])));
            (exponents[i] >= 0 ? num : den) *= power;
        }
        const Rational t(num, den);
        if (t <= Rational(1)) {
            continue;
        }
        degrees.push_back(ln_of(t));
    }
    return Scale::from_unsorted(std::move(degrees), "projective scale");
}

std::vector<ScaleRow> normalize_rows(const Scale& scale) {
    if (scale.empty()) {
        throw std::domain_error("normalize_rows: scale is empty");
    }
    const LogFreq& base = scale.degrees().front();
    if (base.is_zero()) {
        throw std::domain_error("normalize_rows: first degree is zero");
    }
    const auto base_argument = as_log_argument(base);

    std::vector<ScaleRow> rows;
    rows.reserve(scale.size());
    rows.push_back(ScaleRow{"1", 1.0, 0.0});
    for (std::size_t i = 1; i < scale.size(); ++i) {
        const LogFreq& degree = scale.degrees()[i];
        ScaleRow row;
        row.decimal = value_ratio(degree, base);
        row.cents = cents_between(degree, base);
        if (const auto ratio = rational_ratio(degree, base)) {
            row.closed_form = ratio->to_string();
        } else if (base_argument) {
            if (const auto argument = as_log_argument(degree)) {
                row.closed_form = "log_" + render_log_base(*base_argument) +
                                  "(" + argument->to_string() + ")";
            }
        }
        if (row.closed_form.empty()) {
            // Neither a rational multiple nor a ratio of logs of rationals.
            char buffer[32];
            std::snprintf(buffer, sizeof(buffer), "~%.6f", row.decimal);
            row.closed_form = buffer;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace logtone
