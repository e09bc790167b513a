#include "logtone/series.hpp"

#include <algorithm>
#include <stdexcept>

#include "logtone/factorize.hpp"

namespace logtone {

LogarithmicSeries::LogarithmicSeries(std::uint64_t start) : next_argument_(start) {
    if (start < 2) {
        throw std::domain_error("logarithmic series must start at 2 or above (ln 1 is not a frequency)");
    }
}

LogFreq LogarithmicSeries::next() {
    return ln_of(Rational(static_cast<long>(next_argument_++)));
}

LogFreq FactorialSeries::next() {
    accumulated_ = combine(accumulated_, ln_of(Rational(static_cast<long>(next_factor_++))),
                           Rational(1), Rational(1));
    return accumulated_;
}

LogFreq PrimorialSeries::next() {
    last_prime_ = next_prime(last_prime_);
    accumulated_ = combine(accumulated_, ln_of(Rational(static_cast<long>(last_prime_))),
                           Rational(1), Rational(1));
    return accumulated_;
}

std::vector<LogFreq> periodic_difference_series(const std::vector<std::uint64_t>& divisors,
                                                bool append_missing, std::size_t count) {
    if (divisors.empty()) {
        throw std::domain_error("periodic series needs at least one divisor");
    }
    for (const auto d : divisors) {
        if (d < 2) {
            throw std::domain_error("periodic series divisors must be >= 2");
        }
    }
    std::vector<LogFreq> elements;
    LogFreq accumulated;
    for (std::size_t i = 0; i < count; ++i) {
        accumulated = combine(accumulated, ln_of(Rational(static_cast<long>(divisors[i % divisors.size()]))),
                              Rational(1), Rational(1));
        elements.push_back(accumulated);
    }
    if (append_missing) {
        for (std::size_t i = 1; i < divisors.size(); ++i) {
            elements.push_back(ln_of(Rational(static_cast<long>(divisors[i]))));
        }
        std::sort(elements.begin(), elements.end(),
                  [](const LogFreq& a, const LogFreq& b) { return compare(a, b) == std::strong_ordering::less; });
        elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
        if (elements.size() > count) {
            elements.resize(count);
        }
    }
    return elements;
}

std::vector<LogFreq> generate_series(const SeriesSpec& spec, std::size_t count) {
    std::vector<LogFreq> elements;
    elements.reserve(count);
    switch (spec.kind) {
    case SeriesSpec::Kind::logarithmic: {
        LogarithmicSeries series(spec.start);
        for (std::size_t i = 0; i < count; ++i) {
            elements.push_back(series.next());
        }
        break;
    }
    case SeriesSpec::Kind::factorial: {
        FactorialSeries series;
        for (std::size_t i = 0; i < count; ++i) {
            elements.push_back(series.next());
        }
        break;
    }
    case SeriesSpec::Kind::primorial: {
        PrimorialSeries series;
        for (std::size_t i = 0; i < count; ++i) {
            elements.push_back(series.next());
        }
        break;
    }
    case SeriesSpec::Kind::periodic:
        elements = periodic_difference_series(spec.divisors, spec.append_missing, count);
        break;
    }
    return elements;
}

}  // namespace logtone
