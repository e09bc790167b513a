#pragma once

// Test-only oracles. These re-derive results along paths that are
// deliberately independent of the library code they check: coordinate-wise
// proportionality instead of rational_ratio, power-of-two by repeated
// halving instead of popcount, and a fresh pair enumeration for coverage.

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "logtone/scale.hpp"

namespace oracle {

using logtone::LogFreq;
using logtone::Rational;
using logtone::Scale;

// Coordinate map over the basis {1} u {ln p}; key 0 stands for the unit.
using Coords = std::map<std::uint64_t, Rational>;

inline Coords coords_of(const LogFreq& x) {
    Coords coords;
    if (!x.unit().is_zero()) {
        coords[0] = x.unit();
    }
    for (const auto& [prime, coeff] : x.coeffs()) {
        coords[prime] = coeff;
    }
    return coords;
}

inline Coords subtract(const Coords& a, const Coords& b) {
    Coords result = a;
    for (const auto& [key, value] : b) {
        auto it = result.find(key);
        if (it == result.end()) {
            result[key] = -value;
        } else {
            it->second = it->second - value;
            if (it->second.is_zero()) {
                result.erase(it);
            }
        }
    }
    return result;
}

// q with x == q * z, checked coordinate by coordinate.
inline std::optional<Rational> proportion(const Coords& x, const Coords& z) {
    if (z.empty()) {
        return std::nullopt;
    }
    const Rational q = [&] {
        const auto& [key, value] = *z.begin();
        const auto it = x.find(key);
        return it == x.end() ? Rational(0) : it->second / value;
    }();
    for (const auto& [key, value] : z) {
        const auto it = x.find(key);
        const Rational expected = q * value;
        if (it == x.end() ? !expected.is_zero() : !(it->second == expected)) {
            return std::nullopt;
        }
    }
    for (const auto& [key, value] : x) {
        if (!z.contains(key) && !value.is_zero()) {
            return std::nullopt;
        }
    }
    return q;
}

// t with q == 2^t, by repeated halving of whichever side exceeds one.
inline std::optional<long> power_of_two(const Rational& q) {
    if (q.sign() <= 0) {
        return std::nullopt;
    }
    mpz_class num = q.numerator();
    mpz_class den = q.denominator();
    long t = 0;
    while (num % 2 == 0) {
        num /= 2;
        ++t;
    }
    while (den % 2 == 0) {
        den /= 2;
        --t;
    }
    if (num != 1 || den != 1) {
        return std::nullopt;
    }
    return t;
}

struct PairCoverage {
    std::size_t low = 0;   // 1-based
    std::size_t high = 0;
    std::vector<std::pair<std::size_t, long>> matches;  // (degree 1-based, shift)
};

inline std::vector<PairCoverage> coverage(const Scale& scale) {
    const auto& degrees = scale.degrees();
    std::vector<Coords> coords;
    coords.reserve(degrees.size());
    for (const auto& degree : degrees) {
        coords.push_back(coords_of(degree));
    }
    std::vector<PairCoverage> pairs;
    for (std::size_t i = 0; i < degrees.size(); ++i) {
        for (std::size_t j = i + 1; j < degrees.size(); ++j) {
            PairCoverage pair{i + 1, j + 1, {}};
            const Coords difference = subtract(coords[j], coords[i]);
            for (std::size_t z = 0; z < degrees.size(); ++z) {
                if (const auto q = proportion(difference, coords[z])) {
                    if (const auto t = power_of_two(*q)) {
                        pair.matches.emplace_back(z + 1, *t);
                    }
                }
            }
            pairs.push_back(std::move(pair));
        }
    }
    return pairs;
}

// Random exact scales: degrees are sums of up to four terms c * ln p with
// p <= 13 and |c| <= 4, occasionally plus a rational unit term, filtered to
// positive values and sorted.
class RandomScaleGenerator {
public:
    explicit RandomScaleGenerator(std::uint64_t seed = 20260810) : rng_(seed) {}

    Scale next() {
        static const std::uint64_t kPrimes[] = {2, 3, 5, 7, 11, 13};
        std::uniform_int_distribution<int> degree_count(2, 5);
        std::uniform_int_distribution<int> term_count(1, 4);
        std::uniform_int_distribution<int> coeff(-4, 4);
        std::uniform_int_distribution<std::size_t> prime_index(0, 5);
        std::uniform_int_distribution<int> unit_num(1, 8);
        std::uniform_int_distribution<int> unit_den(1, 4);
        std::uniform_int_distribution<int> percent(0, 99);

        while (true) {
            std::vector<LogFreq> degrees;
            const int wanted = degree_count(rng_);
            for (int d = 0; d < wanted; ++d) {
                LogFreq degree;
                const int terms = term_count(rng_);
                for (int t = 0; t < terms; ++t) {
                    const int c = coeff(rng_);
                    if (c == 0) {
                        continue;
                    }
                    degree = combine(degree, logtone::ln_of(Rational(static_cast<long>(kPrimes[prime_index(rng_)]))),
                                     Rational(1), Rational(c));
                }
                if (percent(rng_) < 20) {
                    degree = combine(degree, LogFreq::from_unit(Rational(unit_num(rng_), unit_den(rng_))),
                                     Rational(1), Rational(1));
                }
                if (logtone::is_positive(degree)) {
                    degrees.push_back(degree);
                }
            }
            if (degrees.size() < 2) {
                continue;
            }
            Scale scale = Scale::from_unsorted(std::move(degrees), "random scale");
            if (scale.size() >= 2) {
                return scale;
            }
        }
    }

private:
    std::mt19937_64 rng_;
};

}  // namespace oracle
