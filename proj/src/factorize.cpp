#include "logtone/factorize.hpp"

#include <stdexcept>

namespace logtone {

std::map<std::uint64_t, unsigned> factorize(std::uint64_t n) {
    if (n == 0) {
        throw std::domain_error("factorize: argument must be positive");
    }
    if (n > kFactorizeBound) {
        throw std::range_error("factorize: argument exceeds trial-division bound 10^12");
    }
    std::map<std::uint64_t, unsigned> factors;
    auto strip = [&](std::uint64_t p) {
        while (n % p == 0) {
            ++factors[p];
            n /= p;
        }
    };
    strip(2);
    strip(3);
    for (std::uint64_t d = 5; d * d <= n; d += 6) {
        strip(d);
        strip(d + 2);
    }
    if (n > 1) {
        ++factors[n];
    }
    return factors;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) {
        return false;
    }
    if (n % 2 == 0) {
        return n == 2;
    }
    if (n % 3 == 0) {
        return n == 3;
    }
    for (std::uint64_t d = 5; d * d <= n; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0) {
            return false;
        }
    }
    return true;
}

std::uint64_t next_prime(std::uint64_t n) {
    std::uint64_t candidate = n + 1;
    while (!is_prime(candidate)) {
        ++candidate;
    }
    return candidate;
}

}  // namespace logtone
