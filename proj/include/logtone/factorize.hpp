#pragma once

#include <cstdint>
#include <map>

namespace logtone {

// Largest argument accepted by factorize(); trial division stays fast up to
// here (square root of the bound is one million).
inline constexpr std::uint64_t kFactorizeBound = 1'000'000'000'000ULL;

// Prime factorization by trial division. Returns prime -> exponent with the
// empty map for n = 1. Throws std::domain_error for n = 0 and
// std::range_error above kFactorizeBound.
std::map<std::uint64_t, unsigned> factorize(std::uint64_t n);

bool is_prime(std::uint64_t n);

// Smallest prime strictly greater than n.
std::uint64_t next_prime(std::uint64_t n);

}  // namespace logtone
