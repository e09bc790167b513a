#pragma once

#include <cstdint>
#include <vector>

#include "logtone/log_freq.hpp"

namespace logtone {

struct SeriesSpec {
    enum class Kind { logarithmic, factorial, primorial, periodic };
    Kind kind = Kind::logarithmic;
    std::uint64_t start = 3;                  // logarithmic
    std::vector<std::uint64_t> divisors;      // periodic
    bool append_missing = false;              // periodic
};

// ln(start), ln(start+1), ln(start+2), ...
class LogarithmicSeries {
public:
    explicit LogarithmicSeries(std::uint64_t start = 3);
    LogFreq next();

private:
    std::uint64_t next_argument_;
};

// ln(2!), ln(3!), ln(4!), ...
class FactorialSeries {
public:
    LogFreq next();

private:
    LogFreq accumulated_;
    std::uint64_t next_factor_ = 2;
};

// ln(2), ln(2*3), ln(2*3*5), ... — logs of the primorials.
class PrimorialSeries {
public:
    LogFreq next();

private:
    LogFreq accumulated_;
    std::uint64_t last_prime_ = 1;
};

// Cumulative products cycling through the divisor list:
// ln(d1), ln(d1 d2), ..., ln(d1 ... dk), ln(d1^2 d2 ... dk), ...
// With append_missing, ln(d2) ... ln(dk) are merged in; the result is sorted
// ascending, deduplicated and truncated to `count` elements.
std::vector<LogFreq> periodic_difference_series(const std::vector<std::uint64_t>& divisors,
                                                bool append_missing, std::size_t count);

std::vector<LogFreq> generate_series(const SeriesSpec& spec, std::size_t count);

}  // namespace logtone
