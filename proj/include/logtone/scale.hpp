#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "logtone/log_freq.hpp"

namespace logtone {

// A finite, strictly increasing set of positive frequencies.
class Scale {
public:
    Scale() = default;

    // Degrees must already be strictly increasing and positive.
    Scale(std::vector<LogFreq> degrees, std::string label);

    // Sorts and deduplicates, then validates positivity.
    static Scale from_unsorted(std::vector<LogFreq> degrees, std::string label);

    const std::vector<LogFreq>& degrees() const { return degrees_; }
    const std::string& label() const { return label_; }
    std::size_t size() const { return degrees_.size(); }
    bool empty() const { return degrees_.empty(); }

private:
    std::vector<LogFreq> degrees_;
    std::string label_;
};

// One line of the normalized three-column view: closed form of f_i/f_1, the
// decimal value of that ratio, and the interval f_i : f_1 in cents.
struct ScaleRow {
    std::string closed_form;
    double decimal = 0.0;
    double cents = 0.0;
};

// ln(k) for m <= k <= m^2; spans exactly one octave.
Scale schneider_octave_scale(std::uint64_t m);

struct RootApproximationScale {
    Scale scale;
    // Set when n^(2^k) == m exactly; every interval is then rational.
    bool exact_power = false;
};

// ln(n^j * m) for 0 <= j < 2^k, plus ln(n^(2^(k+1))) and ln(m^2).
RootApproximationScale root_approximation_scale(std::uint64_t n, unsigned k, std::uint64_t m);

// ln(d * N) over the positive divisors d of N, plus ln(p^(2^b)) for each
// prime p | N with b = ceil(log2(log_p N)); N must be composite.
Scale factorization_scale(std::uint64_t n);

// ln(t) over t = prod bases[i]^(a[i]) with |a[i]| <= heights[i],
// gcd(|a[1]|, ..., |a[k]|) = 1 and t > 1.
Scale projective_scale(const std::vector<std::uint64_t>& bases,
                       const std::vector<unsigned>& heights);

// Normalized table of the scale: row i describes f_i relative to f_1.
std::vector<ScaleRow> normalize_rows(const Scale& scale);

}  // namespace logtone
