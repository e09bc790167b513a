#include "logtone/analysis.hpp"

#include <algorithm>
#include <stdexcept>

#include "logtone/factorize.hpp"

namespace logtone {
namespace {

const LogFreq kZero{};

std::optional<std::string> interval_name(const Rational& ratio) {
    static const std::vector<std::pair<Rational, std::string>> kNames = {
        {Rational(2, 1), "octave"},      {Rational(3, 2), "fifth"},
        {Rational(4, 3), "fourth"},      {Rational(5, 4), "major third"},
        {Rational(6, 5), "minor third"}, {Rational(5, 3), "major sixth"},
        {Rational(8, 5), "minor sixth"}, {Rational(9, 8), "major second"},
    };
    for (const auto& [value, name] : kNames) {
        if (ratio == value) {
            return name;
        }
    }
    return std::nullopt;
}

std::optional<std::string> movement_name(const Rational& ratio) {
    if (ratio == Rational(1)) {
        return "unison";
    }
    const bool upward = ratio > Rational(1);
    if (const auto name = interval_name(upward ? ratio : ratio.reciprocal())) {
        return (upward ? "up a " : "down a ") + *name;
    }
    return std::nullopt;
}

}  // namespace

CoverageReport coverage_report(const Scale& scale) {
    const auto& degrees = scale.degrees();
    const std::size_t n = degrees.size();
    CoverageReport report;
    if (n < 2) {
        return report;
    }
    report.total_pairs = n * (n - 1) / 2;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            CoveragePair pair;
            pair.low = i + 1;
            pair.high = j + 1;
            pair.difference = combine(degrees[j], degrees[i], Rational(1), Rational(-1));
            for (std::size_t z = 0; z < n; ++z) {
                if (const auto t = octave_shift_between(pair.difference, degrees[z])) {
                    pair.matches.push_back(CoverageMatch{z + 1, *t});
                }
            }
            if (pair.covered()) {
                ++report.covered_count;
            }
            report.pairs.push_back(std::move(pair));
        }
    }
    return report;
}

CompletenessVerdict is_complete(const Scale& scale) {
    if (scale.empty()) {
        throw std::domain_error("is_complete: scale is empty");
    }
    CompletenessVerdict verdict;
    const CoverageReport report = coverage_report(scale);
    for (const auto& pair : report.pairs) {
        if (!pair.covered()) {
            verdict.first_uncovered = pair;
            return verdict;
        }
    }
    verdict.complete = true;
    verdict.certificate = rationality_certificate(scale);
    return verdict;
}

Certificate rationality_certificate(const Scale& scale) {
    const auto& f = scale.degrees();
    const std::size_t n = f.size();
    if (n == 0) {
        throw std::domain_error("rationality_certificate: scale is empty");
    }
    Certificate certificate;
    if (n == 1) {
        certificate.ratios = {Rational(1)};
        return certificate;
    }

    const LogFreq& top = f[n - 1];

    // h(i) = smallest j with f_n - f_i = 2^(t_i) f_j; h(n) = n.
    std::vector<std::size_t> image(n, n - 1);
    std::vector<long> shift(n, 0);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const LogFreq difference = combine(top, f[i], Rational(1), Rational(-1));
        bool matched = false;
        for (std::size_t z = 0; z < n && !matched; ++z) {
            if (const auto t = octave_shift_between(difference, f[z])) {
                image[i] = z;
                shift[i] = *t;
                matched = true;
            }
        }
        if (!matched) {
            throw std::domain_error("not a complete difference tone scale: no octave match for a top difference");
        }
    }

    // Solve q_i = 1 - 2^(t_i) q_h(i) with q_n = 1. Every index is periodic or
    // preperiodic under h, so each orbit reaches either a known value or a
    // cycle whose single linear closure equation determines it.
    std::vector<std::optional<Rational>> q(n);
    q[n - 1] = Rational(1);
    std::vector<long> position(n, -1);
    for (std::size_t start = 0; start + 1 < n; ++start) {
        if (q[start]) {
            continue;
        }
        std::vector<std::size_t> path;
        std::size_t cursor = start;
        while (!q[cursor] && position[cursor] < 0) {
            position[cursor] = static_cast<long>(path.size());
            path.push_back(cursor);
            cursor = image[cursor];
        }
        if (!q[cursor]) {
            // New cycle entered at `cursor`. Compose the relations once
            // around: q_c = a + b q_c.
            const auto cycle_begin = static_cast<std::size_t>(position[cursor]);
            Rational a(0);
            Rational b(1);
            for (std::size_t k = cycle_begin; k < path.size(); ++k) {
                a = a + b;
                b = -(b * Rational::pow2(shift[path[k]]));
            }
            if (b != Rational(1)) {
                q[cursor] = (a / (Rational(1) - b));
            } else {
                // Degenerate closure (the loop multiplier is exactly 1, e.g.
                // two indices swapped with shift 0); the cycle equation pins
                // nothing, so fall back to the decidable direct ratio.
                for (std::size_t k = cycle_begin; k < path.size(); ++k) {
                    const auto direct = rational_ratio(f[path[k]], top);
                    if (!direct) {
                        throw std::domain_error(
                            "not a complete difference tone scale: degenerate relation cycle over an irrational interval");
                    }
                    q[path[k]] = *direct;
                }
            }
            // Forward propagation around the cycle.
            for (std::size_t k = cycle_begin; k + 1 < path.size(); ++k) {
                if (!q[path[k + 1]]) {
                    q[path[k + 1]] = (Rational(1) - *q[path[k]]) * Rational::pow2(-shift[path[k]]);
                }
            }
        }
        // Back-substitute the preperiodic tail.
        for (std::size_t k = path.size(); k-- > 0;) {
            if (!q[path[k]]) {
                q[path[k]] = Rational(1) - Rational::pow2(shift[path[k]]) * (*q[image[path[k]]]);
            }
        }
        for (const auto node : path) {
            position[node] = -1;
        }
    }

    // Cross-validate every ratio against the direct proportionality test.
    certificate.ratios.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto direct = rational_ratio(f[i], top);
        if (!direct || !(*direct == *q[i])) {
            throw std::domain_error(
                "not a complete difference tone scale: solved ratios fail cross-validation");
        }
        certificate.ratios.push_back(*q[i]);
    }
    for (std::size_t i = 0; i + 1 < n; ++i) {
        certificate.h_map.push_back(HMapEntry{i + 1, image[i] + 1, shift[i]});
    }
    return certificate;
}

Chord factored_chord(std::uint64_t a) {
    if (a < 2) {
        throw std::domain_error("factored_chord: argument must be >= 2");
    }
    Chord chord;
    chord.value = a;
    chord.exponents = factorize(a);
    for (const auto& [p, e] : chord.exponents) {
        chord.tones.push_back(combine(ln_of(Rational(static_cast<long>(p))), kZero,
                                      Rational(static_cast<long>(e)), Rational(0)));
    }
    std::sort(chord.tones.begin(), chord.tones.end(),
              [](const LogFreq& x, const LogFreq& y) { return compare(x, y) == std::strong_ordering::less; });
    chord.proper = chord.exponents.size() >= 3;
    return chord;
}

std::vector<VoiceMovement> chord_transition(std::uint64_t a1, std::uint64_t a2) {
    const Chord from = factored_chord(a1);
    const Chord to = factored_chord(a2);

    std::vector<VoiceMovement> movements;
    std::vector<std::pair<std::uint64_t, unsigned>> only_from;
    std::vector<std::pair<std::uint64_t, unsigned>> only_to;
    for (const auto& [p, e] : from.exponents) {
        const auto it = to.exponents.find(p);
        if (it == to.exponents.end()) {
            only_from.emplace_back(p, e);
            continue;
        }
        VoiceMovement movement;
        movement.kind = VoiceMovement::Kind::rational;
        movement.from_prime = p;
        movement.to_prime = p;
        movement.from_exponent = e;
        movement.to_exponent = it->second;
        movement.ratio = Rational(static_cast<long>(it->second), static_cast<long>(e));
        movement.name = movement_name(*movement.ratio);
        movements.push_back(std::move(movement));
    }
    for (const auto& [p, e] : to.exponents) {
        if (!from.exponents.contains(p)) {
            only_to.emplace_back(p, e);
        }
    }

    // Leftover primes pair up in ascending order; the interval between
    // a*ln(p) and a'*ln(p') for distinct primes is never rational, but the
    // proportionality test stays the arbiter.
    const std::size_t paired = std::min(only_from.size(), only_to.size());
    for (std::size_t k = 0; k < paired; ++k) {
        const auto [p1, e1] = only_from[k];
        const auto [p2, e2] = only_to[k];
        VoiceMovement movement;
        movement.from_prime = p1;
        movement.to_prime = p2;
        movement.from_exponent = e1;
        movement.to_exponent = e2;
        const LogFreq tone_from = combine(ln_of(Rational(static_cast<long>(p1))), kZero,
                                          Rational(static_cast<long>(e1)), Rational(0));
        const LogFreq tone_to = combine(ln_of(Rational(static_cast<long>(p2))), kZero,
                                        Rational(static_cast<long>(e2)), Rational(0));
        if (const auto ratio = rational_ratio(tone_to, tone_from)) {
            movement.kind = VoiceMovement::Kind::rational;
            movement.ratio = ratio;
            movement.name = movement_name(*ratio);
        } else {
            movement.kind = VoiceMovement::Kind::irrational;
        }
        movements.push_back(std::move(movement));
    }
    for (std::size_t k = paired; k < only_from.size(); ++k) {
        VoiceMovement movement;
        movement.kind = VoiceMovement::Kind::exits;
        movement.from_prime = only_from[k].first;
        movement.from_exponent = only_from[k].second;
        movements.push_back(std::move(movement));
    }
    for (std::size_t k = paired; k < only_to.size(); ++k) {
        VoiceMovement movement;
        movement.kind = VoiceMovement::Kind::enters;
        movement.to_prime = only_to[k].first;
        movement.to_exponent = only_to[k].second;
        movements.push_back(std::move(movement));
    }
    return movements;
}

}  // namespace logtone
