#include <doctest.h>

#include "logtone/analysis.hpp"
#include "support/oracles.hpp"

using logtone::Certificate;
using logtone::combine;
using logtone::CoverageReport;
using logtone::factored_chord;
using logtone::LogFreq;
using logtone::ln_of;
using logtone::Rational;
using logtone::Scale;

namespace {

const Scale kWorked({ln_of(16), ln_of(32), ln_of(64)}, "worked example");

Scale projective_example() {
    return logtone::projective_scale({2, 3}, {2, 1});
}

void check_against_oracle(const Scale& scale) {
    const CoverageReport report = logtone::coverage_report(scale);
    const auto expected = oracle::coverage(scale);
    REQUIRE(report.pairs.size() == expected.size());
    std::size_t covered = 0;
    for (std::size_t k = 0; k < expected.size(); ++k) {
        CHECK(report.pairs[k].low == expected[k].low);
        CHECK(report.pairs[k].high == expected[k].high);
        REQUIRE(report.pairs[k].matches.size() == expected[k].matches.size());
        for (std::size_t m = 0; m < expected[k].matches.size(); ++m) {
            CHECK(report.pairs[k].matches[m].degree == expected[k].matches[m].first);
            CHECK(report.pairs[k].matches[m].shift == expected[k].matches[m].second);
        }
        covered += !expected[k].matches.empty();
    }
    CHECK(report.covered_count == covered);
}

// Symbolic soundness of a certificate against its scale.
void check_certificate(const Scale& scale, const Certificate& certificate) {
    const auto& f = scale.degrees();
    const std::size_t n = f.size();
    REQUIRE(certificate.ratios.size() == n);
    CHECK(certificate.ratios.back() == Rational(1));
    for (std::size_t i = 0; i < n; ++i) {
        // f_i == q_i * f_n, exactly.
        CHECK(combine(f[i], f[n - 1], Rational(1), -certificate.ratios[i]).is_zero());
    }
    REQUIRE(certificate.h_map.size() == (n == 0 ? 0 : n - 1));
    for (const auto& entry : certificate.h_map) {
        REQUIRE(entry.index >= 1);
        REQUIRE(entry.image >= 1);
        REQUIRE(entry.index <= n);
        REQUIRE(entry.image <= n);
        // f_n - f_i == 2^t * f_h(i), exactly.
        const LogFreq difference = combine(f[n - 1], f[entry.index - 1], Rational(1), Rational(-1));
        CHECK(combine(difference, f[entry.image - 1], Rational(1), -Rational::pow2(entry.shift)).is_zero());
    }
}

}  // namespace

TEST_CASE("coverage of the worked three-degree scale") {
    const CoverageReport report = logtone::coverage_report(kWorked);
    CHECK(report.total_pairs == 3);
    CHECK(report.covered_count == 3);

    // (1,2): ln 2 = 2^-2 ln 16; (1,3): ln 4 = 2^-1 ln 16; (2,3): ln 2 again.
    REQUIRE(report.pairs.size() == 3);
    CHECK(report.pairs[0].difference == ln_of(2));
    REQUIRE(report.pairs[0].matches.size() == 1);
    CHECK(report.pairs[0].matches[0].degree == 1);
    CHECK(report.pairs[0].matches[0].shift == -2);
    CHECK(report.pairs[1].difference == ln_of(4));
    CHECK(report.pairs[1].matches[0].shift == -1);
    CHECK(report.pairs[2].difference == ln_of(2));

    check_against_oracle(kWorked);
}

TEST_CASE("coverage edge cases") {
    const CoverageReport empty = logtone::coverage_report(Scale());
    CHECK(empty.total_pairs == 0);
    CHECK(empty.pairs.empty());

    const CoverageReport single = logtone::coverage_report(Scale({ln_of(7)}, "one"));
    CHECK(single.total_pairs == 0);

    const Scale pair({ln_of(3), ln_of(4)}, "first two");
    const CoverageReport report = logtone::coverage_report(pair);
    CHECK(report.total_pairs == 1);
    CHECK(report.covered_count == 0);
    CHECK(report.pairs[0].difference == ln_of(Rational(4, 3)));
}

TEST_CASE("projective example has exactly three uncovered pairs") {
    // The two differences involving the lowest degree, ln(9/8) and ln(9/2),
    // plus ln(8) from the pair (ln(3/2), ln(12)).
    const CoverageReport report = logtone::coverage_report(projective_example());
    CHECK(report.total_pairs == 15);
    std::vector<LogFreq> uncovered;
    for (const auto& pair : report.pairs) {
        if (!pair.covered()) {
            uncovered.push_back(pair.difference);
        }
    }
    REQUIRE(uncovered.size() == 3);
    CHECK(uncovered[0] == ln_of(Rational(9, 8)));
    CHECK(uncovered[1] == ln_of(Rational(9, 2)));
    CHECK(uncovered[2] == ln_of(8));

    check_against_oracle(projective_example());
}

TEST_CASE("completeness verdicts") {
    const auto verdict = logtone::is_complete(kWorked);
    REQUIRE(verdict.complete);
    REQUIRE(verdict.certificate.has_value());
    CHECK(verdict.certificate->ratios ==
          std::vector<Rational>{Rational(2, 3), Rational(5, 6), Rational(1)});
    // h fixes index 1 in a one-step cycle and sends 2 -> 1 preperiodically.
    REQUIRE(verdict.certificate->h_map.size() == 2);
    CHECK(verdict.certificate->h_map[0].index == 1);
    CHECK(verdict.certificate->h_map[0].image == 1);
    CHECK(verdict.certificate->h_map[0].shift == -1);
    CHECK(verdict.certificate->h_map[1].index == 2);
    CHECK(verdict.certificate->h_map[1].image == 1);
    CHECK(verdict.certificate->h_map[1].shift == -2);
    check_certificate(kWorked, *verdict.certificate);

    const auto incomplete = logtone::is_complete(logtone::schneider_octave_scale(4));
    REQUIRE_FALSE(incomplete.complete);
    REQUIRE(incomplete.first_uncovered.has_value());
    CHECK(incomplete.first_uncovered->low == 1);
    CHECK(incomplete.first_uncovered->high == 2);
    CHECK(incomplete.first_uncovered->difference == ln_of(Rational(5, 4)));

    const auto vacuous = logtone::is_complete(Scale({ln_of(7)}, "one"));
    REQUIRE(vacuous.complete);
    CHECK(vacuous.certificate->ratios == std::vector<Rational>{Rational(1)});

    CHECK_THROWS_AS(logtone::is_complete(Scale()), std::domain_error);
}

TEST_CASE("certificates survive degenerate relation cycles") {
    // {1/4, 3/4, 1}: h swaps indices 1 and 2 with shift 0, so the loop
    // multiplier is exactly 1 and the cycle equation alone pins nothing.
    const Scale units({LogFreq::from_unit(Rational(1, 4)), LogFreq::from_unit(Rational(3, 4)),
                       LogFreq::from_unit(Rational(1))},
                      "degenerate");
    const auto verdict = logtone::is_complete(units);
    REQUIRE(verdict.complete);
    CHECK(verdict.certificate->ratios ==
          std::vector<Rational>{Rational(1, 4), Rational(3, 4), Rational(1)});
    check_certificate(units, *verdict.certificate);
    check_against_oracle(units);
}

TEST_CASE("certificates of longer rational scales") {
    // Harmonic prefix: {q, 2q, 3q, 4q, 5q} is complete.
    std::vector<LogFreq> degrees;
    for (long k = 1; k <= 5; ++k) {
        degrees.push_back(LogFreq::from_unit(Rational(2 * k, 3)));
    }
    const Scale harmonic(degrees, "harmonic prefix");
    const auto verdict = logtone::is_complete(harmonic);
    REQUIRE(verdict.complete);
    check_certificate(harmonic, *verdict.certificate);
    for (long k = 1; k <= 5; ++k) {
        CHECK(verdict.certificate->ratios[static_cast<std::size_t>(k - 1)] == Rational(k, 5));
    }
    check_against_oracle(harmonic);
}

TEST_CASE("certificate of an incomplete scale is a contract violation") {
    CHECK_THROWS_AS(logtone::rationality_certificate(Scale({ln_of(3), ln_of(4)}, "incomplete")),
                    std::domain_error);
    CHECK_THROWS_AS(logtone::rationality_certificate(Scale()), std::domain_error);
}

TEST_CASE("factored chords") {
    const auto chord = factored_chord(2016);
    CHECK(chord.exponents ==
          std::map<std::uint64_t, unsigned>{{2, 5}, {3, 2}, {7, 1}});
    REQUIRE(chord.tones.size() == 3);
    // Ascending by value: ln 7 < 2 ln 3 < 5 ln 2.
    CHECK(chord.tones[0] == ln_of(7));
    CHECK(chord.tones[1] == combine(ln_of(3), LogFreq(), Rational(2), Rational(0)));
    CHECK(chord.tones[2] == combine(ln_of(2), LogFreq(), Rational(5), Rational(0)));
    CHECK(chord.proper);

    const auto second = factored_chord(4752);
    CHECK(second.exponents ==
          std::map<std::uint64_t, unsigned>{{2, 4}, {3, 3}, {11, 1}});
    CHECK(second.proper);

    // The exponent map reconstructs the integer uniquely.
    for (const auto& each : {chord, second, factored_chord(8)}) {
        std::uint64_t product = 1;
        for (const auto& [p, e] : each.exponents) {
            for (unsigned i = 0; i < e; ++i) {
                product *= p;
            }
        }
        CHECK(product == each.value);
    }

    const auto power = factored_chord(8);
    CHECK(power.exponents == std::map<std::uint64_t, unsigned>{{2, 3}});
    CHECK_FALSE(power.proper);

    CHECK_THROWS_AS(factored_chord(1), std::domain_error);
    CHECK_THROWS_AS(factored_chord(0), std::domain_error);
}

TEST_CASE("chord transitions") {
    const auto movements = logtone::chord_transition(2016, 4752);
    REQUIRE(movements.size() == 3);

    CHECK(movements[0].kind == logtone::VoiceMovement::Kind::rational);
    CHECK(movements[0].from_prime == 2);
    CHECK(movements[0].ratio == Rational(4, 5));
    CHECK(movements[0].name == "down a major third");

    CHECK(movements[1].kind == logtone::VoiceMovement::Kind::rational);
    CHECK(movements[1].from_prime == 3);
    CHECK(movements[1].ratio == Rational(3, 2));
    CHECK(movements[1].name == "up a fifth");

    CHECK(movements[2].kind == logtone::VoiceMovement::Kind::irrational);
    CHECK(movements[2].from_prime == 7);
    CHECK(movements[2].to_prime == 11);

    // Identity transition: every voice is a unison.
    for (const auto& movement : logtone::chord_transition(2016, 2016)) {
        CHECK(movement.kind == logtone::VoiceMovement::Kind::rational);
        CHECK(movement.ratio == Rational(1));
        CHECK(movement.name == "unison");
    }

    // 30 -> 210: three unisons and ln 7 enters; reversed, ln 7 exits.
    const auto grow = logtone::chord_transition(30, 210);
    REQUIRE(grow.size() == 4);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(grow[i].ratio == Rational(1));
    }
    CHECK(grow[3].kind == logtone::VoiceMovement::Kind::enters);
    CHECK(grow[3].to_prime == 7);
    const auto shrink = logtone::chord_transition(210, 30);
    REQUIRE(shrink.size() == 4);
    CHECK(shrink[3].kind == logtone::VoiceMovement::Kind::exits);
    CHECK(shrink[3].from_prime == 7);

    // Reversing the transition inverts every shared-prime ratio.
    const auto forward = logtone::chord_transition(2016, 4752);
    const auto backward = logtone::chord_transition(4752, 2016);
    for (const auto& fwd : forward) {
        if (fwd.kind != logtone::VoiceMovement::Kind::rational) {
            continue;
        }
        for (const auto& bwd : backward) {
            if (bwd.kind == logtone::VoiceMovement::Kind::rational && bwd.from_prime == fwd.from_prime) {
                CHECK(*bwd.ratio == fwd.ratio->reciprocal());
            }
        }
    }
}

TEST_CASE("completeness implies rational intervals on random scales") {
    oracle::RandomScaleGenerator generator(42);
    int complete_seen = 0;
    for (int iteration = 0; iteration < 300; ++iteration) {
        const Scale scale = generator.next();
        const auto verdict = logtone::is_complete(scale);

        bool all_rational = true;
        for (std::size_t i = 0; i < scale.size() && all_rational; ++i) {
            for (std::size_t j = i + 1; j < scale.size() && all_rational; ++j) {
                all_rational = rational_ratio(scale.degrees()[j], scale.degrees()[i]).has_value();
            }
        }
        if (verdict.complete) {
            ++complete_seen;
            CHECK(all_rational);
            check_certificate(scale, *verdict.certificate);
        }
        if (!all_rational) {
            CHECK_FALSE(verdict.complete);
        }
        if (iteration % 10 == 0) {
            check_against_oracle(scale);
        }
    }
    // Mix in scales that are complete by construction so the implication is
    // exercised on both sides.
    for (long m = 2; m <= 6; ++m) {
        std::vector<LogFreq> degrees;
        for (long k = 1; k <= m; ++k) {
            degrees.push_back(LogFreq::from_unit(Rational(3 * k, 7)));
        }
        const Scale harmonic(degrees, "harmonic");
        const auto verdict = logtone::is_complete(harmonic);
        CHECK(verdict.complete);
        check_certificate(harmonic, *verdict.certificate);
        ++complete_seen;
    }
    CHECK(complete_seen >= 5);
}
