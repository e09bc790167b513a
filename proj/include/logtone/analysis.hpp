#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "logtone/scale.hpp"

namespace logtone {

// All indices in this header are 1-based, matching the usual f_1 ... f_n
// naming of scale degrees.

struct CoverageMatch {
    std::size_t degree;  // index z with difference == 2^shift * f_z
    long shift;
};

struct CoveragePair {
    std::size_t low = 0;   // i
    std::size_t high = 0;  // j > i
    LogFreq difference;    // f_j - f_i
    std::vector<CoverageMatch> matches;

    bool covered() const { return !matches.empty(); }
};

struct CoverageReport {
    std::vector<CoveragePair> pairs;  // lexicographic (i, j)
    std::size_t covered_count = 0;
    std::size_t total_pairs = 0;
};

// Enumerates every pair i < j and every degree z with
// f_j - f_i == 2^t * f_z for an integer t.
CoverageReport coverage_report(const Scale& scale);

struct HMapEntry {
    std::size_t index;  // i
    std::size_t image;  // h(i), with f_n - f_i == 2^shift * f_{h(i)}
    long shift;
};

// Witness that every degree is a rational multiple of the top degree:
// f_i == ratios[i-1] * f_n for all i, with ratios.back() == 1. The h-map
// entries carry the difference relations the ratios were solved from.
struct Certificate {
    std::vector<Rational> ratios;
    std::vector<HMapEntry> h_map;  // one entry per index i < n
};

struct CompletenessVerdict {
    bool complete = false;
    std::optional<Certificate> certificate;      // present when complete
    std::optional<CoveragePair> first_uncovered; // present when incomplete
};

// A scale is complete when every pairwise difference is an octave shift of
// some degree. Complete scales come with a rationality certificate; a
// single-degree scale is vacuously complete.
CompletenessVerdict is_complete(const Scale& scale);

// Constructs the certificate for a complete scale. Throws std::domain_error
// if some difference f_n - f_i has no octave-shifted match in the scale.
Certificate rationality_certificate(const Scale& scale);

// The pitch set {a_i * ln(p_i)} of the factorization A = prod p_i^(a_i).
struct Chord {
    std::uint64_t value = 0;  // A
    std::map<std::uint64_t, unsigned> exponents;
    std::vector<LogFreq> tones;  // ascending by value
    // At least three distinct prime divisors.
    bool proper = false;
};

Chord factored_chord(std::uint64_t a);

struct VoiceMovement {
    enum class Kind { rational, irrational, enters, exits };
    Kind kind;
    std::optional<std::uint64_t> from_prime;
    std::optional<std::uint64_t> to_prime;
    unsigned from_exponent = 0;
    unsigned to_exponent = 0;
    std::optional<Rational> ratio;      // rational movements only
    std::optional<std::string> name;    // e.g. "down a major third"
};

// Pairs voices of two factored chords: shared primes move rationally by
// to_exponent/from_exponent, leftover primes are matched in ascending order
// as irrational movements, and any excess enters or exits.
std::vector<VoiceMovement> chord_transition(std::uint64_t a1, std::uint64_t a2);

}  // namespace logtone
