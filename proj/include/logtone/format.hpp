#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "logtone/analysis.hpp"
#include "logtone/scale.hpp"

namespace logtone {

using Json = nlohmann::ordered_json;

// Three-column plain-text table (closed form, decimal, cents) with the
// given number of fractional digits.
std::string render_table(const std::vector<ScaleRow>& rows, int digits);

std::string render_csv(const std::vector<ScaleRow>& rows, int digits);

// Scala tuning text: a '!' comment line, the description, the degree count
// (the implicit 1/1 first row is skipped), then one value per line —
// an exact a/b fraction for rational rows, cents with five decimals
// otherwise. Needs at least two rows.
std::string export_scl(const std::vector<ScaleRow>& rows, const std::string& description);

struct SclDegree {
    bool is_ratio = false;
    std::string ratio;      // "a/b" when is_ratio
    double cents = 0.0;     // exact for ratio lines, parsed for cents lines
};

// Minimal parser for the text produced by export_scl (used to round-trip
// exports in tests and tooling).
std::vector<SclDegree> parse_scl(const std::string& text);

// JSON payloads. Rationals are canonical "a/b" strings (plain "a" for
// integers); a LogFreq is {"unit": rational, "coeffs": {prime: rational}}.
Json json_of(const Rational& value);
Json json_of(const LogFreq& value);
Json json_of(const std::vector<ScaleRow>& rows, int digits);
Json json_of(const Scale& scale, int digits);
Json json_of(const CoverageReport& report);
Json json_of(const Certificate& certificate);
Json json_of(const CompletenessVerdict& verdict);
Json json_of(const Chord& chord);
Json json_of(const std::vector<VoiceMovement>& movements);

}  // namespace logtone
