#pragma once

#include <span>
#include <vector>

#include "logtone/analysis.hpp"
#include "logtone/scale.hpp"

namespace logtone {

enum class Timbre {
    pure_sine,
    // Partials at the relative factors ln(k)/ln(3), k = 3, 4, ..., so the
    // first partial is the nominal note frequency; rolloff is 1/index.
    log_partials,
};

enum class RenderMode { melodic, simultaneous };

struct RenderParams {
    double reference_hz = 440.0;      // frequency of the first scale degree
    int sample_rate_hz = 44100;
    double note_seconds = 0.5;
    double amplitude = 0.8;           // peak level, in (0, 1]
    double nonlinearity_epsilon = 0.0;
    Timbre timbre = Timbre::pure_sine;
    int partial_count = 6;            // log_partials only
};

// One note per degree (melodic) or all degrees at once (simultaneous), with
// the first degree at reference_hz and 5 ms linear fades per note. Throws
// std::domain_error if any produced frequency would alias.
std::vector<double> render_tone_sequence(const Scale& scale, const RenderParams& params,
                                         RenderMode mode);

// Consecutive simultaneous chords; all frequencies are anchored to the
// lowest tone of the first chord so inter-chord intervals are preserved.
std::vector<double> render_chord_progression(const std::vector<Chord>& chords,
                                             const RenderParams& params);

// sin(2 pi f1 t) + sin(2 pi f2 t) with f2 = ratio * f1, passed through the
// memoryless quadratic s + epsilon * s^2 and rescaled to peak at
// params.amplitude. With epsilon = 0 this is the clean dyad.
std::vector<double> render_dyad_nonlinear(double ratio, const RenderParams& params);

// Single-bin spectral power at target_hz over an integer number of periods
// of the target, via the Goertzel recurrence. The buffer must hold at least
// one full period; the target must lie below the Nyquist frequency.
double goertzel_power(std::span<const double> buffer, double target_hz, int sample_rate_hz);

}  // namespace logtone
