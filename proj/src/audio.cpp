#include "logtone/audio.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace logtone {
namespace {

constexpr double kFadeSeconds = 0.005;

void validate_common(const RenderParams& params) {
    if (params.reference_hz <= 0 || params.sample_rate_hz <= 0 || params.note_seconds <= 0) {
        throw std::domain_error("render: reference, sample rate and note length must be positive");
    }
    if (params.amplitude <= 0 || params.amplitude > 1) {
        throw std::domain_error("render: amplitude must lie in (0, 1]");
    }
    if (params.nonlinearity_epsilon < 0) {
        throw std::domain_error("render: distortion coefficient must be >= 0");
    }
    if (params.timbre == Timbre::log_partials && params.partial_count < 1) {
        throw std::domain_error("render: partial count must be >= 1");
    }
}

// Relative partial factors for one note: {1} for a sine, ln(k)/ln(3) for the
// log-partial timbre.
std::vector<double> partial_factors(const RenderParams& params) {
    if (params.timbre == Timbre::pure_sine) {
        return {1.0};
    }
    std::vector<double> factors;
    factors.reserve(static_cast<std::size_t>(params.partial_count));
    const double base = std::log(3.0);
    for (int k = 0; k < params.partial_count; ++k) {
        factors.push_back(std::log(3.0 + k) / base);
    }
    return factors;
}

void check_aliasing(double max_frequency_hz, const RenderParams& params) {
    if (max_frequency_hz >= params.sample_rate_hz / 2.0) {
        throw std::domain_error("render: frequency " + std::to_string(max_frequency_hz) +
                                " Hz reaches the Nyquist limit");
    }
}

void apply_fade(std::span<double> note, int sample_rate_hz) {
    const auto fade = std::min(note.size() / 2,
                               static_cast<std::size_t>(kFadeSeconds * sample_rate_hz));
    for (std::size_t i = 0; i < fade; ++i) {
        const double gain = static_cast<double>(i) / static_cast<double>(fade);
        note[i] *= gain;
        note[note.size() - 1 - i] *= gain;
    }
}

// Sums sinusoids at the given frequencies and per-component weights.
void synthesize(std::span<double> out, std::span<const double> frequencies,
                std::span<const double> weights, int sample_rate_hz) {
    for (std::size_t i = 0; i < out.size(); ++i) {
        const double t = static_cast<double>(i) / sample_rate_hz;
        double sample = 0.0;
        for (std::size_t c = 0; c < frequencies.size(); ++c) {
            sample += weights[c] * std::sin(2.0 * std::numbers::pi * frequencies[c] * t);
        }
        out[i] = sample;
    }
}

std::vector<double> render_frequency_groups(const std::vector<std::vector<double>>& groups,
                                            const RenderParams& params) {
    const auto factors = partial_factors(params);
    double max_frequency = 0.0;
    for (const auto& group : groups) {
        for (const double f : group) {
            max_frequency = std::max(max_frequency, f * factors.back());
        }
    }
    check_aliasing(max_frequency, params);

    // Per-note component weights: partial rolloff 1/index, scaled so each
    // note's weights sum to the amplitude even when several tones stack.
    const auto note_samples = static_cast<std::size_t>(params.note_seconds * params.sample_rate_hz);
    std::vector<double> buffer(note_samples * groups.size());
    for (std::size_t g = 0; g < groups.size(); ++g) {
        std::vector<double> frequencies;
        std::vector<double> weights;
        double weight_sum = 0.0;
        for (const double f : groups[g]) {
            for (std::size_t c = 0; c < factors.size(); ++c) {
                frequencies.push_back(f * factors[c]);
                weights.push_back(1.0 / static_cast<double>(c + 1));
                weight_sum += weights.back();
            }
        }
        for (auto& w : weights) {
            w *= params.amplitude / weight_sum;
        }
        const std::span<double> note(buffer.data() + g * note_samples, note_samples);
        synthesize(note, frequencies, weights, params.sample_rate_hz);
        apply_fade(note, params.sample_rate_hz);
    }
    return buffer;
}

std::vector<double> scale_frequencies(const Scale& scale, const RenderParams& params) {
    std::vector<double> frequencies;
    frequencies.reserve(scale.size());
    const LogFreq& base = scale.degrees().front();
    for (const auto& degree : scale.degrees()) {
        frequencies.push_back(params.reference_hz * value_ratio(degree, base));
    }
    return frequencies;
}

}  // namespace

std::vector<double> render_tone_sequence(const Scale& scale, const RenderParams& params,
                                         RenderMode mode) {
    validate_common(params);
    if (scale.empty()) {
        throw std::domain_error("render: scale is empty");
    }
    const auto frequencies = scale_frequencies(scale, params);
    std::vector<std::vector<double>> groups;
    if (mode == RenderMode::melodic) {
        for (const double f : frequencies) {
            groups.push_back({f});
        }
    } else {
        groups.push_back(frequencies);
    }
    return render_frequency_groups(groups, params);
}

std::vector<double> render_chord_progression(const std::vector<Chord>& chords,
                                             const RenderParams& params) {
    validate_common(params);
    if (chords.empty() || chords.front().tones.empty()) {
        throw std::domain_error("render: chord progression is empty");
    }
    const LogFreq& anchor = chords.front().tones.front();
    std::vector<std::vector<double>> groups;
    for (const auto& chord : chords) {
        std::vector<double> frequencies;
        for (const auto& tone : chord.tones) {
            frequencies.push_back(params.reference_hz * value_ratio(tone, anchor));
        }
        groups.push_back(std::move(frequencies));
    }
    return render_frequency_groups(groups, params);
}

std::vector<double> render_dyad_nonlinear(double ratio, const RenderParams& params) {
    validate_common(params);
    if (ratio <= 1.0) {
        throw std::domain_error("render: dyad ratio must exceed 1");
    }
    const double f1 = params.reference_hz;
    const double f2 = ratio * params.reference_hz;
    // The quadratic term produces content up to the sum tone 2*f2.
    check_aliasing(2.0 * f2, params);

    const auto samples = static_cast<std::size_t>(params.note_seconds * params.sample_rate_hz);
    std::vector<double> buffer(samples);
    const double eps = params.nonlinearity_epsilon;
    double peak = 0.0;
    for (std::size_t i = 0; i < samples; ++i) {
        const double t = static_cast<double>(i) / params.sample_rate_hz;
        const double s = std::sin(2.0 * std::numbers::pi * f1 * t) +
                         std::sin(2.0 * std::numbers::pi * f2 * t);
        buffer[i] = s + eps * s * s;
        peak = std::max(peak, std::abs(buffer[i]));
    }
    if (peak > 0.0) {
        const double gain = params.amplitude / peak;
        for (auto& sample : buffer) {
            sample *= gain;
        }
    }
    return buffer;
}

double goertzel_power(std::span<const double> buffer, double target_hz, int sample_rate_hz) {
    if (sample_rate_hz <= 0 || target_hz <= 0) {
        throw std::domain_error("goertzel: sample rate and target must be positive");
    }
    if (target_hz >= sample_rate_hz / 2.0) {
        throw std::domain_error("goertzel: target frequency reaches the Nyquist limit");
    }
    const double samples_per_period = sample_rate_hz / target_hz;
    if (static_cast<double>(buffer.size()) < samples_per_period) {
        throw std::domain_error("goertzel: buffer shorter than one period of the target");
    }
    // Trim to a whole number of target periods to keep leakage down.
    const auto periods = std::floor(static_cast<double>(buffer.size()) / samples_per_period);
    const auto length = std::min(buffer.size(),
                                 static_cast<std::size_t>(std::llround(periods * samples_per_period)));

    const double omega = 2.0 * std::numbers::pi * target_hz / sample_rate_hz;
    const double coefficient = 2.0 * std::cos(omega);
    double s_prev = 0.0;
    double s_prev2 = 0.0;
    for (std::size_t i = 0; i < length; ++i) {
        const double s = buffer[i] + coefficient * s_prev - s_prev2;
        s_prev2 = s_prev;
        s_prev = s;
    }
    return s_prev * s_prev + s_prev2 * s_prev2 - coefficient * s_prev * s_prev2;
}

}  // namespace logtone
