#include "logtone/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "logtone/analysis.hpp"
#include "logtone/audio.hpp"
#include "logtone/format.hpp"
#include "logtone/scale.hpp"
#include "logtone/series.hpp"
#include "logtone/wav.hpp"

namespace logtone::cli {
namespace {

std::string trim(const std::string& text) {
    const auto begin = text.find_first_not_of(" \t");
    if (begin == std::string::npos) {
        return "";
    }
    const auto end = text.find_last_not_of(" \t");
    return text.substr(begin, end - begin + 1);
}

std::vector<std::string> split(const std::string& text, char separator) {
    std::vector<std::string> parts;
    std::istringstream in(text);
    std::string part;
    while (std::getline(in, part, separator)) {
        parts.push_back(trim(part));
    }
    return parts;
}

LogFreq parse_degree_token(const std::string& token) {
    if (token.empty()) {
        throw std::domain_error("empty degree literal");
    }
    if (token.starts_with("ln")) {
        std::string argument = token.substr(2);
        if (argument.starts_with("(") && argument.ends_with(")")) {
            argument = argument.substr(1, argument.size() - 2);
        }
        return ln_of(Rational::from_string(trim(argument)));
    }
    return LogFreq::from_unit(Rational::from_string(token));
}

std::string tone_text(const LogFreq& tone) {
    // Chord voices read best as "<exponent> ln(p)".
    if (tone.unit().is_zero() && tone.coeffs().size() == 1) {
        const auto& [prime, coeff] = *tone.coeffs().begin();
        const std::string base = "ln(" + std::to_string(prime) + ")";
        return coeff == Rational(1) ? base : coeff.to_string() + " " + base;
    }
    return describe(tone);
}

struct OutputOptions {
    std::string format = "table";
    int digits = 3;
    std::string output_path;
    std::string description;
};

void add_output_options(CLI::App* cmd, OutputOptions& options, bool allow_scl) {
    std::vector<std::string> formats = {"table", "json", "csv"};
    if (allow_scl) {
        formats.push_back("scl");
    }
    cmd->add_option("--format", options.format, "output format")
        ->check(CLI::IsMember(formats));
    cmd->add_option("--digits", options.digits, "fractional digits for decimal/cents columns")
        ->check(CLI::Range(1, 12));
    cmd->add_option("--output,-o", options.output_path, "write output to a file instead of stdout");
    if (allow_scl) {
        cmd->add_option("--description", options.description, "description line for scl export");
    }
}

void emit(const std::string& text, const OutputOptions& options, std::ostream& out) {
    if (options.output_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(options.output_path);
    if (!file) {
        throw std::runtime_error("cannot open " + options.output_path + " for writing");
    }
    file << text;
}

void emit_rows(const Scale& scale, const OutputOptions& options, std::ostream& out) {
    const auto rows = normalize_rows(scale);
    if (options.format == "table") {
        emit(render_table(rows, options.digits), options, out);
    } else if (options.format == "csv") {
        emit(render_csv(rows, options.digits), options, out);
    } else if (options.format == "scl") {
        const std::string description =
            options.description.empty() ? scale.label() : options.description;
        emit(export_scl(rows, description), options, out);
    } else {
        emit(json_of(scale, options.digits).dump(2) + "\n", options, out);
    }
}

// Options naming one scale, either as a degree-literal list or by a
// constructor family.
struct ScaleSource {
    std::string degrees;
    std::uint64_t schneider_m = 0;
    std::uint64_t factorization_n = 0;
    std::vector<std::uint64_t> root;  // n k m
    std::vector<std::uint64_t> projective_bases;
    std::vector<unsigned> projective_heights;

    bool configured() const {
        return !degrees.empty() || schneider_m || factorization_n || !root.empty() ||
               !projective_bases.empty();
    }

    Scale build() const {
        const int chosen = (!degrees.empty()) + (schneider_m != 0) + (factorization_n != 0) +
                           (!root.empty()) + (!projective_bases.empty());
        if (chosen != 1) {
            throw CLI::ValidationError("scale source",
                                       "choose exactly one of --scale, --schneider, "
                                       "--factorization, --root, --projective-bases");
        }
        if (!degrees.empty()) {
            return Scale::from_unsorted(parse_degree_list(degrees), "custom scale");
        }
        if (schneider_m != 0) {
            return schneider_octave_scale(schneider_m);
        }
        if (factorization_n != 0) {
            return factorization_scale(factorization_n);
        }
        if (!root.empty()) {
            return root_approximation_scale(root[0], static_cast<unsigned>(root[1]), root[2]).scale;
        }
        return projective_scale(projective_bases, projective_heights);
    }
};

void add_scale_source(CLI::App* cmd, ScaleSource& source) {
    cmd->add_option("--scale", source.degrees,
                    "scale literal, e.g. \"ln16,ln32,ln64\" or \"ln(4/3),ln(3/2),ln2\"");
    cmd->add_option("--schneider", source.schneider_m, "octave scale parameter m");
    cmd->add_option("--factorization", source.factorization_n, "factorization scale argument N");
    cmd->add_option("--root", source.root, "root approximation parameters: n k m")->expected(3);
    cmd->add_option("--projective-bases", source.projective_bases, "projective scale bases")
        ->delimiter(',');
    cmd->add_option("--projective-heights", source.projective_heights, "projective scale heights")
        ->delimiter(',');
}

std::string coverage_text(const CoverageReport& report) {
    std::ostringstream out;
    out << "pairs: " << report.total_pairs << ", covered: " << report.covered_count << "\n";
    for (const auto& pair : report.pairs) {
        out << "(" << pair.low << "," << pair.high << ") difference " << describe(pair.difference);
        if (pair.covered()) {
            out << " ->";
            for (const auto& match : pair.matches) {
                out << " degree " << match.degree << " shift " << match.shift << ";";
            }
        } else {
            out << " -> uncovered";
        }
        out << "\n";
    }
    return out.str();
}

std::string certificate_text(const Certificate& certificate) {
    std::ostringstream out;
    out << "ratios:";
    for (const auto& ratio : certificate.ratios) {
        out << " " << ratio.to_string();
    }
    out << "\n";
    for (const auto& entry : certificate.h_map) {
        out << "h(" << entry.index << ") = " << entry.image << ", shift " << entry.shift << "\n";
    }
    return out.str();
}

std::string movements_text(const std::vector<VoiceMovement>& movements) {
    std::ostringstream out;
    auto voice = [](std::uint64_t prime, unsigned exponent) {
        const std::string base = "ln(" + std::to_string(prime) + ")";
        return exponent == 1 ? base : std::to_string(exponent) + " " + base;
    };
    for (const auto& movement : movements) {
        switch (movement.kind) {
        case VoiceMovement::Kind::rational:
            out << voice(*movement.from_prime, movement.from_exponent) << " -> "
                << voice(*movement.to_prime, movement.to_exponent) << "  rational "
                << movement.ratio->to_string();
            if (movement.name) {
                out << "  (" << *movement.name << ")";
            }
            break;
        case VoiceMovement::Kind::irrational:
            out << voice(*movement.from_prime, movement.from_exponent) << " -> "
                << voice(*movement.to_prime, movement.to_exponent) << "  irrational";
            break;
        case VoiceMovement::Kind::enters:
            out << voice(*movement.to_prime, movement.to_exponent) << " enters";
            break;
        case VoiceMovement::Kind::exits:
            out << voice(*movement.from_prime, movement.from_exponent) << " exits";
            break;
        }
        out << "\n";
    }
    return out.str();
}

void add_render_options(CLI::App* cmd, RenderParams& params, std::string& out_path) {
    cmd->add_option("--reference-hz", params.reference_hz, "frequency of the first degree");
    cmd->add_option("--rate", params.sample_rate_hz, "sample rate in Hz");
    cmd->add_option("--note-seconds", params.note_seconds, "length of each note");
    cmd->add_option("--amplitude", params.amplitude, "peak amplitude in (0, 1]");
    cmd->add_option("--epsilon", params.nonlinearity_epsilon, "quadratic distortion coefficient");
    cmd->add_option_function<std::string>(
           "--timbre",
           [&params](const std::string& value) {
               params.timbre = value == "sine" ? Timbre::pure_sine : Timbre::log_partials;
           },
           "note timbre")
        ->check(CLI::IsMember({"sine", "log-partials"}));
    cmd->add_option("--partials", params.partial_count, "partials for the log-partials timbre");
    cmd->add_option("--out", out_path, "output WAV path")->required();
}

}  // namespace

std::vector<LogFreq> parse_degree_list(const std::string& text) {
    std::vector<LogFreq> degrees;
    for (const auto& token : split(text, ',')) {
        degrees.push_back(parse_degree_token(token));
    }
    if (degrees.empty()) {
        throw std::domain_error("scale literal is empty");
    }
    return degrees;
}

double parse_ratio(const std::string& text) {
    const std::string trimmed = trim(text);
    const auto slash = trimmed.find('/');
    if (trimmed.starts_with("ln")) {
        // "ln(a)/ln(b)" — a quotient of logarithms.
        const auto divide = trimmed.find("/ln", 2);
        if (divide == std::string::npos) {
            throw std::domain_error("expected ln(a)/ln(b) in ratio literal '" + text + "'");
        }
        const LogFreq numerator = parse_degree_token(trim(trimmed.substr(0, divide)));
        const LogFreq denominator = parse_degree_token(trim(trimmed.substr(divide + 1)));
        return value_ratio(numerator, denominator);
    }
    if (slash != std::string::npos) {
        return Rational::from_string(trimmed).to_double();
    }
    std::size_t used = 0;
    const double value = std::stod(trimmed, &used);
    if (used != trimmed.size()) {
        throw std::domain_error("cannot parse ratio literal '" + text + "'");
    }
    return value;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact logarithmic scales, difference-tone analysis and audio rendering"};
    app.require_subcommand(1);

    // --- series ---
    auto* series_cmd = app.add_subcommand("series", "generate a frequency series");
    std::string series_kind;
    series_cmd->add_option("kind", series_kind, "logarithmic | factorial | primorial | periodic")
        ->required()
        ->check(CLI::IsMember({"logarithmic", "factorial", "primorial", "periodic"}));
    SeriesSpec series_spec;
    std::size_t series_count = 8;
    series_cmd->add_option("--start", series_spec.start, "first argument of the logarithmic series");
    series_cmd->add_option("--divisors", series_spec.divisors, "periodic divisor cycle")
        ->delimiter(',');
    series_cmd->add_flag("--append-missing", series_spec.append_missing,
                         "merge the skipped divisor logs into the periodic series");
    series_cmd->add_option("--count", series_count, "number of elements");
    OutputOptions series_output;
    add_output_options(series_cmd, series_output, false);

    // --- scale ---
    auto* scale_cmd = app.add_subcommand("scale", "construct a scale");
    std::string scale_family;
    scale_cmd->add_option("family", scale_family, "schneider | root | factorization | projective | custom")
        ->required()
        ->check(CLI::IsMember({"schneider", "root", "factorization", "projective", "custom"}));
    std::uint64_t opt_m = 4;
    std::uint64_t opt_n = 2;
    unsigned opt_k = 2;
    std::uint64_t opt_number = 108;
    std::vector<std::uint64_t> opt_bases;
    std::vector<unsigned> opt_heights;
    std::string opt_degrees;
    std::string opt_label = "custom scale";
    scale_cmd->add_option("--m", opt_m, "octave parameter (schneider) or approximated integer (root)");
    scale_cmd->add_option("--n", opt_n, "root base");
    scale_cmd->add_option("--k", opt_k, "root doubling depth");
    scale_cmd->add_option("--number", opt_number, "composite argument of the factorization scale");
    scale_cmd->add_option("--bases", opt_bases, "projective bases")->delimiter(',');
    scale_cmd->add_option("--heights", opt_heights, "projective heights")->delimiter(',');
    scale_cmd->add_option("--degrees", opt_degrees, "custom degree literals");
    scale_cmd->add_option("--label", opt_label, "label for custom scales");
    OutputOptions scale_output;
    add_output_options(scale_cmd, scale_output, true);

    // --- analyze ---
    auto* analyze_cmd = app.add_subcommand("analyze", "difference-tone analysis");
    std::string analyze_what;
    analyze_cmd->add_option("what", analyze_what, "coverage | complete | certificate")
        ->required()
        ->check(CLI::IsMember({"coverage", "complete", "certificate"}));
    ScaleSource analyze_source;
    add_scale_source(analyze_cmd, analyze_source);
    OutputOptions analyze_output;
    add_output_options(analyze_cmd, analyze_output, false);

    // --- chord ---
    auto* chord_cmd = app.add_subcommand("chord", "factored chords");
    auto* chord_show = chord_cmd->add_subcommand("show", "factored chord of an integer");
    std::uint64_t chord_number = 0;
    chord_show->add_option("--number", chord_number, "integer >= 2")->required();
    auto* chord_transition_cmd = chord_cmd->add_subcommand("transition", "voice movements between chords");
    std::uint64_t chord_from = 0;
    std::uint64_t chord_to = 0;
    chord_transition_cmd->add_option("--from", chord_from)->required();
    chord_transition_cmd->add_option("--to", chord_to)->required();
    chord_cmd->require_subcommand(1);
    OutputOptions chord_output;
    add_output_options(chord_show, chord_output, false);
    OutputOptions transition_output;
    add_output_options(chord_transition_cmd, transition_output, false);

    // --- render ---
    auto* render_cmd = app.add_subcommand("render", "render audio to WAV");
    render_cmd->require_subcommand(1);

    auto* render_scale_cmd = render_cmd->add_subcommand("scale", "one note per degree or all at once");
    ScaleSource render_source;
    add_scale_source(render_scale_cmd, render_source);
    std::string render_mode = "melodic";
    render_scale_cmd->add_option("--mode", render_mode, "melodic | simultaneous")
        ->check(CLI::IsMember({"melodic", "simultaneous"}));
    RenderParams scale_params;
    std::string scale_wav;
    add_render_options(render_scale_cmd, scale_params, scale_wav);

    auto* render_chords_cmd = render_cmd->add_subcommand("chords", "a progression of factored chords");
    std::vector<std::uint64_t> progression;
    render_chords_cmd->add_option("--progression", progression, "chord integers in order")
        ->delimiter(',')
        ->required();
    RenderParams chords_params;
    std::string chords_wav;
    add_render_options(render_chords_cmd, chords_params, chords_wav);

    auto* render_dyad_cmd = render_cmd->add_subcommand("dyad", "two tones through the quadratic nonlinearity");
    std::string dyad_ratio = "3/2";
    bool dyad_verify = false;
    render_dyad_cmd->add_option("--ratio", dyad_ratio, "f2/f1 as decimal, a/b, or ln(a)/ln(b)");
    render_dyad_cmd->add_flag("--verify", dyad_verify, "measure the difference-tone bin after rendering");
    RenderParams dyad_params;
    std::string dyad_wav;
    add_render_options(render_dyad_cmd, dyad_params, dyad_wav);

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("logtone");
    for (const auto& arg : args) {
        argv.push_back(arg.c_str());
    }

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());

        if (series_cmd->parsed()) {
            static const std::map<std::string, SeriesSpec::Kind> kKinds = {
                {"logarithmic", SeriesSpec::Kind::logarithmic},
                {"factorial", SeriesSpec::Kind::factorial},
                {"primorial", SeriesSpec::Kind::primorial},
                {"periodic", SeriesSpec::Kind::periodic},
            };
            series_spec.kind = kKinds.at(series_kind);
            if (series_count == 0) {
                return 0;
            }
            const auto elements = generate_series(series_spec, series_count);
            emit_rows(Scale(elements, series_kind + " series"), series_output, out);
            return 0;
        }
        if (scale_cmd->parsed()) {
            Scale scale;
            if (scale_family == "schneider") {
                scale = schneider_octave_scale(opt_m);
            } else if (scale_family == "root") {
                scale = root_approximation_scale(opt_n, opt_k, opt_m).scale;
            } else if (scale_family == "factorization") {
                scale = factorization_scale(opt_number);
            } else if (scale_family == "projective") {
                scale = projective_scale(opt_bases, opt_heights);
            } else {
                scale = Scale::from_unsorted(parse_degree_list(opt_degrees), opt_label);
            }
            emit_rows(scale, scale_output, out);
            return 0;
        }
        if (analyze_cmd->parsed()) {
            const Scale scale = analyze_source.build();
            if (analyze_what == "coverage") {
                const auto report = coverage_report(scale);
                emit(analyze_output.format == "json" ? json_of(report).dump(2) + "\n"
                                                     : coverage_text(report),
                     analyze_output, out);
            } else if (analyze_what == "complete") {
                const auto verdict = is_complete(scale);
                if (analyze_output.format == "json") {
                    emit(json_of(verdict).dump(2) + "\n", analyze_output, out);
                } else if (verdict.complete) {
                    emit("complete\n" + certificate_text(*verdict.certificate), analyze_output, out);
                } else {
                    emit("incomplete: pair (" + std::to_string(verdict.first_uncovered->low) + "," +
                             std::to_string(verdict.first_uncovered->high) + ") difference " +
                             describe(verdict.first_uncovered->difference) + " is uncovered\n",
                         analyze_output, out);
                }
            } else {
                const auto certificate = rationality_certificate(scale);
                emit(analyze_output.format == "json" ? json_of(certificate).dump(2) + "\n"
                                                     : certificate_text(certificate),
                     analyze_output, out);
            }
            return 0;
        }
        if (chord_show->parsed()) {
            const Chord chord = factored_chord(chord_number);
            if (chord_output.format == "json") {
                emit(json_of(chord).dump(2) + "\n", chord_output, out);
            } else {
                std::ostringstream text;
                text << "C_" << chord.value << " = {";
                for (std::size_t i = 0; i < chord.tones.size(); ++i) {
                    text << (i ? ", " : " ") << tone_text(chord.tones[i]);
                }
                text << " }" << (chord.proper ? "" : "  (fewer than three distinct primes)") << "\n";
                emit(text.str(), chord_output, out);
            }
            return 0;
        }
        if (chord_transition_cmd->parsed()) {
            const auto movements = chord_transition(chord_from, chord_to);
            emit(transition_output.format == "json" ? json_of(movements).dump(2) + "\n"
                                                    : movements_text(movements),
                 transition_output, out);
            return 0;
        }
        if (render_scale_cmd->parsed()) {
            const Scale scale = render_source.build();
            const auto mode = render_mode == "melodic" ? RenderMode::melodic : RenderMode::simultaneous;
            const auto buffer = render_tone_sequence(scale, scale_params, mode);
            write_wav16(scale_wav, buffer, scale_params.sample_rate_hz);
            out << "wrote " << scale_wav << ": " << buffer.size() << " samples at "
                << scale_params.sample_rate_hz << " Hz\n";
            return 0;
        }
        if (render_chords_cmd->parsed()) {
            std::vector<Chord> chords;
            chords.reserve(progression.size());
            for (const auto value : progression) {
                chords.push_back(factored_chord(value));
            }
            const auto buffer = render_chord_progression(chords, chords_params);
            write_wav16(chords_wav, buffer, chords_params.sample_rate_hz);
            out << "wrote " << chords_wav << ": " << buffer.size() << " samples at "
                << chords_params.sample_rate_hz << " Hz\n";
            return 0;
        }
        if (render_dyad_cmd->parsed()) {
            const double ratio = parse_ratio(dyad_ratio);
            const auto buffer = render_dyad_nonlinear(ratio, dyad_params);
            write_wav16(dyad_wav, buffer, dyad_params.sample_rate_hz);
            out << "wrote " << dyad_wav << ": " << buffer.size() << " samples at "
                << dyad_params.sample_rate_hz << " Hz\n";
            if (dyad_verify) {
                const double difference_hz = (ratio - 1.0) * dyad_params.reference_hz;
                RenderParams clean = dyad_params;
                clean.nonlinearity_epsilon = 0.0;
                const auto baseline = render_dyad_nonlinear(ratio, clean);
                const double distorted_power =
                    goertzel_power(buffer, difference_hz, dyad_params.sample_rate_hz);
                const double clean_power =
                    goertzel_power(baseline, difference_hz, dyad_params.sample_rate_hz);
                out << "difference tone at " << difference_hz << " Hz: "
                    << 10.0 * std::log10(distorted_power / clean_power)
                    << " dB above the clean dyad\n";
            }
            return 0;
        }
        err << "no command selected\n";
        return 2;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) {
            out << app.help();
            return 0;
        }
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::range_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace logtone::cli
