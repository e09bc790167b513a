#include "logtone/format.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace logtone {
namespace {

std::string fixed(double value, int digits) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.*f", digits, value);
    std::string text(buffer);
    if (text.find_first_not_of("-0.") == std::string::npos && text[0] == '-') {
        text.erase(0, 1);  // avoid "-0.000"
    }
    return text;
}

// The rounded value itself, so text and JSON outputs carry identical numbers.
double rounded(double value, int digits) {
    return std::stod(fixed(value, digits));
}

bool looks_rational(const std::string& closed_form) {
    return !closed_form.empty() &&
           closed_form.find_first_not_of("0123456789/") == std::string::npos;
}

std::string kind_name(VoiceMovement::Kind kind) {
    switch (kind) {
    case VoiceMovement::Kind::rational: return "rational";
    case VoiceMovement::Kind::irrational: return "irrational";
    case VoiceMovement::Kind::enters: return "enters";
    case VoiceMovement::Kind::exits: return "exits";
    }
    return "unknown";
}

}  // namespace

std::string render_table(const std::vector<ScaleRow>& rows, int digits) {
    const std::array<std::string, 3> header = {"Closed Form", "Decimal", "Cents"};
    std::vector<std::array<std::string, 3>> cells;
    cells.reserve(rows.size());
    for (const auto& row : rows) {
        cells.push_back({row.closed_form, fixed(row.decimal, digits), fixed(row.cents, digits)});
    }
    std::array<std::size_t, 3> width = {header[0].size(), header[1].size(), header[2].size()};
    for (const auto& row : cells) {
        for (std::size_t c = 0; c < 3; ++c) {
            width[c] = std::max(width[c], row[c].size());
        }
    }
    std::ostringstream out;
    auto emit = [&](const std::array<std::string, 3>& row) {
        out << row[0] << std::string(width[0] - row[0].size(), ' ')
            << "  " << std::string(width[1] - row[1].size(), ' ') << row[1]
            << "  " << std::string(width[2] - row[2].size(), ' ') << row[2] << '\n';
    };
    emit(header);
    out << std::string(width[0] + width[1] + width[2] + 4, '-') << '\n';
    for (const auto& row : cells) {
        emit(row);
    }
    return out.str();
}

std::string render_csv(const std::vector<ScaleRow>& rows, int digits) {
    std::ostringstream out;
    out << "closed_form,decimal,cents\n";
    for (const auto& row : rows) {
        out << row.closed_form << ',' << fixed(row.decimal, digits) << ','
            << fixed(row.cents, digits) << '\n';
    }
    return out.str();
}

std::string export_scl(const std::vector<ScaleRow>& rows, const std::string& description) {
    if (rows.size() < 2) {
        throw std::domain_error("scl export needs at least two rows");
    }
    std::ostringstream out;
    out << "! exported scale\n";
    out << description << '\n';
    out << rows.size() - 1 << '\n';
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto& row = rows[i];
        if (looks_rational(row.closed_form)) {
            std::string ratio = row.closed_form;
            if (ratio.find('/') == std::string::npos) {
                ratio += "/1";
            }
            out << ratio << '\n';
        } else {
            out << fixed(row.cents, 5) << '\n';
        }
    }
    return out.str();
}

std::vector<SclDegree> parse_scl(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::string> content;
    while (std::getline(in, line)) {
        if (!line.empty() && line[0] == '!') {
            continue;
        }
        content.push_back(line);
    }
    if (content.size() < 2) {
        throw std::domain_error("scl parse: missing description or degree count");
    }
    const auto count = static_cast<std::size_t>(std::stoul(content[1]));
    if (content.size() < 2 + count) {
        throw std::domain_error("scl parse: fewer degree lines than declared");
    }
    std::vector<SclDegree> degrees;
    degrees.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const std::string& value = content[2 + i];
        SclDegree degree;
        if (value.find('.') != std::string::npos) {
            degree.cents = std::stod(value);
        } else {
            degree.is_ratio = true;
            degree.ratio = value;
            const auto slash = value.find('/');
            const double num = std::stod(value.substr(0, slash));
            const double den = slash == std::string::npos ? 1.0 : std::stod(value.substr(slash + 1));
            degree.cents = 1200.0 * std::log2(num / den);
        }
        degrees.push_back(std::move(degree));
    }
    return degrees;
}

Json json_of(const Rational& value) {
    return value.to_string();
}

Json json_of(const LogFreq& value) {
    Json coeffs = Json::object();
    for (const auto& [prime, coeff] : value.coeffs()) {
        coeffs[std::to_string(prime)] = json_of(coeff);
    }
    return Json{{"unit", json_of(value.unit())}, {"coeffs", std::move(coeffs)}, {"text", describe(value)}};
}

Json json_of(const std::vector<ScaleRow>& rows, int digits) {
    Json out = Json::array();
    for (const auto& row : rows) {
        out.push_back(Json{{"closed_form", row.closed_form},
                           {"decimal", rounded(row.decimal, digits)},
                           {"cents", rounded(row.cents, digits)}});
    }
    return out;
}

Json json_of(const Scale& scale, int digits) {
    Json degrees = Json::array();
    for (const auto& degree : scale.degrees()) {
        degrees.push_back(json_of(degree));
    }
    return Json{{"label", scale.label()},
                {"degrees", std::move(degrees)},
                {"rows", scale.empty() ? Json::array() : json_of(normalize_rows(scale), digits)}};
}

Json json_of(const CoverageReport& report) {
    Json pairs = Json::array();
    for (const auto& pair : report.pairs) {
        Json matches = Json::array();
        for (const auto& match : pair.matches) {
            matches.push_back(Json{{"degree", match.degree}, {"shift", match.shift}});
        }
        pairs.push_back(Json{{"i", pair.low},
                             {"j", pair.high},
                             {"difference", json_of(pair.difference)},
                             {"matches", std::move(matches)}});
    }
    return Json{{"total_pairs", report.total_pairs},
                {"covered_count", report.covered_count},
                {"pairs", std::move(pairs)}};
}

Json json_of(const Certificate& certificate) {
    Json ratios = Json::array();
    for (const auto& ratio : certificate.ratios) {
        ratios.push_back(json_of(ratio));
    }
    Json h_map = Json::array();
    for (const auto& entry : certificate.h_map) {
        h_map.push_back(Json{{"index", entry.index}, {"image", entry.image}, {"shift", entry.shift}});
    }
    return Json{{"ratios", std::move(ratios)}, {"h_map", std::move(h_map)}};
}

Json json_of(const CompletenessVerdict& verdict) {
    Json out{{"complete", verdict.complete}};
    if (verdict.certificate) {
        out["certificate"] = json_of(*verdict.certificate);
    }
    if (verdict.first_uncovered) {
        out["first_uncovered"] = Json{{"i", verdict.first_uncovered->low},
                                      {"j", verdict.first_uncovered->high},
                                      {"difference", json_of(verdict.first_uncovered->difference)}};
    }
    return out;
}

Json json_of(const Chord& chord) {
    Json exponents = Json::object();
    for (const auto& [prime, exponent] : chord.exponents) {
        exponents[std::to_string(prime)] = exponent;
    }
    Json tones = Json::array();
    for (const auto& tone : chord.tones) {
        tones.push_back(json_of(tone));
    }
    return Json{{"value", chord.value},
                {"exponents", std::move(exponents)},
                {"tones", std::move(tones)},
                {"proper", chord.proper}};
}

Json json_of(const std::vector<VoiceMovement>& movements) {
    Json out = Json::array();
    for (const auto& movement : movements) {
        Json entry{{"kind", kind_name(movement.kind)}};
        if (movement.from_prime) {
            entry["from_prime"] = *movement.from_prime;
            entry["from_exponent"] = movement.from_exponent;
        }
        if (movement.to_prime) {
            entry["to_prime"] = *movement.to_prime;
            entry["to_exponent"] = movement.to_exponent;
        }
        if (movement.ratio) {
            entry["ratio"] = json_of(*movement.ratio);
        }
        if (movement.name) {
            entry["name"] = *movement.name;
        }
        out.push_back(std::move(entry));
    }
    return out;
}

}  // namespace logtone
