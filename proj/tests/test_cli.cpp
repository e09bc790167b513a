#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "logtone/cli.hpp"
#include "logtone/log_freq.hpp"

using logtone::cli::run;
using logtone::ln_of;
using logtone::LogFreq;
using logtone::Rational;

namespace {

struct CliResult {
    int status = 0;
    std::string out;
    std::string err;
};

CliResult invoke(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int status = run(args, out, err);
    return {status, out.str(), err.str()};
}

}  // namespace

TEST_CASE("degree literals") {
    CHECK(logtone::cli::parse_degree_list("ln16,ln32,ln64") ==
          std::vector<LogFreq>{ln_of(16), ln_of(32), ln_of(64)});
    CHECK(logtone::cli::parse_degree_list("ln(4/3), ln(3/2), ln2") ==
          std::vector<LogFreq>{ln_of(Rational(4, 3)), ln_of(Rational(3, 2)), ln_of(2)});
    CHECK(logtone::cli::parse_degree_list("1/4,3/4,1") ==
          std::vector<LogFreq>{LogFreq::from_unit(Rational(1, 4)),
                               LogFreq::from_unit(Rational(3, 4)),
                               LogFreq::from_unit(Rational(1))});
    CHECK_THROWS_AS(logtone::cli::parse_degree_list(""), std::domain_error);
    CHECK_THROWS_AS(logtone::cli::parse_degree_list("ln(banana)"), std::domain_error);
}

TEST_CASE("ratio literals") {
    CHECK(logtone::cli::parse_ratio("1.5") == doctest::Approx(1.5));
    CHECK(logtone::cli::parse_ratio("3/2") == doctest::Approx(1.5));
    CHECK(logtone::cli::parse_ratio("ln(5)/ln(4)") == doctest::Approx(1.16096404744).epsilon(1e-9));
    CHECK_THROWS_AS(logtone::cli::parse_ratio("ln(5)"), std::domain_error);
    CHECK_THROWS(logtone::cli::parse_ratio("x"));
}

TEST_CASE("scale command renders the reference tables") {
    const auto table = invoke({"scale", "schneider", "--m", "4"});
    CHECK(table.status == 0);
    CHECK(table.out.find("log_4(5)") != std::string::npos);
    CHECK(table.out.find("258.388") != std::string::npos);
    CHECK(table.out.find("1.161") != std::string::npos);

    // Identical invocations are byte-identical.
    CHECK(invoke({"scale", "schneider", "--m", "4"}).out == table.out);

    const auto csv = invoke({"scale", "projective", "--bases", "2,3", "--heights", "2,1",
                             "--format", "csv"});
    CHECK(csv.status == 0);
    CHECK(csv.out.find("log_{4/3}(3/2),1.409,594.123") != std::string::npos);

    const auto custom = invoke({"scale", "custom", "--degrees", "ln16,ln32,ln64",
                                "--format", "scl"});
    CHECK(custom.status == 0);
    CHECK(custom.out.find("5/4\n3/2\n") != std::string::npos);
}

TEST_CASE("series command") {
    const auto empty = invoke({"series", "factorial", "--count", "0"});
    CHECK(empty.status == 0);
    CHECK(empty.out.empty());
    CHECK(empty.err.empty());

    const auto periodic = invoke({"series", "periodic", "--divisors", "3,5",
                                  "--append-missing", "--count", "4"});
    CHECK(periodic.status == 0);
    CHECK(periodic.out.find("log_3(5)") != std::string::npos);
    CHECK(periodic.out.find("log_3(45)") != std::string::npos);

    const auto factorial = invoke({"series", "factorial", "--count", "6", "--format", "csv"});
    CHECK(factorial.status == 0);
    CHECK(factorial.out.find("log_2(720)") != std::string::npos);
}

TEST_CASE("analyze command") {
    const auto json_result = invoke({"analyze", "complete", "--scale", "ln16,ln32,ln64",
                                     "--format", "json"});
    CHECK(json_result.status == 0);
    const auto json = nlohmann::json::parse(json_result.out);
    CHECK(json["complete"] == true);
    CHECK(json["certificate"]["ratios"] == nlohmann::json::array({"2/3", "5/6", "1"}));

    const auto text = invoke({"analyze", "complete", "--schneider", "4"});
    CHECK(text.status == 0);
    CHECK(text.out.find("incomplete") != std::string::npos);
    CHECK(text.out.find("ln(5/4)") != std::string::npos);

    const auto coverage = invoke({"analyze", "coverage", "--projective-bases", "2,3",
                                  "--projective-heights", "2,1", "--format", "json"});
    CHECK(coverage.status == 0);
    const auto coverage_json = nlohmann::json::parse(coverage.out);
    CHECK(coverage_json["total_pairs"] == 15);
    CHECK(coverage_json["covered_count"] == 12);

    // Exactly one scale source must be given.
    const auto missing = invoke({"analyze", "complete"});
    CHECK(missing.status == 2);
    const auto doubled = invoke({"analyze", "complete", "--scale", "ln2,ln4", "--schneider", "4"});
    CHECK(doubled.status == 2);
}

TEST_CASE("chord commands") {
    const auto show = invoke({"chord", "show", "--number", "2016"});
    CHECK(show.status == 0);
    CHECK(show.out.find("5 ln(2)") != std::string::npos);
    CHECK(show.out.find("2 ln(3)") != std::string::npos);
    CHECK(show.out.find("ln(7)") != std::string::npos);

    const auto transition = invoke({"chord", "transition", "--from", "2016", "--to", "4752"});
    CHECK(transition.status == 0);
    CHECK(transition.out.find("down a major third") != std::string::npos);
    CHECK(transition.out.find("up a fifth") != std::string::npos);
    CHECK(transition.out.find("irrational") != std::string::npos);

    const auto txt = invoke({"chord", "show", "--number", "8"});
    CHECK(txt.out.find("fewer than three distinct primes") != std::string::npos);
}

TEST_CASE("render commands write WAV files") {
    const auto dir = std::filesystem::temp_directory_path();
    const auto wav_path = (dir / "logtone_cli_dyad.wav").string();
    const auto rendered = invoke({"render", "dyad", "--ratio", "ln(5)/ln(4)", "--epsilon", "0.2",
                                  "--note-seconds", "0.5", "--out", wav_path, "--verify"});
    CHECK(rendered.status == 0);
    CHECK(rendered.out.find("difference tone at 70.82") != std::string::npos);
    CHECK(rendered.out.find("dB above the clean dyad") != std::string::npos);

    std::ifstream file(wav_path, std::ios::binary);
    REQUIRE(file.good());
    char magic[4];
    file.read(magic, 4);
    CHECK(std::string(magic, 4) == "RIFF");
    std::filesystem::remove(wav_path);

    const auto chords_path = (dir / "logtone_cli_chords.wav").string();
    const auto chords = invoke({"render", "chords", "--progression", "2016,4752",
                                "--note-seconds", "0.2", "--out", chords_path});
    CHECK(chords.status == 0);
    CHECK(std::filesystem::exists(chords_path));
    std::filesystem::remove(chords_path);

    const auto scale_path = (dir / "logtone_cli_scale.wav").string();
    const auto melodic = invoke({"render", "scale", "--scale", "ln16,ln32,ln64",
                                 "--mode", "simultaneous", "--note-seconds", "0.2",
                                 "--out", scale_path});
    CHECK(melodic.status == 0);
    CHECK(std::filesystem::exists(scale_path));
    std::filesystem::remove(scale_path);
}

TEST_CASE("error handling and exit codes") {
    CHECK(invoke({"nonsense"}).status == 2);
    CHECK(invoke({}).status == 2);
    CHECK(invoke({"scale", "schneider", "--m", "1"}).status == 1);       // domain error
    CHECK(invoke({"scale", "factorization", "--number", "7"}).status == 1);
    CHECK(invoke({"chord", "show", "--number", "1"}).status == 1);
    CHECK(invoke({"scale", "unknown-family"}).status == 2);
    CHECK(invoke({"analyze", "complete", "--scale", "ln16", "--format", "scl"}).status == 2);
    CHECK(invoke({"--help"}).status == 0);

    // Usage problems report on the error stream, not stdout.
    const auto usage = invoke({"scale", "schneider", "--bogus"});
    CHECK(usage.status == 2);
    CHECK_FALSE(usage.err.empty());
}

TEST_CASE("output redirection") {
    const auto path = std::filesystem::temp_directory_path() / "logtone_rows.csv";
    const auto result = invoke({"scale", "schneider", "--m", "2", "--format", "csv",
                                "--output", path.string()});
    CHECK(result.status == 0);
    CHECK(result.out.empty());
    std::ifstream file(path);
    std::stringstream content;
    content << file.rdbuf();
    CHECK(content.str().find("closed_form") != std::string::npos);
    CHECK(content.str().find("2,2.000,1200.000") != std::string::npos);
    std::filesystem::remove(path);
}
