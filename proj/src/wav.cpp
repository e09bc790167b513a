#include "logtone/wav.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <stdexcept>

namespace logtone {
namespace {

void push_u16(std::vector<unsigned char>& out, std::uint16_t value) {
    out.push_back(static_cast<unsigned char>(value & 0xff));
    out.push_back(static_cast<unsigned char>(value >> 8));
}

void push_u32(std::vector<unsigned char>& out, std::uint32_t value) {
    out.push_back(static_cast<unsigned char>(value & 0xff));
    out.push_back(static_cast<unsigned char>((value >> 8) & 0xff));
    out.push_back(static_cast<unsigned char>((value >> 16) & 0xff));
    out.push_back(static_cast<unsigned char>(value >> 24));
}

void push_tag(std::vector<unsigned char>& out, const char (&tag)[5]) {
    out.insert(out.end(), tag, tag + 4);
}

}  // namespace

std::vector<unsigned char> encode_wav16(std::span<const double> samples, int sample_rate_hz) {
    if (sample_rate_hz <= 0) {
        throw std::domain_error("wav: sample rate must be positive");
    }
    constexpr std::uint16_t kChannels = 1;
    constexpr std::uint16_t kBitsPerSample = 16;
    const std::uint32_t byte_rate = static_cast<std::uint32_t>(sample_rate_hz) * kChannels * (kBitsPerSample / 8);
    const std::uint32_t data_bytes = static_cast<std::uint32_t>(samples.size() * 2);

    std::vector<unsigned char> out;
    out.reserve(44 + data_bytes);
    push_tag(out, "RIFF");
    push_u32(out, 36 + data_bytes);
    push_tag(out, "WAVE");
    push_tag(out, "fmt ");
    push_u32(out, 16);                 // PCM fmt chunk size
    push_u16(out, 1);                  // PCM format tag
    push_u16(out, kChannels);
    push_u32(out, static_cast<std::uint32_t>(sample_rate_hz));
    push_u32(out, byte_rate);
    push_u16(out, kChannels * (kBitsPerSample / 8));  // block align
    push_u16(out, kBitsPerSample);
    push_tag(out, "data");
    push_u32(out, data_bytes);
    for (const double sample : samples) {
        const double clamped = std::clamp(sample, -1.0, 1.0);
        const auto value = static_cast<std::int16_t>(std::lround(clamped * 32767.0));
        push_u16(out, static_cast<std::uint16_t>(value));
    }
    return out;
}

void write_wav16(const std::filesystem::path& path, std::span<const double> samples,
                 int sample_rate_hz) {
    const auto bytes = encode_wav16(samples, sample_rate_hz);
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        throw std::runtime_error("wav: cannot open " + path.string() + " for writing");
    }
    file.write(reinterpret_cast<const char*>(bytes.data()),
               static_cast<std::streamsize>(bytes.size()));
    if (!file) {
        throw std::runtime_error("wav: write to " + path.string() + " failed");
    }
}

}  // namespace logtone
