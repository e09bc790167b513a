#pragma once

#include <filesystem>
#include <span>
#include <vector>

namespace logtone {

// Writes mono 16-bit signed little-endian PCM in a canonical 44-byte
// RIFF/WAVE header. Samples are clamped to [-1, 1] and rounded.
void write_wav16(const std::filesystem::path& path, std::span<const double> samples,
                 int sample_rate_hz);

// In-memory encoding used by write_wav16; exposed for header-level tests.
std::vector<unsigned char> encode_wav16(std::span<const double> samples, int sample_rate_hz);

}  // namespace logtone
