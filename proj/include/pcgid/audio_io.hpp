#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace pcgid {

/// Decoded PCM audio. Samples are normalized to [-1, 1]; when channels > 1
/// the vector holds interleaved frames until downmix_to_mono is applied.
struct AudioClip {
  std::vector<double> samples;
  std::uint32_t sample_rate = 0;
  std::uint16_t channels = 1;

  std::size_t frame_count() const {
    return channels == 0 ? 0 : samples.size() / channels;
  }
};

/// Parse a RIFF/WAVE container holding PCM data.
///
/// Accepts format tag 1 (integer PCM) at 8 or 16 bits per sample, any channel
/// count, little-endian. Unknown chunks (LIST, INFO, ...) are skipped. Sample
/// scaling: 8-bit unsigned v -> (v - 128) / 128, 16-bit signed v -> v / 32768.
///
/// Throws Error with MalformedHeader, UnsupportedEncoding or TruncatedData.
AudioClip parse_wav(std::span<const std::uint8_t> bytes);

/// Per-frame arithmetic mean across channels. Mono input is returned unchanged.
AudioClip downmix_to_mono(const AudioClip& clip);

/// Scale so the largest |sample| becomes 1. All-zero input is returned unchanged.
AudioClip normalize_peak(const AudioClip& clip);

}  // namespace pcgid
