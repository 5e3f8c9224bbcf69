#include "pcgid/audio_io.hpp"

#include <cmath>
#include <cstring>
#include <string>

#include "pcgid/error.hpp"

namespace pcgid {

namespace {

// Sequential little-endian reader over the raw file bytes.
struct ByteReader {
  std::span<const std::uint8_t> bytes;
  std::size_t pos = 0;

  std::size_t remaining() const { return bytes.size() - pos; }

  bool read_tag(char out[4]) {
    if (remaining() < 4) return false;
    std::memcpy(out, bytes.data() + pos, 4);
    pos += 4;
    return true;
  }

  bool read_u16(std::uint16_t& out) {
    if (remaining() < 2) return false;
    out = static_cast<std::uint16_t>(bytes[pos] | (bytes[pos + 1] << 8));
    pos += 2;
    return true;
  }

  bool read_u32(std::uint32_t& out) {
    if (remaining() < 4) return false;
    out = static_cast<std::uint32_t>(bytes[pos]) |
          (static_cast<std::uint32_t>(bytes[pos + 1]) << 8) |
          (static_cast<std::uint32_t>(bytes[pos + 2]) << 16) |
          (static_cast<std::uint32_t>(bytes[pos + 3]) << 24);
    pos += 4;
    return true;
  }

  void skip(std::size_t n) { pos += (n <= remaining() ? n : remaining()); }
};

bool tag_is(const char tag[4], const char* expect) {
  return std::memcmp(tag, expect, 4) == 0;
}

struct FmtChunk {
  std::uint16_t format_tag = 0;
  std::uint16_t channels = 0;
  std::uint32_t sample_rate = 0;
  std::uint16_t bits_per_sample = 0;
};

[[noreturn]] void fail(ErrorCode code, const std::string& msg) { throw Error(code, msg); }

}  // namespace

AudioClip parse_wav(std::span<const std::uint8_t> bytes) {
  ByteReader in{bytes};

  char tag[4];
  std::uint32_t riff_size = 0;
  if (!in.read_tag(tag) || !tag_is(tag, "RIFF") || !in.read_u32(riff_size) ||
      !in.read_tag(tag) || !tag_is(tag, "WAVE")) {
    fail(ErrorCode::MalformedHeader, "not a RIFF/WAVE file");
  }

  FmtChunk fmt;
  bool have_fmt = false;

  // Walk chunks until the data chunk; everything unknown is skipped.
  while (true) {
    std::uint32_t chunk_size = 0;
    if (!in.read_tag(tag) || !in.read_u32(chunk_size)) {
      fail(ErrorCode::MalformedHeader,
           have_fmt ? "missing data chunk" : "missing fmt chunk");
    }

    if (tag_is(tag, "fmt ")) {
      std::size_t chunk_start = in.pos;
      if (chunk_size < 16 || !in.read_u16(fmt.format_tag) || !in.read_u16(fmt.channels) ||
          !in.read_u32(fmt.sample_rate)) {
        fail(ErrorCode::MalformedHeader, "fmt chunk too short");
      }
      in.skip(6);  // byte rate + block align
      if (!in.read_u16(fmt.bits_per_sample)) {
        fail(ErrorCode::MalformedHeader, "fmt chunk too short");
      }
      in.pos = chunk_start;
      in.skip(chunk_size + (chunk_size & 1));  // RIFF pad rule
      have_fmt = true;
      continue;
    }

    if (tag_is(tag, "data")) {
      if (!have_fmt) fail(ErrorCode::MalformedHeader, "data chunk precedes fmt chunk");
      if (fmt.format_tag != 1) {
        fail(ErrorCode::UnsupportedEncoding,
             "unsupported format tag " + std::to_string(fmt.format_tag) + " (PCM only)");
      }
      if (fmt.bits_per_sample != 8 && fmt.bits_per_sample != 16) {
        fail(ErrorCode::UnsupportedEncoding,
             "unsupported bit depth " + std::to_string(fmt.bits_per_sample));
      }
      if (fmt.channels == 0) fail(ErrorCode::MalformedHeader, "fmt declares zero channels");
      if (fmt.sample_rate == 0) fail(ErrorCode::MalformedHeader, "fmt declares zero sample rate");

      if (in.remaining() < chunk_size) {
        fail(ErrorCode::TruncatedData,
             "data chunk declares " + std::to_string(chunk_size) + " bytes, only " +
                 std::to_string(in.remaining()) + " present");
      }

      const std::uint8_t* payload = bytes.data() + in.pos;
      const std::size_t bytes_per_sample = fmt.bits_per_sample / 8;
      const std::size_t frame_bytes = bytes_per_sample * fmt.channels;
      const std::size_t n_frames = chunk_size / frame_bytes;  // partial frame dropped
      if (n_frames == 0) fail(ErrorCode::MalformedHeader, "empty data chunk");

      AudioClip clip;
      clip.sample_rate = fmt.sample_rate;
      clip.channels = fmt.channels;
      clip.samples.resize(n_frames * fmt.channels);

      if (fmt.bits_per_sample == 8) {
        for (std::size_t i = 0; i < clip.samples.size(); ++i) {
          clip.samples[i] = (static_cast<int>(payload[i]) - 128) / 128.0;
        }
      } else {
        for (std::size_t i = 0; i < clip.samples.size(); ++i) {
          const std::uint16_t raw =
              static_cast<std::uint16_t>(payload[2 * i] | (payload[2 * i + 1] << 8));
          clip.samples[i] = static_cast<std::int16_t>(raw) / 32768.0;
        }
      }
      return clip;
    }

    // unknown chunk (LIST, INFO, fact, ...)
    if (in.remaining() < chunk_size) {
      fail(ErrorCode::MalformedHeader, "missing data chunk");
    }
    in.skip(chunk_size + (chunk_size & 1));
  }
}

AudioClip downmix_to_mono(const AudioClip& clip) {
  if (clip.channels <= 1) return clip;

  AudioClip mono;
  mono.sample_rate = clip.sample_rate;
  mono.channels = 1;
  const std::size_t frames = clip.frame_count();
  mono.samples.resize(frames);
  for (std::size_t f = 0; f < frames; ++f) {
    double sum = 0.0;
    for (std::size_t c = 0; c < clip.channels; ++c) {
      sum += clip.samples[f * clip.channels + c];
    }
    mono.samples[f] = sum / clip.channels;
  }
  return mono;
}

AudioClip normalize_peak(const AudioClip& clip) {
  double peak = 0.0;
  for (double s : clip.samples) peak = std::max(peak, std::fabs(s));
  if (peak == 0.0) return clip;

  AudioClip out = clip;
  for (double& s : out.samples) s /= peak;
  return out;
}

}  // namespace pcgid
