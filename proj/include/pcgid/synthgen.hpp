#pragma once

#include <cstdint>
#include <string>

#include "pcgid/audio_io.hpp"

namespace pcgid {

/// SplitMix64 (Steele/Lea/Flood 2014). Fixed algorithm so generated corpora
/// are reproducible across platforms and language ports.
struct SplitMix64 {
  std::uint64_t state = 0;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1), 53-bit resolution.
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform in [-1, 1).
  double next_signed() { return 2.0 * next_unit() - 1.0; }
};

enum class ClassKind { NormalLike, MurmurLike, ExtraSoundLike };

/// Label written into synthetic corpora: "normal", "murmur" or "extrasound".
const char* class_label(ClassKind kind);

struct SynthSpec {
  ClassKind class_kind = ClassKind::NormalLike;
  std::uint64_t seed = 0;
  double duration_s = 5.0;
  std::uint32_t sample_rate = 4000;  // >= 2000
  double beat_rate_bpm = 72.0;       // 40..180
};

/// Deterministic synthetic heart-sound clip.
///
/// NormalLike lays down two damped-sine bursts per beat (S1 ~60 Hz, S2
/// ~90 Hz) with systole shorter than diastole. MurmurLike adds band-limited
/// noise (100-400 Hz) filling systole. ExtraSoundLike adds a third ~45 Hz
/// burst in early diastole. Per-beat jitter comes from SplitMix64 seeded by
/// spec.seed, so the same spec always yields bit-identical samples.
///
/// Throws std::invalid_argument when the spec violates its bounds.
AudioClip synth_clip(const SynthSpec& spec);

}  // namespace pcgid
