#include "pcgid/synthgen.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace pcgid {

namespace {

constexpr double kBurstLen = 0.050;   // seconds
constexpr double kBurstTau = 0.012;   // exponential decay constant
constexpr double kS1Freq = 60.0;      // Hz
constexpr double kS2Freq = 90.0;
constexpr double kS3Freq = 45.0;
constexpr double kS2OnsetFrac = 0.38;  // of the beat period; keeps systole < diastole
constexpr int kMurmurPartials = 48;
constexpr double kMurmurLow = 100.0;   // Hz
constexpr double kMurmurHigh = 400.0;

struct Partial {
  double freq;
  double amp;
  double phase;
};

void add_burst(std::vector<double>& samples, std::uint32_t rate, double onset,
               double freq, double amp) {
  const auto begin = static_cast<long long>(std::ceil(onset * rate));
  const auto end = static_cast<long long>(std::floor((onset + kBurstLen) * rate));
  for (long long i = std::max(begin, 0LL);
       i <= end && i < static_cast<long long>(samples.size()); ++i) {
    const double t = static_cast<double>(i) / rate - onset;
    samples[static_cast<std::size_t>(i)] +=
        amp * std::exp(-t / kBurstTau) * std::sin(2.0 * std::numbers::pi * freq * t);
  }
}

void add_partials(std::vector<double>& samples, std::uint32_t rate, double window_start,
                  double window_end, const std::vector<Partial>& partials) {
  const auto begin = static_cast<long long>(std::ceil(window_start * rate));
  const auto end = static_cast<long long>(std::floor(window_end * rate));
  for (long long i = std::max(begin, 0LL);
       i <= end && i < static_cast<long long>(samples.size()); ++i) {
    const double t = static_cast<double>(i) / rate;
    double v = 0.0;
    for (const Partial& p : partials) {
      v += p.amp * std::sin(2.0 * std::numbers::pi * p.freq * t + p.phase);
    }
    samples[static_cast<std::size_t>(i)] += v;
  }
}

}  // namespace

const char* class_label(ClassKind kind) {
  switch (kind) {
    case ClassKind::NormalLike: return "normal";
    case ClassKind::MurmurLike: return "murmur";
    case ClassKind::ExtraSoundLike: return "extrasound";
  }
  return "unknown";
}

AudioClip synth_clip(const SynthSpec& spec) {
  if (!(spec.duration_s > 0.0)) throw std::invalid_argument("duration_s must be positive");
  if (spec.sample_rate < 2000) throw std::invalid_argument("sample_rate must be >= 2000 Hz");
  if (spec.beat_rate_bpm < 40.0 || spec.beat_rate_bpm > 180.0) {
    throw std::invalid_argument("beat_rate_bpm must be in [40, 180]");
  }

  const std::uint32_t rate = spec.sample_rate;
  const std::size_t n_samples =
      static_cast<std::size_t>(std::llround(spec.duration_s * rate));
  if (n_samples == 0) throw std::invalid_argument("duration too short for one sample");

  const double beat_period = 60.0 / spec.beat_rate_bpm;

  // Two independent streams so clips of different classes share the same
  // beat skeleton for a given seed.
  SplitMix64 beat_rng(spec.seed);
  SplitMix64 texture_rng(spec.seed ^ 0x9E3779B97F4A7C15ULL);

  std::vector<Partial> murmur;
  if (spec.class_kind == ClassKind::MurmurLike) {
    murmur.reserve(kMurmurPartials);
    const double step = (kMurmurHigh - kMurmurLow) / kMurmurPartials;
    for (int j = 0; j < kMurmurPartials; ++j) {
      Partial p;
      p.freq = kMurmurLow + (j + 0.5) * step;
      p.amp = 0.08 * (0.6 + 0.4 * texture_rng.next_unit());
      p.phase = 2.0 * std::numbers::pi * texture_rng.next_unit();
      murmur.push_back(p);
    }
  }

  std::vector<double> samples(n_samples, 0.0);
  const int n_beats = static_cast<int>(std::ceil(spec.duration_s / beat_period));
  for (int k = 0; k < n_beats; ++k) {
    const double jitter = 0.010 * beat_rng.next_signed();
    const double s1_gain = 1.0 + 0.15 * beat_rng.next_signed();
    const double s2_gain = 1.0 + 0.15 * beat_rng.next_signed();
    const double s3_gain = 1.0 + 0.15 * beat_rng.next_signed();

    const double t0 = k * beat_period + jitter;
    const double s2_onset = t0 + kS2OnsetFrac * beat_period;

    add_burst(samples, rate, t0, kS1Freq, 1.0 * s1_gain);
    add_burst(samples, rate, s2_onset, kS2Freq, 0.8 * s2_gain);

    if (spec.class_kind == ClassKind::MurmurLike) {
      // fill systole: S1 end up to S2 onset
      add_partials(samples, rate, t0 + kBurstLen, s2_onset, murmur);
    }
    if (spec.class_kind == ClassKind::ExtraSoundLike) {
      // early diastole, after S2 dies out
      const double s3_onset = s2_onset + kBurstLen + 0.12 * beat_period;
      add_burst(samples, rate, s3_onset, kS3Freq, 0.7 * s3_gain);
    }
  }

  AudioClip clip;
  clip.sample_rate = rate;
  clip.channels = 1;
  clip.samples = std::move(samples);
  return normalize_peak(clip);
}

}  // namespace pcgid
