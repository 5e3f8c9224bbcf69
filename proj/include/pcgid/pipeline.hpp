#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pcgid/datastore.hpp"
#include "pcgid/features.hpp"
#include "pcgid/matcher.hpp"
#include "pcgid/spectrogram.hpp"

namespace pcgid {

/// End-to-end settings shared by every command. The defaults (4 levels, all
/// approximation levels concatenated, 256/128 Hann STFT) are the reference
/// pipeline.
struct PipelineConfig {
  StftConfig stft;
  int n_levels = 4;
  FeatureMode feature_mode = FeatureMode::AllLevels;
};

/// downmix -> peak-normalize -> STFT -> quantize.
PixelMatrix pixels_from_clip(const AudioClip& clip, const StftConfig& cfg);

/// parse_wav followed by pixels_from_clip.
PixelMatrix pixels_from_wav_bytes(std::span<const std::uint8_t> bytes,
                                  const StftConfig& cfg);

TrainingRecord record_from_clip(const AudioClip& clip, const std::string& label,
                                const std::string& source_id, const StftConfig& cfg);

/// Accuracy report with a confusion matrix over lexicographically sorted
/// class labels.
struct EvalReport {
  std::vector<std::string> classes;                 // sorted, unique
  std::vector<std::vector<std::size_t>> confusion;  // [true_class][predicted]
  std::vector<std::size_t> class_totals;
  std::vector<std::size_t> class_correct;
  std::size_t total = 0;
  std::size_t correct = 0;

  double accuracy() const {
    return total == 0 ? 0.0 : static_cast<double>(correct) / static_cast<double>(total);
  }
  double class_accuracy(std::size_t i) const {
    return class_totals[i] == 0
               ? 0.0
               : static_cast<double>(class_correct[i]) / static_cast<double>(class_totals[i]);
  }
};

/// Leave-one-out evaluation: each record is classified against all others.
/// Throws TooFewRecords when fewer than two records are present.
EvalReport evaluate_loo(const SpectroDb& db, const PipelineConfig& cfg);

/// Fixed-split evaluation: every test record is classified against the
/// training set. Throws EmptyDatabase / TooFewRecords.
EvalReport evaluate_split(const std::vector<TrainingRecord>& train,
                          const std::vector<TrainingRecord>& test,
                          const PipelineConfig& cfg);

}  // namespace pcgid
