#include "pcgid/pipeline.hpp"

#include <algorithm>
#include <map>

#include "pcgid/error.hpp"

namespace pcgid {

PixelMatrix pixels_from_clip(const AudioClip& clip, const StftConfig& cfg) {
  return quantize(stft_magnitude(normalize_peak(downmix_to_mono(clip)), cfg));
}

PixelMatrix pixels_from_wav_bytes(std::span<const std::uint8_t> bytes,
                                  const StftConfig& cfg) {
  return pixels_from_clip(parse_wav(bytes), cfg);
}

TrainingRecord record_from_clip(const AudioClip& clip, const std::string& label,
                                const std::string& source_id, const StftConfig& cfg) {
  return TrainingRecord{label, pixels_from_clip(clip, cfg), source_id};
}

namespace {

EvalReport make_report(const std::vector<std::pair<std::string, std::string>>& truth_to_pred) {
  std::map<std::string, std::size_t> class_index;
  for (const auto& [truth, pred] : truth_to_pred) {
    class_index.emplace(truth, 0);
    class_index.emplace(pred, 0);
  }

  EvalReport report;
  for (auto& [name, idx] : class_index) {
    idx = report.classes.size();
    report.classes.push_back(name);
  }

  const std::size_t n = report.classes.size();
  report.confusion.assign(n, std::vector<std::size_t>(n, 0));
  report.class_totals.assign(n, 0);
  report.class_correct.assign(n, 0);

  for (const auto& [truth, pred] : truth_to_pred) {
    const std::size_t t = class_index[truth];
    const std::size_t p = class_index[pred];
    report.confusion[t][p] += 1;
    report.class_totals[t] += 1;
    report.total += 1;
    if (t == p) {
      report.class_correct[t] += 1;
      report.correct += 1;
    }
  }
  return report;
}

}  // namespace

EvalReport evaluate_loo(const SpectroDb& db, const PipelineConfig& cfg) {
  if (db.records.size() < 2) {
    throw Error(ErrorCode::TooFewRecords, "leave-one-out needs at least 2 records, have " +
                                              std::to_string(db.records.size()));
  }

  std::vector<std::pair<std::string, std::string>> outcomes;
  outcomes.reserve(db.records.size());

  for (std::size_t i = 0; i < db.records.size(); ++i) {
    std::vector<TrainingRecord> others;
    others.reserve(db.records.size() - 1);
    for (std::size_t j = 0; j < db.records.size(); ++j) {
      if (j != i) others.push_back(db.records[j]);
    }
    const ClassificationResult res =
        classify(db.records[i].pixels, others, cfg.n_levels, cfg.feature_mode);
    outcomes.emplace_back(db.records[i].label, res.best_label);
  }
  return make_report(outcomes);
}

EvalReport evaluate_split(const std::vector<TrainingRecord>& train,
                          const std::vector<TrainingRecord>& test,
                          const PipelineConfig& cfg) {
  if (train.empty()) throw Error(ErrorCode::EmptyDatabase, "training set is empty");
  if (test.empty()) throw Error(ErrorCode::TooFewRecords, "test set is empty");

  std::vector<std::pair<std::string, std::string>> outcomes;
  outcomes.reserve(test.size());
  for (const TrainingRecord& rec : test) {
    const ClassificationResult res = classify(rec.pixels, train, cfg.n_levels, cfg.feature_mode);
    outcomes.emplace_back(rec.label, res.best_label);
  }
  return make_report(outcomes);
}

}  // namespace pcgid
