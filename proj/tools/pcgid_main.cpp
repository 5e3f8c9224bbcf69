#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <map>
#include <string>
#include <vector>

#include "pcgid/datastore.hpp"
#include "pcgid/error.hpp"
#include "pcgid/pipeline.hpp"
#include "pcgid/wavelet.hpp"

namespace fs = std::filesystem;
using namespace pcgid;

namespace {

struct SharedOptions {
  PipelineConfig cfg;
  std::string label;      // overrides directory-derived labels
  bool skip_bad = false;  // keep going past unreadable inputs
};

void add_pipeline_flags(CLI::App* sub, SharedOptions& opt) {
  static const std::map<std::string, Window> windows{
      {"hann", Window::Hann}, {"rect", Window::Rectangular}};
  static const std::map<std::string, FeatureMode> modes{
      {"all", FeatureMode::AllLevels}, {"last", FeatureMode::LastLevelOnly}};

  sub->add_option("--frame-len", opt.cfg.stft.frame_len,
                  "STFT frame length, power of two (default 256)");
  sub->add_option("--hop", opt.cfg.stft.hop, "samples between frames (default 128)");
  sub->add_option("--window", opt.cfg.stft.window, "analysis window (default hann)")
      ->transform(CLI::CheckedTransformer(windows, CLI::ignore_case));
  sub->add_option("--db-floor", opt.cfg.stft.db_floor,
                  "magnitude floor in dB (default -100)");
  sub->add_option("--levels", opt.cfg.n_levels, "wavelet decomposition depth (default 4)")
      ->check(CLI::PositiveNumber);
  sub->add_option("--feature-mode", opt.cfg.feature_mode,
                  "feature vector from all levels or the last only (default all)")
      ->transform(CLI::CheckedTransformer(modes, CLI::ignore_case));
}

void add_corpus_flags(CLI::App* sub, SharedOptions& opt) {
  sub->add_option("--label", opt.label,
                  "label for every input (default: parent directory name)");
  sub->add_flag("--skip-bad", opt.skip_bad, "skip unreadable inputs instead of failing");
}

std::vector<std::uint8_t> read_file_bytes(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoFailure, "cannot open " + path.string());
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  if (in.bad()) throw Error(ErrorCode::IoFailure, "read failed: " + path.string());
  return bytes;
}

void write_file_bytes(const fs::path& path, const std::vector<std::uint8_t>& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw Error(ErrorCode::IoFailure, "cannot open " + path.string() + " for writing");
  }
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  out.flush();
  if (!out) throw Error(ErrorCode::IoFailure, "write failed: " + path.string());
}

bool has_wav_extension(const fs::path& p) {
  std::string ext = p.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return ext == ".wav";
}

// Files are listed in sorted path order so every run sees the same sequence.
std::vector<fs::path> collect_wav_files(const std::vector<std::string>& inputs) {
  std::vector<fs::path> files;
  for (const std::string& raw : inputs) {
    const fs::path p(raw);
    if (fs::is_directory(p)) {
      for (const auto& entry : fs::recursive_directory_iterator(p)) {
        if (entry.is_regular_file() && has_wav_extension(entry.path())) {
          files.push_back(entry.path());
        }
      }
    } else if (fs::exists(p)) {
      files.push_back(p);
    } else {
      throw Error(ErrorCode::IoFailure, "no such input: " + raw);
    }
  }
  std::sort(files.begin(), files.end(), [](const fs::path& a, const fs::path& b) {
    return a.generic_string() < b.generic_string();
  });
  return files;
}

std::string label_for(const fs::path& file, const std::string& override_label) {
  if (!override_label.empty()) return override_label;
  const std::string name = fs::absolute(file).parent_path().filename().string();
  return name.empty() ? "unlabeled" : name;
}

std::vector<TrainingRecord> records_from_files(const std::vector<fs::path>& files,
                                               const SharedOptions& opt) {
  std::vector<TrainingRecord> records;
  std::size_t failures = 0;
  for (const fs::path& file : files) {
    try {
      const std::vector<std::uint8_t> bytes = read_file_bytes(file);
      records.push_back(record_from_clip(parse_wav(bytes), label_for(file, opt.label),
                                         file.generic_string(), opt.cfg.stft));
    } catch (const std::exception& e) {
      ++failures;
      std::cerr << file.generic_string() << ": " << e.what() << "\n";
    }
  }
  if (failures > 0 && !opt.skip_bad) {
    throw Error(ErrorCode::IoFailure,
                std::to_string(failures) + " of " + std::to_string(files.size()) +
                    " input(s) failed; pass --skip-bad to ignore them");
  }
  return records;
}

// A corpus argument is either a directory of wav files or a saved database.
std::vector<TrainingRecord> records_from_path(const std::string& raw,
                                              const SharedOptions& opt) {
  const fs::path p(raw);
  if (fs::is_directory(p)) {
    const std::vector<fs::path> files = collect_wav_files({raw});
    if (files.empty()) throw Error(ErrorCode::EmptyDatabase, "no .wav files under " + raw);
    return records_from_files(files, opt);
  }
  return load_db_file(p).records;
}

int run_build_db(const std::vector<std::string>& inputs, const std::string& out_path,
                 const SharedOptions& opt) {
  const std::vector<fs::path> files = collect_wav_files(inputs);
  if (files.empty()) throw Error(ErrorCode::EmptyDatabase, "no .wav inputs found");

  SpectroDb db;
  db.records = records_from_files(files, opt);
  if (db.records.empty()) throw Error(ErrorCode::EmptyDatabase, "every input was skipped");

  const std::size_t bytes = save_db_file(db, out_path);

  std::map<std::string, std::size_t> counts;
  for (const TrainingRecord& rec : db.records) counts[rec.label] += 1;

  std::cout << "records\t" << db.records.size() << "\n";
  for (const auto& [label, n] : counts) std::cout << "label\t" << label << "\t" << n << "\n";
  std::cout << "wrote\t" << out_path << "\t" << bytes << "\n";
  return 0;
}

int run_classify(const std::string& db_path, const std::string& wav_path, std::size_t top,
                 const SharedOptions& opt) {
  const SpectroDb db = load_db_file(db_path);
  const PixelMatrix px = pixels_from_wav_bytes(read_file_bytes(wav_path), opt.cfg.stft);
  const ClassificationResult res =
      classify(px, db.records, opt.cfg.n_levels, opt.cfg.feature_mode);

  std::cout << std::fixed << std::setprecision(4);
  std::cout << "best\t" << res.best_label << "\t" << res.best_distance << "\n";

  const std::size_t shown = top == 0 ? res.ranking.size() : std::min(top, res.ranking.size());
  for (std::size_t i = 0; i < shown; ++i) {
    const RankedMatch& m = res.ranking[i];
    std::cout << "rank\t" << i + 1 << "\t" << m.source_id << "\t" << m.label << "\t"
              << m.distance << "\t" << (i == 0 ? "Matched" : "Mismatched") << "\n";
  }
  return 0;
}

void print_report(const char* mode, const EvalReport& report) {
  std::cout << std::fixed << std::setprecision(4);
  std::cout << "mode\t" << mode << "\n";
  std::cout << "records\t" << report.total << "\n";
  std::cout << "accuracy\t" << report.accuracy() << "\t" << report.correct << "\t"
            << report.total << "\n";
  for (std::size_t i = 0; i < report.classes.size(); ++i) {
    std::cout << "class\t" << report.classes[i] << "\t" << report.class_correct[i] << "\t"
              << report.class_totals[i] << "\t" << report.class_accuracy(i) << "\n";
  }
  std::cout << "confusion\ttrue\\pred";
  for (const std::string& c : report.classes) std::cout << "\t" << c;
  std::cout << "\n";
  for (std::size_t t = 0; t < report.classes.size(); ++t) {
    std::cout << "confusion\t" << report.classes[t];
    for (std::size_t p = 0; p < report.classes.size(); ++p) {
      std::cout << "\t" << report.confusion[t][p];
    }
    std::cout << "\n";
  }
}

int run_evaluate(const std::string& input, bool loo, const std::string& test_path,
                 const SharedOptions& opt) {
  if (loo == !test_path.empty()) {
    throw std::invalid_argument("pass exactly one of --loo or --test");
  }

  if (loo) {
    SpectroDb db;
    db.records = records_from_path(input, opt);
    print_report("loo", evaluate_loo(db, opt.cfg));
  } else {
    const std::vector<TrainingRecord> train = records_from_path(input, opt);
    const std::vector<TrainingRecord> test = records_from_path(test_path, opt);
    print_report("split", evaluate_split(train, test, opt.cfg));
  }
  return 0;
}

int run_render(const std::string& wav_path, std::string out_path, int level,
               const SharedOptions& opt) {
  PixelMatrix px = pixels_from_wav_bytes(read_file_bytes(wav_path), opt.cfg.stft);
  if (level > 0) {
    const ApproximationPyramid pyr = approximation_pyramid(to_matrix(px), level);
    px = quantize_matrix(pyr.levels.back());
  }
  if (out_path.empty()) {
    out_path = fs::path(wav_path).replace_extension(".pgm").generic_string();
  }
  write_file_bytes(out_path, render_pgm(px));
  std::cout << "wrote\t" << out_path << "\t" << px.rows << "\t" << px.cols << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"heart sound spectrogram identification"};
  app.require_subcommand(1);

  SharedOptions opt;

  std::vector<std::string> build_inputs;
  std::string build_out;
  CLI::App* build = app.add_subcommand("build-db", "build a spectrogram database from wav files");
  build->add_option("inputs", build_inputs, "wav files or directories")->required();
  build->add_option("-o,--out", build_out, "output database path")->required();
  add_pipeline_flags(build, opt);
  add_corpus_flags(build, opt);

  std::string classify_db;
  std::string classify_wav;
  std::size_t top = 5;
  CLI::App* cls = app.add_subcommand("classify", "classify a wav clip against a database");
  cls->add_option("wav", classify_wav, "test clip")->required();
  cls->add_option("--db", classify_db, "database path")->required();
  cls->add_option("--top", top, "ranking rows to print, 0 for all (default 5)");
  add_pipeline_flags(cls, opt);

  std::string eval_input;
  std::string eval_test;
  bool loo = false;
  CLI::App* eval = app.add_subcommand("evaluate", "score a labeled corpus");
  eval->add_option("input", eval_input, "database file or directory of wav files")->required();
  eval->add_flag("--loo", loo, "leave-one-out over the input records");
  eval->add_option("--test", eval_test, "held-out database or directory (split mode)");
  add_pipeline_flags(eval, opt);
  add_corpus_flags(eval, opt);

  std::string render_wav;
  std::string render_out;
  int render_level = 0;
  CLI::App* render = app.add_subcommand("render-spectrogram", "write a spectrogram as PGM");
  render->add_option("wav", render_wav, "input clip")->required();
  render->add_option("-o,--out", render_out, "output path (default: input with .pgm)");
  render->add_option("--level", render_level,
                     "render the approximation at this depth instead (0 = spectrogram)")
      ->check(CLI::NonNegativeNumber);
  add_pipeline_flags(render, opt);

  CLI11_PARSE(app, argc, argv);

  try {
    opt.cfg.stft.validate();
    if (*build) return run_build_db(build_inputs, build_out, opt);
    if (*cls) return run_classify(classify_db, classify_wav, top, opt);
    if (*eval) return run_evaluate(eval_input, loo, eval_test, opt);
    if (*render) return run_render(render_wav, render_out, render_level, opt);
  } catch (const Error& e) {
    std::cerr << "error: " << error_code_name(e.code()) << ": " << e.what() << "\n";
    return 10 + static_cast<int>(e.code());
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
