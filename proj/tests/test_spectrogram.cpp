#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "pcgid/error.hpp"
#include "pcgid/spectrogram.hpp"
#include "support/checks.hpp"
#include "support/oracles.hpp"
#include "support/wav_codec.hpp"

using namespace pcgid;
using testsupport::code_of;

namespace {

AudioClip mono_clip(std::vector<double> samples, std::uint32_t rate = 8000) {
  AudioClip clip;
  clip.samples = std::move(samples);
  clip.sample_rate = rate;
  clip.channels = 1;
  return clip;
}

StftConfig rect_config(std::size_t frame_len = 256, std::size_t hop = 128) {
  StftConfig cfg;
  cfg.frame_len = frame_len;
  cfg.hop = hop;
  cfg.window = Window::Rectangular;
  return cfg;
}

}  // namespace

TEST_CASE("fft_half_spectrum matches the brute-force DFT") {
  std::mt19937_64 rng(101);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);

  for (std::size_t n : {8u, 32u, 256u}) {
    std::vector<double> frame(n);
    for (double& v : frame) v = dist(rng);

    const auto fast = fft_half_spectrum(frame);
    const auto slow = oracle::brute_dft(frame);
    REQUIRE(fast.size() == n / 2 + 1);
    for (std::size_t k = 0; k <= n / 2; ++k) {
      CHECK(std::abs(fast[k] - slow[k]) < 1e-9 * (1.0 + std::abs(slow[k])));
    }
  }
}

TEST_CASE("fft_half_spectrum rejects non-power-of-two lengths") {
  std::vector<double> frame(20, 0.0);
  CHECK_THROWS_AS(fft_half_spectrum(frame), std::invalid_argument);
}

TEST_CASE("Parseval: half-spectrum energy equals frame_len times sample energy") {
  std::mt19937_64 rng(102);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  const std::size_t n = 128;

  for (int trial = 0; trial < 10; ++trial) {
    std::vector<double> frame(n);
    double sample_energy = 0.0;
    for (double& v : frame) {
      v = dist(rng);
      sample_energy += v * v;
    }

    const auto bins = fft_half_spectrum(frame);
    // reassemble the full-spectrum energy from the real-input half spectrum
    double spectrum_energy = std::norm(bins[0]) + std::norm(bins[n / 2]);
    for (std::size_t k = 1; k < n / 2; ++k) spectrum_energy += 2.0 * std::norm(bins[k]);

    const double expected = static_cast<double>(n) * sample_energy;
    CHECK(std::abs(spectrum_energy - expected) <= 1e-6 * expected);

    // and the oracle DFT agrees bin by bin
    const auto slow = oracle::brute_dft(frame);
    double oracle_energy = 0.0;
    for (const auto& x : slow) oracle_energy += std::norm(x);
    CHECK(std::abs(spectrum_energy - oracle_energy) <= 1e-6 * oracle_energy);
  }
}

TEST_CASE("bin-aligned sinusoid peaks at its own bin in every frame") {
  const std::size_t frame_len = 256;
  const std::uint32_t rate = 8000;

  for (std::size_t k : {3u, 17u, 60u}) {
    const double freq = static_cast<double>(k) * rate / frame_len;
    std::vector<double> samples(frame_len * 4);
    for (std::size_t i = 0; i < samples.size(); ++i) {
      samples[i] = std::sin(2.0 * std::numbers::pi * freq * i / rate);
    }

    const Spectrogram spec = stft_magnitude(mono_clip(std::move(samples), rate),
                                            rect_config(frame_len, 64));
    for (std::size_t t = 0; t < spec.values.cols; ++t) {
      std::size_t argmax = 0;
      for (std::size_t r = 1; r < spec.values.rows; ++r) {
        if (spec.values(r, t) > spec.values(argmax, t)) argmax = r;
      }
      CHECK(argmax == k);
    }
  }
}

TEST_CASE("all-zero clip renders at the dB floor everywhere") {
  const Spectrogram spec =
      stft_magnitude(mono_clip(std::vector<double>(1000, 0.0)), rect_config());
  for (double v : spec.values.data) CHECK(v == -100.0);
}

TEST_CASE("constant (DC) clip peaks at bin zero") {
  const Spectrogram spec =
      stft_magnitude(mono_clip(std::vector<double>(1000, 0.5)), rect_config());
  for (std::size_t t = 0; t < spec.values.cols; ++t) {
    std::size_t argmax = 0;
    for (std::size_t r = 1; r < spec.values.rows; ++r) {
      if (spec.values(r, t) > spec.values(argmax, t)) argmax = r;
    }
    CHECK(argmax == 0);
  }
}

TEST_CASE("frame count follows floor((n - frame_len)/hop) + 1") {
  std::mt19937_64 rng(103);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t frame_len = 64;
    const std::size_t hop = 1 + rng() % frame_len;
    const std::size_t n = frame_len + rng() % 2000;

    const Spectrogram spec =
        stft_magnitude(mono_clip(std::vector<double>(n, 0.1)), rect_config(frame_len, hop));
    CHECK(spec.values.cols == (n - frame_len) / hop + 1);
    CHECK(spec.values.rows == frame_len / 2 + 1);
  }
}

TEST_CASE("clip shorter than one frame is rejected") {
  CHECK(code_of([&] {
          stft_magnitude(mono_clip(std::vector<double>(100, 0.0)), rect_config(256, 128));
        }) == ErrorCode::ClipTooShort);
}

TEST_CASE("stft config validation") {
  StftConfig cfg = rect_config();
  SUBCASE("non-power-of-two frame") {
    cfg.frame_len = 100;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  }
  SUBCASE("hop larger than frame") {
    cfg.hop = 512;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  }
  SUBCASE("zero hop") {
    cfg.hop = 0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  }
  SUBCASE("non-negative floor") {
    cfg.db_floor = 0.0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  }
}

TEST_CASE("quantize maps the dB range onto 0..255 with round-half-up") {
  Spectrogram spec;
  spec.values = Matrix(2, 2);
  spec.values(0, 0) = -100.0;
  spec.values(0, 1) = -50.0;
  spec.values(1, 0) = 0.0;
  spec.values(1, 1) = -100.0;

  const PixelMatrix px = quantize(spec);
  CHECK(px(0, 0) == 0);
  CHECK(px(0, 1) == 128);  // -50 sits at 127.5, rounds up
  CHECK(px(1, 0) == 255);
  CHECK(px(1, 1) == 0);
}

TEST_CASE("quantize collapses a constant matrix to zeros") {
  Spectrogram spec;
  spec.values = Matrix(3, 4, -42.0);
  const PixelMatrix px = quantize(spec);
  for (auto p : px.pixels) CHECK(p == 0);
}

TEST_CASE("quantize of a single element is zero") {
  Spectrogram spec;
  spec.values = Matrix(1, 1, -3.0);
  CHECK(quantize(spec)(0, 0) == 0);
}

TEST_CASE("quantize is monotone and covers the full range") {
  std::mt19937_64 rng(104);
  std::uniform_real_distribution<double> dist(-100.0, 0.0);

  Spectrogram spec;
  spec.values = Matrix(16, 16);
  for (double& v : spec.values.data) v = dist(rng);

  const PixelMatrix px = quantize(spec);

  bool has_zero = false;
  bool has_full = false;
  for (std::size_t i = 0; i < px.pixels.size(); ++i) {
    has_zero |= px.pixels[i] == 0;
    has_full |= px.pixels[i] == 255;
    for (std::size_t j = 0; j < px.pixels.size(); ++j) {
      if (spec.values.data[i] >= spec.values.data[j]) {
        CHECK(px.pixels[i] >= px.pixels[j]);
      }
    }
  }
  CHECK(has_zero);
  CHECK(has_full);
}

TEST_CASE("resize_bilinear to the same shape is the identity") {
  std::mt19937_64 rng(105);
  PixelMatrix px(7, 9);
  for (auto& p : px.pixels) p = rng() % 256;
  CHECK(resize_bilinear(px, 7, 9) == px);
}

TEST_CASE("resize_bilinear interpolates midpoints") {
  PixelMatrix px(1, 2);
  px(0, 0) = 0;
  px(0, 1) = 255;
  const PixelMatrix out = resize_bilinear(px, 1, 3);
  REQUIRE(out.cols == 3);
  CHECK(out(0, 0) == 0);
  CHECK(out(0, 1) == 128);  // 127.5 rounds up
  CHECK(out(0, 2) == 255);
}

TEST_CASE("resize_bilinear keeps constants constant") {
  const PixelMatrix px(5, 5, 77);
  const PixelMatrix out = resize_bilinear(px, 13, 3);
  for (auto p : out.pixels) CHECK(p == 77);
}

TEST_CASE("resize_bilinear output stays inside the input range") {
  std::mt19937_64 rng(106);
  for (int trial = 0; trial < 20; ++trial) {
    PixelMatrix px(2 + rng() % 20, 2 + rng() % 20);
    std::uint8_t lo = 255;
    std::uint8_t hi = 0;
    for (auto& p : px.pixels) {
      p = 30 + rng() % 150;
      lo = std::min(lo, p);
      hi = std::max(hi, p);
    }
    const PixelMatrix out = resize_bilinear(px, 1 + rng() % 40, 1 + rng() % 40);
    for (auto p : out.pixels) {
      CHECK(p >= lo);
      CHECK(p <= hi);
    }
  }
}

TEST_CASE("render_pgm emits the P5 header and bottom-up rows") {
  SUBCASE("single pixel") {
    PixelMatrix px(1, 1);
    px(0, 0) = 0;
    const auto bytes = render_pgm(px);
    const std::string expected = "P5\n1 1\n255\n";
    REQUIRE(bytes.size() == expected.size() + 1);
    CHECK(std::string(bytes.begin(), bytes.begin() + expected.size()) == expected);
    CHECK(bytes.back() == 0);
  }
  SUBCASE("2x2 payload size") {
    const PixelMatrix px(2, 2, 9);
    const auto bytes = render_pgm(px);
    const std::string expected = "P5\n2 2\n255\n";
    CHECK(bytes.size() == expected.size() + 4);
  }
  SUBCASE("row zero is emitted last") {
    PixelMatrix px(2, 1);
    px(0, 0) = 10;  // DC row
    px(1, 0) = 200;
    const auto bytes = render_pgm(px);
    CHECK(bytes[bytes.size() - 2] == 200);
    CHECK(bytes[bytes.size() - 1] == 10);
  }
}

TEST_CASE("PGM round-trip through the test reader") {
  std::mt19937_64 rng(107);
  for (int trial = 0; trial < 10; ++trial) {
    PixelMatrix px(1 + rng() % 30, 1 + rng() % 30);
    for (auto& p : px.pixels) p = rng() % 256;
    CHECK(testsupport::parse_pgm(render_pgm(px)) == px);
  }
}
