#include "pcgid/spectrogram.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "pcgid/error.hpp"

namespace pcgid {

namespace {

constexpr double kMagnitudeEpsilon = 1e-10;

// Iterative radix-2 Cooley-Tukey, in place. Size must be a power of two.
void fft_inplace(std::vector<std::complex<double>>& a) {
  const std::size_t n = a.size();

  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }

  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double angle = -2.0 * std::numbers::pi / static_cast<double>(len);
    const std::complex<double> w_len(std::cos(angle), std::sin(angle));
    for (std::size_t base = 0; base < n; base += len) {
      std::complex<double> w(1.0, 0.0);
      for (std::size_t k = 0; k < len / 2; ++k) {
        const std::complex<double> u = a[base + k];
        const std::complex<double> v = a[base + k + len / 2] * w;
        a[base + k] = u + v;
        a[base + k + len / 2] = u - v;
        w *= w_len;
      }
    }
  }
}

// round-half-up, inputs are non-negative here
std::uint8_t to_pixel(double v) {
  const double r = std::floor(v + 0.5);
  return static_cast<std::uint8_t>(std::clamp(r, 0.0, 255.0));
}

}  // namespace

void StftConfig::validate() const {
  if (frame_len == 0 || !std::has_single_bit(frame_len)) {
    throw std::invalid_argument("frame_len must be a power of two");
  }
  if (hop == 0 || hop > frame_len) {
    throw std::invalid_argument("hop must satisfy 0 < hop <= frame_len");
  }
  if (!(db_floor < 0.0)) {
    throw std::invalid_argument("db_floor must be negative");
  }
}

std::vector<std::complex<double>> fft_half_spectrum(std::span<const double> frame) {
  const std::size_t n = frame.size();
  if (n == 0 || !std::has_single_bit(n)) {
    throw std::invalid_argument("frame length must be a power of two");
  }
  std::vector<std::complex<double>> a(frame.begin(), frame.end());
  fft_inplace(a);
  a.resize(n / 2 + 1);
  return a;
}

Spectrogram stft_magnitude(const AudioClip& clip, const StftConfig& cfg) {
  cfg.validate();
  if (clip.channels != 1) {
    throw std::invalid_argument("stft_magnitude expects a mono clip");
  }
  const std::size_t n = clip.samples.size();
  if (n < cfg.frame_len) {
    throw Error(ErrorCode::ClipTooShort,
                "clip has " + std::to_string(n) + " samples, frame needs " +
                    std::to_string(cfg.frame_len));
  }

  const std::size_t n_frames = (n - cfg.frame_len) / cfg.hop + 1;
  const std::size_t n_bins = cfg.frame_len / 2 + 1;

  // periodic Hann: w[i] = 0.5 - 0.5 cos(2*pi*i/N)
  std::vector<double> window(cfg.frame_len, 1.0);
  if (cfg.window == Window::Hann) {
    for (std::size_t i = 0; i < cfg.frame_len; ++i) {
      window[i] = 0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * static_cast<double>(i) /
                                       static_cast<double>(cfg.frame_len));
    }
  }

  Spectrogram spec;
  spec.sample_rate = clip.sample_rate;
  spec.values = Matrix(n_bins, n_frames);

  std::vector<double> frame(cfg.frame_len);
  for (std::size_t t = 0; t < n_frames; ++t) {
    const double* src = clip.samples.data() + t * cfg.hop;
    for (std::size_t i = 0; i < cfg.frame_len; ++i) frame[i] = src[i] * window[i];

    const auto bins = fft_half_spectrum(frame);
    for (std::size_t k = 0; k < n_bins; ++k) {
      const double db = 20.0 * std::log10(std::abs(bins[k]) + kMagnitudeEpsilon);
      spec.values(k, t) = std::max(db, cfg.db_floor);
    }
  }
  return spec;
}

PixelMatrix quantize_matrix(const Matrix& m) {
  PixelMatrix px(m.rows, m.cols);
  if (m.empty()) return px;

  const auto [lo_it, hi_it] = std::minmax_element(m.data.begin(), m.data.end());
  const double lo = *lo_it;
  const double hi = *hi_it;
  if (hi == lo) return px;  // degenerate range -> all zeros

  const double range = hi - lo;
  for (std::size_t i = 0; i < m.data.size(); ++i) {
    // divide before scaling so exact midpoints stay exact (0.5 * 255 = 127.5)
    px.pixels[i] = to_pixel((m.data[i] - lo) / range * 255.0);
  }
  return px;
}

PixelMatrix quantize(const Spectrogram& spec) { return quantize_matrix(spec.values); }

PixelMatrix resize_bilinear(const PixelMatrix& px, std::size_t target_rows,
                            std::size_t target_cols) {
  if (px.empty()) throw Error(ErrorCode::EmptyMatrix, "cannot resize an empty image");
  if (target_rows == 0 || target_cols == 0) {
    throw std::invalid_argument("target dimensions must be positive");
  }

  const double row_scale =
      target_rows > 1 ? static_cast<double>(px.rows - 1) / static_cast<double>(target_rows - 1)
                      : 0.0;
  const double col_scale =
      target_cols > 1 ? static_cast<double>(px.cols - 1) / static_cast<double>(target_cols - 1)
                      : 0.0;

  PixelMatrix out(target_rows, target_cols);
  for (std::size_t r = 0; r < target_rows; ++r) {
    const double sr = static_cast<double>(r) * row_scale;
    const std::size_t r0 = static_cast<std::size_t>(sr);
    const std::size_t r1 = std::min(r0 + 1, px.rows - 1);
    const double fr = sr - static_cast<double>(r0);

    for (std::size_t c = 0; c < target_cols; ++c) {
      const double sc = static_cast<double>(c) * col_scale;
      const std::size_t c0 = static_cast<std::size_t>(sc);
      const std::size_t c1 = std::min(c0 + 1, px.cols - 1);
      const double fc = sc - static_cast<double>(c0);

      const double top = px(r0, c0) * (1.0 - fc) + px(r0, c1) * fc;
      const double bottom = px(r1, c0) * (1.0 - fc) + px(r1, c1) * fc;
      out(r, c) = to_pixel(top * (1.0 - fr) + bottom * fr);
    }
  }
  return out;
}

std::vector<std::uint8_t> render_pgm(const PixelMatrix& px) {
  const std::string header = "P5\n" + std::to_string(px.cols) + " " +
                             std::to_string(px.rows) + "\n255\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  out.reserve(out.size() + px.pixels.size());
  for (std::size_t r = px.rows; r-- > 0;) {  // highest frequency first
    const std::uint8_t* row = px.pixels.data() + r * px.cols;
    out.insert(out.end(), row, row + px.cols);
  }
  return out;
}

}  // namespace pcgid
