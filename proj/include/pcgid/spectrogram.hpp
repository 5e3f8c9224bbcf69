#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "pcgid/audio_io.hpp"
#include "pcgid/matrix.hpp"

namespace pcgid {

enum class Window { Hann, Rectangular };

struct StftConfig {
  std::size_t frame_len = 256;  // power of two
  std::size_t hop = 128;        // 0 < hop <= frame_len
  Window window = Window::Hann;
  double db_floor = -100.0;     // dB, must be negative

  /// Throws std::invalid_argument when a field is out of range.
  void validate() const;
};

/// dB magnitude matrix: rows = frame_len/2 + 1 frequency bins (row 0 = DC),
/// cols = analysis frames.
struct Spectrogram {
  Matrix values;
  std::uint32_t sample_rate = 0;
};

/// Forward DFT of a power-of-two-length real frame, bins 0..n/2.
/// Unnormalized convention: X[k] = sum_n x[n] e^{-2*pi*i*k*n/N}.
std::vector<std::complex<double>> fft_half_spectrum(std::span<const double> frame);

/// Short-time Fourier magnitude in dB. Frame t starts at t*hop; the trailing
/// partial frame is discarded. Each kept bin stores
/// 20*log10(|X| + 1e-10) clamped below at cfg.db_floor.
///
/// Requires a mono clip with at least frame_len samples (ClipTooShort).
Spectrogram stft_magnitude(const AudioClip& clip, const StftConfig& cfg);

/// Linear map of [min, max] onto [0, 255] with round-half-up.
/// A constant input maps to all zeros.
PixelMatrix quantize(const Spectrogram& spec);

/// Same full-range quantization for an arbitrary real matrix (used when
/// rendering approximation images).
PixelMatrix quantize_matrix(const Matrix& m);

/// Bilinear interpolation on a corner-aligned grid:
/// src = dst_index * (src_len - 1) / (dst_len - 1), and 0 when dst_len == 1.
/// Results are rounded half-up.
PixelMatrix resize_bilinear(const PixelMatrix& px, std::size_t target_rows,
                            std::size_t target_cols);

/// Binary PGM (P5, maxval 255). Rows are emitted highest-frequency first so
/// low frequencies sit at the image bottom.
std::vector<std::uint8_t> render_pgm(const PixelMatrix& px);

}  // namespace pcgid
