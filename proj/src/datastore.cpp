#include "pcgid/datastore.hpp"

#include <array>
#include <cstring>
#include <fstream>
#include <string>

#include "pcgid/error.hpp"

namespace pcgid {

namespace {

constexpr char kMagic[8] = {'P', 'C', 'G', 'S', 'D', 'B', '0', '1'};
constexpr std::uint32_t kVersion = 1;
constexpr std::size_t kMaxLabelBytes = 255;
// guards load_db allocations against absurd declared sizes
constexpr std::uint64_t kMaxPixelsPerRecord = 1ULL << 28;

void put_u16(std::ostream& out, std::uint16_t v) {
  const std::array<char, 2> b = {static_cast<char>(v & 0xFF),
                                 static_cast<char>((v >> 8) & 0xFF)};
  out.write(b.data(), b.size());
}

void put_u32(std::ostream& out, std::uint32_t v) {
  const std::array<char, 4> b = {
      static_cast<char>(v & 0xFF), static_cast<char>((v >> 8) & 0xFF),
      static_cast<char>((v >> 16) & 0xFF), static_cast<char>((v >> 24) & 0xFF)};
  out.write(b.data(), b.size());
}

void read_exact(std::istream& in, char* dst, std::size_t n, const char* what) {
  in.read(dst, static_cast<std::streamsize>(n));
  if (static_cast<std::size_t>(in.gcount()) != n) {
    throw Error(ErrorCode::Truncated, std::string("stream ends inside ") + what);
  }
}

std::uint16_t get_u16(std::istream& in, const char* what) {
  unsigned char b[2];
  read_exact(in, reinterpret_cast<char*>(b), 2, what);
  return static_cast<std::uint16_t>(b[0] | (b[1] << 8));
}

std::uint32_t get_u32(std::istream& in, const char* what) {
  unsigned char b[4];
  read_exact(in, reinterpret_cast<char*>(b), 4, what);
  return static_cast<std::uint32_t>(b[0]) | (static_cast<std::uint32_t>(b[1]) << 8) |
         (static_cast<std::uint32_t>(b[2]) << 16) | (static_cast<std::uint32_t>(b[3]) << 24);
}

}  // namespace

std::size_t save_db(const SpectroDb& db, std::ostream& sink) {
  std::size_t written = 0;

  sink.write(kMagic, sizeof(kMagic));
  put_u32(sink, kVersion);
  put_u32(sink, static_cast<std::uint32_t>(db.records.size()));
  written += 16;

  for (const TrainingRecord& rec : db.records) {
    if (rec.label.empty() || rec.label.size() > kMaxLabelBytes) {
      throw Error(ErrorCode::CorruptRecord,
                  "label must be 1..255 bytes, got " + std::to_string(rec.label.size()));
    }
    if (rec.pixels.empty() || rec.pixels.pixels.size() != rec.pixels.rows * rec.pixels.cols) {
      throw Error(ErrorCode::CorruptRecord, "pixel buffer disagrees with declared shape");
    }

    put_u16(sink, static_cast<std::uint16_t>(rec.label.size()));
    sink.write(rec.label.data(), static_cast<std::streamsize>(rec.label.size()));
    put_u32(sink, static_cast<std::uint32_t>(rec.pixels.rows));
    put_u32(sink, static_cast<std::uint32_t>(rec.pixels.cols));
    sink.write(reinterpret_cast<const char*>(rec.pixels.pixels.data()),
               static_cast<std::streamsize>(rec.pixels.pixels.size()));
    written += 2 + rec.label.size() + 8 + rec.pixels.pixels.size();
  }

  if (!sink) throw Error(ErrorCode::IoFailure, "write failed");
  return written;
}

SpectroDb load_db(std::istream& source) {
  char magic[8];
  source.read(magic, sizeof(magic));
  if (static_cast<std::size_t>(source.gcount()) != sizeof(magic)) {
    throw Error(ErrorCode::Truncated, "stream shorter than magic");
  }
  if (std::memcmp(magic, kMagic, sizeof(kMagic)) != 0) {
    throw Error(ErrorCode::BadMagic, "not a spectrogram database file");
  }

  const std::uint32_t version = get_u32(source, "header");
  if (version != kVersion) {
    throw Error(ErrorCode::UnsupportedVersion,
                "format version " + std::to_string(version) + " not supported");
  }

  const std::uint32_t count = get_u32(source, "header");

  SpectroDb db;
  db.records.reserve(count);
  for (std::uint32_t i = 0; i < count; ++i) {
    const std::uint16_t label_len = get_u16(source, "record label length");
    if (label_len == 0 || label_len > kMaxLabelBytes) {
      throw Error(ErrorCode::CorruptRecord,
                  "record " + std::to_string(i) + " declares label length " +
                      std::to_string(label_len));
    }

    TrainingRecord rec;
    rec.label.resize(label_len);
    read_exact(source, rec.label.data(), label_len, "record label");

    const std::uint32_t rows = get_u32(source, "record shape");
    const std::uint32_t cols = get_u32(source, "record shape");
    if (rows == 0 || cols == 0 ||
        static_cast<std::uint64_t>(rows) * cols > kMaxPixelsPerRecord) {
      throw Error(ErrorCode::CorruptRecord,
                  "record " + std::to_string(i) + " declares shape " +
                      std::to_string(rows) + "x" + std::to_string(cols));
    }

    rec.pixels.rows = rows;
    rec.pixels.cols = cols;
    rec.pixels.pixels.resize(static_cast<std::size_t>(rows) * cols);
    read_exact(source, reinterpret_cast<char*>(rec.pixels.pixels.data()),
               rec.pixels.pixels.size(), "record pixels");

    rec.source_id = "#" + std::to_string(i);
    db.records.push_back(std::move(rec));
  }
  return db;
}

std::size_t save_db_file(const SpectroDb& db, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::IoFailure, "cannot open " + path.string() + " for writing");
  const std::size_t n = save_db(db, out);
  out.flush();
  if (!out) throw Error(ErrorCode::IoFailure, "write failed: " + path.string());
  return n;
}

SpectroDb load_db_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoFailure, "cannot open " + path.string());
  return load_db(in);
}

}  // namespace pcgid
