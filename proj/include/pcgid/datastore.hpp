#pragma once

#include <cstdint>
#include <filesystem>
#include <istream>
#include <ostream>
#include <vector>

#include "pcgid/matcher.hpp"

namespace pcgid {

/// Ordered training database. Record order is preserved bit-exactly across
/// save/load because matcher tie-breaking depends on it.
struct SpectroDb {
  std::vector<TrainingRecord> records;
  std::uint32_t format_version = 1;
};

/// Serialize to the v1 on-disk format (all integers little-endian):
///
///   magic   8 bytes  "PCGSDB01"
///   version u32      1
///   count   u32      record count
///   record  label_len:u16, label bytes (UTF-8, 1..255),
///           rows:u32, cols:u32, pixels rows*cols bytes row-major
///
/// Returns the number of bytes written. Throws IoFailure on stream failure
/// and CorruptRecord for records that cannot be represented.
std::size_t save_db(const SpectroDb& db, std::ostream& sink);

/// Parse the v1 format. Reads exactly the declared payload and leaves any
/// trailing bytes unconsumed. Throws BadMagic, UnsupportedVersion, Truncated
/// or CorruptRecord. Loaded records get synthesized source ids "#0", "#1", ...
SpectroDb load_db(std::istream& source);

std::size_t save_db_file(const SpectroDb& db, const std::filesystem::path& path);
SpectroDb load_db_file(const std::filesystem::path& path);

}  // namespace pcgid
