#pragma once

#include <string>

#include "tpwave/field.hpp"

namespace tpwave {

inline constexpr std::uint32_t kFieldFormatVersion = 1;

/// TPWF: "TPWF", u32 version, u32 n_t, u32 n_x, f64 box_len, f64 period,
/// then n_t n_x^3 f64 samples in (t, x1, x2, x3) row-major order, all
/// little-endian. Written to a temporary file and renamed into place.
void write_field(const std::string& path, const Field& f);
Field read_field(const std::string& path);

std::string encode_field(const Field& f);
Field decode_field(const std::string& bytes);

/// Writes bytes to path via a temporary sibling and rename.
void write_file_atomic(const std::string& path, const std::string& bytes);

}  // namespace tpwave
