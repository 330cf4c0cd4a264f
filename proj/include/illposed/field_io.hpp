#pragma once

#include <filesystem>

#include "illposed/field.hpp"

namespace illposed {

// Binary layout: int64 dim, int64 points_per_axis, float64 half width, then
// the row-major float64 samples. Everything little-endian.
void write_field(const Field& u, const std::filesystem::path& path);
Field read_field(const std::filesystem::path& path);

/// "i,value" or "i,j,value" rows with a header line.
void write_field_csv(const Field& u, const std::filesystem::path& path);

}  // namespace illposed
