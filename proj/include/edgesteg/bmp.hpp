#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "edgesteg/image.hpp"

namespace edgesteg {

using Bytes = std::vector<std::uint8_t>;

/// Decodes a 24-bit BI_RGB bitmap (BITMAPINFOHEADER, V4 or V5 header).
/// Both bottom-up and top-down row orders are accepted.
/// Throws Error{MalformedFile, UnsupportedFormat, ZeroDimension}.
RgbImage read_bmp(std::span<const std::uint8_t> bytes);

/// Encodes a canonical bottom-up 24-bit BMP with a 40-byte info header.
Bytes write_bmp(const RgbImage& image);

Bytes read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes);

inline RgbImage load_bmp(const std::filesystem::path& path) { return read_bmp(read_file(path)); }
inline void save_bmp(const std::filesystem::path& path, const RgbImage& image) {
    write_file(path, write_bmp(image));
}

} // namespace edgesteg
