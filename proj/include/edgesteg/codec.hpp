#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "edgesteg/canny.hpp"
#include "edgesteg/image.hpp"

namespace edgesteg {

/// Self-describing record stored in bit 0 of the R, G and B channels of the
/// first 27 pixels of row 0. Layout, each field MSB-first:
///   magic:16  version:8  sigma_tenths:8  low:8  high:8  payload_len:32
struct StegoHeader {
    static constexpr std::uint16_t magic_value = 0x5347; // "SG"
    static constexpr std::uint8_t current_version = 1;
    static constexpr std::size_t bit_count = 80;
    static constexpr std::size_t pixel_count = 27;

    std::uint16_t magic = magic_value;
    std::uint8_t version = current_version;
    CannyParams params;
    std::uint32_t payload_len = 0;

    friend bool operator==(const StegoHeader&, const StegoHeader&) = default;
};

using HeaderBits = std::array<std::uint8_t, StegoHeader::bit_count>;

HeaderBits encode_header(const StegoHeader& header);
StegoHeader decode_header(const HeaderBits& bits);

/// Replaces the n low bits of a channel value (1 <= n <= 3).
constexpr std::uint8_t lsb_replace(std::uint8_t value, unsigned n, std::uint8_t bits) noexcept {
    const auto mask = static_cast<std::uint8_t>((1u << n) - 1u);
    return static_cast<std::uint8_t>((value & ~mask) | (bits & mask));
}

/// One entry (0 or 1) per bit, MSB first within each byte.
std::vector<std::uint8_t> pack_bits(std::span<const std::uint8_t> data);

/// Inverse of pack_bits; a trailing partial byte is dropped.
std::vector<std::uint8_t> unpack_bits(std::span<const std::uint8_t> bits);

/// Stores the header in the reserved row. Throws Error{ImageTooNarrow}.
void write_header(RgbImage& image, const StegoHeader& header);

/// Reads the raw header bits without validating them.
StegoHeader peek_header(const RgbImage& image);

/// Reads and validates the header.
/// Throws Error{ImageTooNarrow, BadMagic, UnsupportedVersion, CorruptHeader}.
StegoHeader read_header(const RgbImage& image);

/// Hides payload in the edge pixels of a copy of image.
/// Throws CapacityExceeded, Error{ImageTooSmall, ImageTooNarrow, ParamOutOfRange}.
RgbImage embed(const RgbImage& image, std::span<const std::uint8_t> payload,
               const CannyParams& params);

struct Extracted {
    std::vector<std::uint8_t> payload;
    CannyParams params;
};

/// Recovers the payload and the parameters it was hidden with.
/// Throws Error{ImageTooSmall, ImageTooNarrow, BadMagic, UnsupportedVersion,
/// CorruptHeader, TruncatedPayload}.
Extracted extract(const RgbImage& carrier);

} // namespace edgesteg
