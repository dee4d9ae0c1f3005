#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "edgesteg/image.hpp"

namespace edgesteg {

struct Coord {
    std::uint32_t x = 0;
    std::uint32_t y = 0;

    friend bool operator==(const Coord&, const Coord&) = default;
};

/// Row 0 holds the header and never carries payload.
inline constexpr std::uint32_t reserved_rows = 1;

/// Payload bits stored per carrier pixel (3 LSBs in each of R, G, B).
inline constexpr std::size_t bits_per_carrier = 9;

/// Edge pixels outside the reserved row, in row-major order.
using CarrierSequence = std::vector<Coord>;

CarrierSequence enumerate_carriers(const EdgeMap& edges);

/// Whole payload bytes that fit in the given number of carrier pixels.
constexpr std::size_t capacity_for_carriers(std::size_t carriers) noexcept {
    return carriers * bits_per_carrier / 8;
}

std::size_t capacity_bytes(const EdgeMap& edges);

} // namespace edgesteg
