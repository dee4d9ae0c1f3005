#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "edgesteg/canny.hpp"
#include "edgesteg/image.hpp"

namespace edgesteg {

struct DiffReport {
    std::size_t changed_pixels = 0;
    std::size_t changed_channels = 0;
    std::uint8_t max_channel_delta = 0;
    double mse = 0.0;
    double psnr_db = 0.0; // +inf for identical images
};

/// Throws Error{DimensionMismatch}.
DiffReport diff(const RgbImage& a, const RgbImage& b);

/// True iff both images produce the same edge map under params.
bool verify_stability(const RgbImage& original, const RgbImage& carrier,
                      const CannyParams& params);

std::string format_report(const DiffReport& report);
std::string format_report_kv(const DiffReport& report);

} // namespace edgesteg
