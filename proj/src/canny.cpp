#include "edgesteg/canny.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>

#include "edgesteg/error.hpp"

namespace edgesteg {
namespace {

constexpr std::uint8_t lsb_mask = 0xF8;

std::size_t clamp_index(std::ptrdiff_t i, std::size_t n) {
    if (i < 0) return 0;
    if (static_cast<std::size_t>(i) >= n) return n - 1;
    return static_cast<std::size_t>(i);
}

std::uint8_t round_to_u8(double v) {
    const double r = std::floor(v + 0.5);
    return static_cast<std::uint8_t>(std::clamp(r, 0.0, 255.0));
}

// round(sqrt(n)) computed exactly on integers.
std::uint32_t rounded_sqrt(std::uint64_t n) {
    auto k = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (k * k > n) --k;
    while ((k + 1) * (k + 1) <= n) ++k;
    return static_cast<std::uint32_t>(n > k * k + k ? k + 1 : k);
}

void require_min_size(std::size_t width, std::size_t height) {
    if (width < 3 || height < 3) {
        throw Error(ErrorKind::ImageTooSmall, "edge detection needs at least 3x3 pixels, got " +
                                                  std::to_string(width) + "x" +
                                                  std::to_string(height));
    }
}

} // namespace

void CannyParams::validate() const {
    if (sigma_tenths < min_sigma_tenths || sigma_tenths > max_sigma_tenths) {
        throw Error(ErrorKind::ParamOutOfRange,
                    "sigma must be within 1.0..3.0 (got tenths " + std::to_string(sigma_tenths) + ")");
    }
    if (low_threshold > high_threshold) {
        throw Error(ErrorKind::ParamOutOfRange,
                    "low threshold " + std::to_string(low_threshold) + " exceeds high threshold " +
                        std::to_string(high_threshold));
    }
}

GrayImage to_masked_gray(const RgbImage& image) {
    GrayImage gray(image.width(), image.height());
    for (std::size_t i = 0; i < image.size(); ++i) {
        const Rgb& p = image[i];
        // Weights scaled by 1000; +500 gives round-half-up exactly.
        const unsigned weighted = 299u * (p.r & lsb_mask) + 587u * (p.g & lsb_mask) +
                                  114u * (p.b & lsb_mask) + 500u;
        gray[i] = static_cast<std::uint8_t>(std::min(weighted / 1000u, 255u));
    }
    return gray;
}

std::vector<double> gaussian_kernel(double sigma) {
    if (!(sigma >= 1.0 && sigma <= 3.0)) {
        throw Error(ErrorKind::ParamOutOfRange,
                    "Gaussian sigma must be within 1.0..3.0, got " + std::to_string(sigma));
    }
    const auto radius = static_cast<std::ptrdiff_t>(std::ceil(3.0 * sigma));
    std::vector<double> taps(static_cast<std::size_t>(2 * radius + 1));
    const double denom = 2.0 * sigma * sigma;
    double sum = 0.0;
    for (std::ptrdiff_t i = -radius; i <= radius; ++i) {
        const double v = std::exp(-static_cast<double>(i * i) / denom);
        taps[static_cast<std::size_t>(i + radius)] = v;
        sum += v;
    }
    for (double& t : taps) t /= sum;
    return taps;
}

GrayImage smooth(const GrayImage& gray, const CannyParams& params) {
    params.validate();
    const std::vector<double> kernel = gaussian_kernel(params.sigma());
    const auto radius = static_cast<std::ptrdiff_t>(kernel.size() / 2);
    const std::size_t w = gray.width();
    const std::size_t h = gray.height();

    Plane<double> horizontal(w, h);
    for (std::size_t y = 0; y < h; ++y) {
        for (std::size_t x = 0; x < w; ++x) {
            double acc = 0.0;
            for (std::ptrdiff_t k = -radius; k <= radius; ++k) {
                const std::size_t sx = clamp_index(static_cast<std::ptrdiff_t>(x) + k, w);
                acc += kernel[static_cast<std::size_t>(k + radius)] * gray.at(sx, y);
            }
            horizontal.at(x, y) = acc;
        }
    }

    GrayImage out(w, h);
    for (std::size_t y = 0; y < h; ++y) {
        for (std::size_t x = 0; x < w; ++x) {
            double acc = 0.0;
            for (std::ptrdiff_t k = -radius; k <= radius; ++k) {
                const std::size_t sy = clamp_index(static_cast<std::ptrdiff_t>(y) + k, h);
                acc += kernel[static_cast<std::size_t>(k + radius)] * horizontal.at(x, sy);
            }
            out.at(x, y) = round_to_u8(acc);
        }
    }
    return out;
}

Direction quantize_direction(int gx, int gy) noexcept {
    const std::int64_t ax = gx < 0 ? -static_cast<std::int64_t>(gx) : gx;
    const std::int64_t ay = gy < 0 ? -static_cast<std::int64_t>(gy) : gy;
    // tan(22.5 deg) = sqrt(2) - 1 and tan(67.5 deg) = sqrt(2) + 1; squaring
    // both sides keeps the comparison in exact integer arithmetic.
    if ((ax + ay) * (ax + ay) < 2 * ax * ax) return Direction::deg0;
    if (ay > ax && (ay - ax) * (ay - ax) > 2 * ax * ax) return Direction::deg90;
    return ((gx > 0) == (gy > 0)) ? Direction::deg45 : Direction::deg135;
}

GradientField gradients(const GrayImage& smoothed) {
    const std::size_t w = smoothed.width();
    const std::size_t h = smoothed.height();
    require_min_size(w, h);

    GradientField field;
    field.width = w;
    field.height = h;
    field.gx.resize(w * h);
    field.gy.resize(w * h);
    field.magnitude = Plane<std::uint8_t>(w, h);
    field.direction = Plane<Direction>(w, h, Direction::deg0);

    auto px = [&](std::size_t x, std::ptrdiff_t dx, std::size_t y, std::ptrdiff_t dy) -> int {
        return smoothed.at(clamp_index(static_cast<std::ptrdiff_t>(x) + dx, w),
                           clamp_index(static_cast<std::ptrdiff_t>(y) + dy, h));
    };

    std::vector<std::uint32_t> raw(w * h);
    std::uint32_t raw_max = 0;
    for (std::size_t y = 0; y < h; ++y) {
        for (std::size_t x = 0; x < w; ++x) {
            const int gx = (px(x, 1, y, -1) + 2 * px(x, 1, y, 0) + px(x, 1, y, 1)) -
                           (px(x, -1, y, -1) + 2 * px(x, -1, y, 0) + px(x, -1, y, 1));
            const int gy = (px(x, -1, y, -1) + 2 * px(x, 0, y, -1) + px(x, 1, y, -1)) -
                           (px(x, -1, y, 1) + 2 * px(x, 0, y, 1) + px(x, 1, y, 1));
            const std::size_t i = y * w + x;
            field.gx[i] = gx;
            field.gy[i] = gy;
            field.direction[i] = quantize_direction(gx, gy);
            const auto sq = static_cast<std::uint64_t>(static_cast<std::int64_t>(gx) * gx +
                                                       static_cast<std::int64_t>(gy) * gy);
            raw[i] = rounded_sqrt(sq);
            raw_max = std::max(raw_max, raw[i]);
        }
    }

    if (raw_max > 0) {
        const std::uint64_t denom = 2ull * raw_max;
        for (std::size_t i = 0; i < raw.size(); ++i) {
            field.magnitude[i] =
                static_cast<std::uint8_t>((510ull * raw[i] + raw_max) / denom);
        }
    }
    return field;
}

Plane<std::uint8_t> non_max_suppression(const GradientField& field) {
    const std::size_t w = field.width;
    const std::size_t h = field.height;
    const auto& mag = field.magnitude;
    Plane<std::uint8_t> out(w, h);

    auto neighbour = [&](std::size_t x, std::size_t y, int dx, int dy) -> std::uint8_t {
        const auto nx = static_cast<std::ptrdiff_t>(x) + dx;
        const auto ny = static_cast<std::ptrdiff_t>(y) + dy;
        if (nx < 0 || ny < 0 || nx >= static_cast<std::ptrdiff_t>(w) ||
            ny >= static_cast<std::ptrdiff_t>(h)) {
            return 0;
        }
        return mag.at(static_cast<std::size_t>(nx), static_cast<std::size_t>(ny));
    };

    for (std::size_t y = 0; y < h; ++y) {
        for (std::size_t x = 0; x < w; ++x) {
            const std::uint8_t m = mag.at(x, y);
            if (m == 0) continue;
            // Screen coordinates: "up" is dy = -1.
            int dx = 1, dy = 0;
            switch (field.direction.at(x, y)) {
            case Direction::deg0: dx = 1; dy = 0; break;
            case Direction::deg45: dx = 1; dy = -1; break;
            case Direction::deg90: dx = 0; dy = 1; break;
            case Direction::deg135: dx = -1; dy = -1; break;
            }
            if (m >= neighbour(x, y, dx, dy) && m >= neighbour(x, y, -dx, -dy)) out.at(x, y) = m;
        }
    }
    return out;
}

EdgeMap hysteresis(const Plane<std::uint8_t>& thinned, const CannyParams& params) {
    const std::size_t w = thinned.width();
    const std::size_t h = thinned.height();
    EdgeMap edges(w, h);

    auto candidate = [&](std::size_t x, std::size_t y) {
        const std::uint8_t m = thinned.at(x, y);
        return m != 0 && m >= params.low_threshold;
    };

    std::vector<std::size_t> stack;
    for (std::size_t y = 0; y < h; ++y) {
        for (std::size_t x = 0; x < w; ++x) {
            const std::uint8_t m = thinned.at(x, y);
            if (m == 0 || m < params.high_threshold || edges.at(x, y)) continue;
            edges.set(x, y);
            stack.push_back(y * w + x);
            while (!stack.empty()) {
                const std::size_t cx = stack.back() % w;
                const std::size_t cy = stack.back() / w;
                stack.pop_back();
                for (int dy = -1; dy <= 1; ++dy) {
                    for (int dx = -1; dx <= 1; ++dx) {
                        const auto nx = static_cast<std::ptrdiff_t>(cx) + dx;
                        const auto ny = static_cast<std::ptrdiff_t>(cy) + dy;
                        if (nx < 0 || ny < 0 || nx >= static_cast<std::ptrdiff_t>(w) ||
                            ny >= static_cast<std::ptrdiff_t>(h)) {
                            continue;
                        }
                        const auto ux = static_cast<std::size_t>(nx);
                        const auto uy = static_cast<std::size_t>(ny);
                        if (edges.at(ux, uy) || !candidate(ux, uy)) continue;
                        edges.set(ux, uy);
                        stack.push_back(uy * w + ux);
                    }
                }
            }
        }
    }
    return edges;
}

EdgeMap detect_edges(const RgbImage& image, const CannyParams& params) {
    params.validate();
    require_min_size(image.width(), image.height());
    const GrayImage smoothed = smooth(to_masked_gray(image), params);
    return hysteresis(non_max_suppression(gradients(smoothed)), params);
}

} // namespace edgesteg
