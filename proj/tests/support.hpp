#pragma once

// Test-only helpers: random generators and brute-force reference
// implementations that share no code with the library's fast paths.

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "edgesteg/canny.hpp"
#include "edgesteg/image.hpp"

namespace testsupport {

using edgesteg::Direction;
using edgesteg::EdgeMap;
using edgesteg::GrayImage;
using edgesteg::Plane;
using edgesteg::Rgb;
using edgesteg::RgbImage;

inline RgbImage random_image(std::mt19937& rng, std::size_t w, std::size_t h) {
    std::uniform_int_distribution<int> byte(0, 255);
    RgbImage img(w, h);
    for (auto& p : img) {
        p = Rgb{static_cast<std::uint8_t>(byte(rng)), static_cast<std::uint8_t>(byte(rng)),
                static_cast<std::uint8_t>(byte(rng))};
    }
    return img;
}

// Smooth random blobs: random noise is almost all edges, so mix in a few
// structured images that look more like photographs.
inline RgbImage blob_image(std::mt19937& rng, std::size_t w, std::size_t h) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    RgbImage img(w, h);
    const double cx = u(rng) * w, cy = u(rng) * h, r = 3.0 + u(rng) * (w / 2.0);
    const Rgb inside{static_cast<std::uint8_t>(u(rng) * 255), static_cast<std::uint8_t>(u(rng) * 255),
                     static_cast<std::uint8_t>(u(rng) * 255)};
    for (std::size_t y = 0; y < h; ++y) {
        for (std::size_t x = 0; x < w; ++x) {
            const double d = std::hypot(x - cx, y - cy);
            const auto shade = static_cast<std::uint8_t>(40 + (x * 3 + y * 2) % 60);
            img.at(x, y) = d < r ? inside : Rgb{shade, shade, static_cast<std::uint8_t>(shade / 2)};
        }
    }
    return img;
}

inline GrayImage random_gray(std::mt19937& rng, std::size_t w, std::size_t h) {
    std::uniform_int_distribution<int> byte(0, 255);
    GrayImage g(w, h);
    for (auto& v : g) v = static_cast<std::uint8_t>(byte(rng));
    return g;
}

inline int clampi(int v, int lo, int hi) { return v < lo ? lo : (v > hi ? hi : v); }

// Direct 2-D Gaussian convolution with a freshly built 2-D kernel.
inline GrayImage smooth_2d_oracle(const GrayImage& g, double sigma) {
    const int r = static_cast<int>(std::ceil(3.0 * sigma));
    const int w = static_cast<int>(g.width()), h = static_cast<int>(g.height());
    std::vector<double> k2((2 * r + 1) * (2 * r + 1));
    double total = 0.0;
    for (int j = -r; j <= r; ++j)
        for (int i = -r; i <= r; ++i)
            total += k2[(j + r) * (2 * r + 1) + (i + r)] = std::exp(-(i * i + j * j) / (2 * sigma * sigma));
    GrayImage out(g.width(), g.height());
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            double acc = 0.0;
            for (int j = -r; j <= r; ++j)
                for (int i = -r; i <= r; ++i)
                    acc += k2[(j + r) * (2 * r + 1) + (i + r)] *
                           g.at(clampi(x + i, 0, w - 1), clampi(y + j, 0, h - 1));
            out.at(x, y) = static_cast<std::uint8_t>(clampi(static_cast<int>(std::floor(acc / total + 0.5)), 0, 255));
        }
    }
    return out;
}

struct SobelPair {
    int gx;
    int gy;
};

// Plain 3x3 correlation; gy is positive when the image brightens upward.
inline SobelPair sobel_oracle(const GrayImage& g, int x, int y) {
    static constexpr int kx[3][3] = {{-1, 0, 1}, {-2, 0, 2}, {-1, 0, 1}};
    static constexpr int ky[3][3] = {{1, 2, 1}, {0, 0, 0}, {-1, -2, -1}};
    const int w = static_cast<int>(g.width()), h = static_cast<int>(g.height());
    SobelPair s{0, 0};
    for (int j = 0; j < 3; ++j) {
        for (int i = 0; i < 3; ++i) {
            const int v = g.at(clampi(x + i - 1, 0, w - 1), clampi(y + j - 1, 0, h - 1));
            s.gx += kx[j][i] * v;
            s.gy += ky[j][i] * v;
        }
    }
    return s;
}

inline Direction direction_oracle(int gx, int gy) {
    if (gx == 0 && gy == 0) return Direction::deg0;
    double deg = std::atan2(static_cast<double>(gy), static_cast<double>(gx)) * 180.0 / M_PI;
    if (deg < 0) deg += 180.0;
    if (deg < 22.5 || deg >= 157.5) return Direction::deg0;
    if (deg < 67.5) return Direction::deg45;
    if (deg < 112.5) return Direction::deg90;
    return Direction::deg135;
}

// Exhaustive neighbour check; offsets derived from the bin angle itself.
inline Plane<std::uint8_t> nms_oracle(const Plane<std::uint8_t>& mag, const Plane<Direction>& dir) {
    const int w = static_cast<int>(mag.width()), h = static_cast<int>(mag.height());
    Plane<std::uint8_t> out(mag.width(), mag.height());
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            const double angle = 45.0 * static_cast<int>(dir.at(x, y)) * M_PI / 180.0;
            const int dx = static_cast<int>(std::lround(std::cos(angle)));
            const int dy = -static_cast<int>(std::lround(std::sin(angle))); // screen y points down
            int best_neighbour = 0;
            for (int s : {-1, 1}) {
                const int nx = x + s * dx, ny = y + s * dy;
                if (nx >= 0 && ny >= 0 && nx < w && ny < h) best_neighbour = std::max<int>(best_neighbour, mag.at(nx, ny));
            }
            out.at(x, y) = mag.at(x, y) >= best_neighbour ? mag.at(x, y) : 0;
        }
    }
    return out;
}

// Reachability by repeated relaxation until nothing changes.
inline EdgeMap hysteresis_oracle(const Plane<std::uint8_t>& m, int low, int high) {
    const int w = static_cast<int>(m.width()), h = static_cast<int>(m.height());
    EdgeMap e(m.width(), m.height());
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x)
            if (m.at(x, y) > 0 && m.at(x, y) >= high) e.set(x, y);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int y = 0; y < h; ++y) {
            for (int x = 0; x < w; ++x) {
                if (e.at(x, y) || m.at(x, y) == 0 || m.at(x, y) < low) continue;
                for (int dy = -1; dy <= 1 && !e.at(x, y); ++dy)
                    for (int dx = -1; dx <= 1; ++dx) {
                        const int nx = x + dx, ny = y + dy;
                        if (nx >= 0 && ny >= 0 && nx < w && ny < h && e.at(nx, ny)) {
                            e.set(x, y);
                            changed = true;
                            break;
                        }
                    }
            }
        }
    }
    return e;
}

inline RgbImage half_plane(std::size_t w, std::size_t h, std::size_t step) {
    RgbImage img(w, h);
    for (std::size_t y = 0; y < h; ++y)
        for (std::size_t x = step; x < w; ++x) img.at(x, y) = Rgb{255, 255, 255};
    return img;
}

// Flips random bits among bits 0..2 of random channels.
inline RgbImage flip_low_bits(RgbImage img, std::mt19937& rng, int flips) {
    std::uniform_int_distribution<std::size_t> pixel(0, img.size() - 1);
    std::uniform_int_distribution<int> chan(0, 2), bit(0, 2);
    for (int i = 0; i < flips; ++i) {
        Rgb& p = img[pixel(rng)];
        const int which = chan(rng);
        std::uint8_t& c = which == 0 ? p.r : (which == 1 ? p.g : p.b);
        c ^= static_cast<std::uint8_t>(1u << bit(rng));
    }
    return img;
}

inline const std::vector<edgesteg::CannyParams>& acceptance_params() {
    static const std::vector<edgesteg::CannyParams> sets = {
        {10, 20, 30}, {15, 5, 40}, {20, 20, 30}, {30, 0, 255}};
    return sets;
}

} // namespace testsupport
