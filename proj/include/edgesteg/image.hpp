#pragma once

#include <cassert>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace edgesteg {

struct Rgb {
    std::uint8_t r = 0;
    std::uint8_t g = 0;
    std::uint8_t b = 0;

    friend bool operator==(const Rgb&, const Rgb&) = default;
};

/// Row-major two-dimensional grid. Origin is the top-left pixel, x grows
/// rightward and y grows downward.
template <typename T>
class Plane {
public:
    Plane() = default;
    Plane(std::size_t width, std::size_t height, T fill = T{})
        : width_(width), height_(height), data_(width * height, fill) {}

    std::size_t width() const noexcept { return width_; }
    std::size_t height() const noexcept { return height_; }
    std::size_t size() const noexcept { return data_.size(); }
    bool empty() const noexcept { return data_.empty(); }

    T& at(std::size_t x, std::size_t y) {
        assert(x < width_ && y < height_);
        return data_[y * width_ + x];
    }
    const T& at(std::size_t x, std::size_t y) const {
        assert(x < width_ && y < height_);
        return data_[y * width_ + x];
    }

    T& operator[](std::size_t i) { return data_[i]; }
    const T& operator[](std::size_t i) const { return data_[i]; }

    auto begin() noexcept { return data_.begin(); }
    auto end() noexcept { return data_.end(); }
    auto begin() const noexcept { return data_.begin(); }
    auto end() const noexcept { return data_.end(); }

    const std::vector<T>& data() const noexcept { return data_; }

    friend bool operator==(const Plane&, const Plane&) = default;

private:
    std::size_t width_ = 0;
    std::size_t height_ = 0;
    std::vector<T> data_;
};

/// 24-bit colour image; the medium that carries the payload.
using RgbImage = Plane<Rgb>;

/// 8-bit single-channel image.
using GrayImage = Plane<std::uint8_t>;

/// Binary edge membership: nonzero cells lie on a detected edge.
class EdgeMap {
public:
    EdgeMap() = default;
    EdgeMap(std::size_t width, std::size_t height) : cells_(width, height, 0) {}

    std::size_t width() const noexcept { return cells_.width(); }
    std::size_t height() const noexcept { return cells_.height(); }

    bool at(std::size_t x, std::size_t y) const { return cells_.at(x, y) != 0; }
    void set(std::size_t x, std::size_t y, bool on = true) { cells_.at(x, y) = on ? 1 : 0; }

    /// Number of edge pixels.
    std::size_t count() const noexcept {
        std::size_t n = 0;
        for (auto c : cells_) n += c != 0;
        return n;
    }

    friend bool operator==(const EdgeMap&, const EdgeMap&) = default;

private:
    Plane<std::uint8_t> cells_;
};

} // namespace edgesteg
