#pragma once

#include <cstdint>
#include <vector>

#include "edgesteg/image.hpp"

namespace edgesteg {

/// The three secrets shared by sender and receiver. Sigma is kept in tenths
/// so that it round-trips losslessly through the carrier header.
struct CannyParams {
    std::uint8_t sigma_tenths = 15;
    std::uint8_t low_threshold = 5;
    std::uint8_t high_threshold = 40;

    static constexpr int min_sigma_tenths = 10;
    static constexpr int max_sigma_tenths = 30;

    double sigma() const noexcept { return sigma_tenths / 10.0; }

    bool valid() const noexcept {
        return sigma_tenths >= min_sigma_tenths && sigma_tenths <= max_sigma_tenths &&
               low_threshold <= high_threshold;
    }

    /// Throws Error{ParamOutOfRange} unless valid().
    void validate() const;

    friend bool operator==(const CannyParams&, const CannyParams&) = default;
};

/// Quantised gradient orientation, measured counter-clockwise from +x with
/// +y pointing up the screen.
enum class Direction : std::uint8_t { deg0, deg45, deg90, deg135 };

/// Sobel responses and the derived scaled magnitude / direction per pixel.
struct GradientField {
    std::size_t width = 0;
    std::size_t height = 0;
    std::vector<int> gx;
    std::vector<int> gy;
    Plane<std::uint8_t> magnitude;
    Plane<Direction> direction;
};

/// Zeroes bits 0..2 of every channel, then applies Rec.601 luma weights with
/// round-half-up. The result ignores anything stored in the three LSBs.
GrayImage to_masked_gray(const RgbImage& image);

/// Normalised Gaussian taps for i in [-r, r], r = ceil(3 sigma).
/// Throws Error{ParamOutOfRange} for sigma outside [1.0, 3.0].
std::vector<double> gaussian_kernel(double sigma);

/// Separable Gaussian blur, horizontal pass then vertical, clamp-to-edge.
GrayImage smooth(const GrayImage& gray, const CannyParams& params);

/// 3x3 Sobel with clamp-to-edge borders. gx is right-minus-left, gy is
/// up-minus-down. Magnitudes are rescaled to 0..255 by the image maximum.
/// Throws Error{ImageTooSmall} when either side is below 3.
GradientField gradients(const GrayImage& smoothed);

/// Classifies an integer gradient vector into one of the four bins.
Direction quantize_direction(int gx, int gy) noexcept;

/// Keeps a magnitude iff it is >= both neighbours along its direction.
Plane<std::uint8_t> non_max_suppression(const GradientField& field);

/// Double threshold plus 8-connected edge linking. Zero magnitudes are
/// never edges.
EdgeMap hysteresis(const Plane<std::uint8_t>& thinned, const CannyParams& params);

/// Full pipeline on the LSB-masked luma of the image.
/// Throws Error{ImageTooSmall, ParamOutOfRange}.
EdgeMap detect_edges(const RgbImage& image, const CannyParams& params);

} // namespace edgesteg
