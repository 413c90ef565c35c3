#pragma once

#include <array>

#include "wbc/raster.hpp"

namespace wbc {

/// 3x3 discrete Laplacian. Taps are row-major, centre at index 4.
/// The taps must sum to zero so that constants are annihilated.
class LaplacianKernel {
public:
    explicit LaplacianKernel(const std::array<double, 9>& taps);

    /// [0,1,0; 1,-4,1; 0,1,0]
    static LaplacianKernel four_neighbor();
    /// [1,1,1; 1,-8,1; 1,1,1]
    static LaplacianKernel eight_neighbor();

    double tap(int dx, int dy) const { return taps_[(dy + 1) * 3 + (dx + 1)]; }
    const std::array<double, 9>& taps() const noexcept { return taps_; }

private:
    std::array<double, 9> taps_;
};

/// Convolution with edge replication at the border. Output is unclamped.
GrayImage laplacian(const GrayImage& img, const LaplacianKernel& kernel);

/// Per channel: clamp(c - laplacian(c), 0, 255).
RgbImage sharpen(const RgbImage& img, const LaplacianKernel& kernel = LaplacianKernel::four_neighbor());

}  // namespace wbc
