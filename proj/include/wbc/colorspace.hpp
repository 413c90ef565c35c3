#pragma once

#include "wbc/raster.hpp"

namespace wbc {

/// Hue in degrees [0, 360), saturation in [0, 1], intensity in [0, 255].
struct HsiPixel {
    double h = 0.0;
    double s = 0.0;
    double i = 0.0;
};

struct HsiImage {
    Plane<double> h, s, i;

    int width() const noexcept { return h.width(); }
    int height() const noexcept { return h.height(); }
    HsiPixel at(int x, int y) const { return {h(x, y), s(x, y), i(x, y)}; }
};

/// Geometric RGB to HSI conversion.
///
/// theta = acos( ((r-g) + (r-b)) / 2 / sqrt((r-g)^2 + (r-b)(g-b)) ), with the
/// acos argument clamped to [-1, 1]; h = theta when b <= g, else 360 - theta.
/// s = 1 - 3 min(r,g,b) / (r+g+b), i = (r+g+b) / 3.
///
/// Achromatic input (r == g == b) has no defined hue: h = 0 and s = 0.
HsiPixel rgb_to_hsi(double r, double g, double b);

HsiImage convert_image(const RgbImage& img);

}  // namespace wbc
