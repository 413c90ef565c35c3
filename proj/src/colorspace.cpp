#include "wbc/colorspace.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace wbc {

HsiPixel rgb_to_hsi(double r, double g, double b)
{
    const double sum = r + g + b;
    HsiPixel px;
    px.i = sum / 3.0;
    if (sum <= 0.0 || (r == g && g == b)) {
        return px;
    }
    px.s = std::clamp(1.0 - 3.0 * std::min({r, g, b}) / sum, 0.0, 1.0);

    const double num = 0.5 * ((r - g) + (r - b));
    const double den = std::sqrt((r - g) * (r - g) + (r - b) * (g - b));
    if (den <= 0.0) {
        return px;
    }
    const double theta = std::acos(std::clamp(num / den, -1.0, 1.0)) * 180.0 / std::numbers::pi;
    double hue = (b <= g) ? theta : 360.0 - theta;
    if (hue >= 360.0) {
        hue -= 360.0;
    }
    px.h = hue;
    return px;
}

HsiImage convert_image(const RgbImage& img)
{
    const int w = img.width();
    const int h = img.height();
    HsiImage out{Plane<double>(w, h), Plane<double>(w, h), Plane<double>(w, h)};
#pragma omp parallel for schedule(static)
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            const HsiPixel px = rgb_to_hsi(img.r(x, y), img.g(x, y), img.b(x, y));
            out.h(x, y) = px.h;
            out.s(x, y) = px.s;
            out.i(x, y) = px.i;
        }
    }
    return out;
}

}  // namespace wbc
