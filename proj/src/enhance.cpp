#include "wbc/enhance.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace wbc {

LaplacianKernel::LaplacianKernel(const std::array<double, 9>& taps) : taps_(taps)
{
    double sum = 0.0;
    double scale = 0.0;
    for (double t : taps_) {
        if (!std::isfinite(t)) {
            throw std::invalid_argument("Laplacian taps must be finite");
        }
        sum += t;
        scale += std::abs(t);
    }
    if (std::abs(sum) > 1e-12 * std::max(1.0, scale)) {
        throw std::invalid_argument("Laplacian taps must sum to zero");
    }
}

LaplacianKernel LaplacianKernel::four_neighbor()
{
    return LaplacianKernel({0, 1, 0, 1, -4, 1, 0, 1, 0});
}

LaplacianKernel LaplacianKernel::eight_neighbor()
{
    return LaplacianKernel({1, 1, 1, 1, -8, 1, 1, 1, 1});
}

GrayImage laplacian(const GrayImage& img, const LaplacianKernel& kernel)
{
    if (img.empty()) {
        throw std::invalid_argument("laplacian: empty image");
    }
    const int w = img.width();
    const int h = img.height();
    GrayImage out(w, h);
    const auto& k = kernel.taps();
#pragma omp parallel for schedule(static)
    for (int y = 0; y < h; ++y) {
        const auto above = img.row(std::max(y - 1, 0));
        const auto here = img.row(y);
        const auto below = img.row(std::min(y + 1, h - 1));
        auto dst = out.row(y);
        for (int x = 0; x < w; ++x) {
            const int xl = std::max(x - 1, 0);
            const int xr = std::min(x + 1, w - 1);
            // Fixed summation order; the serial reference uses the same one.
            double acc = k[0] * above[xl];
            acc += k[1] * above[x];
            acc += k[2] * above[xr];
            acc += k[3] * here[xl];
            acc += k[4] * here[x];
            acc += k[5] * here[xr];
            acc += k[6] * below[xl];
            acc += k[7] * below[x];
            acc += k[8] * below[xr];
            dst[x] = acc;
        }
    }
    return out;
}

namespace {

Plane<double> sharpen_channel(const Plane<double>& channel, const LaplacianKernel& kernel)
{
    Plane<double> out = laplacian(channel, kernel);
    auto dst = out.values();
    const auto src = channel.values();
    const auto n = static_cast<std::ptrdiff_t>(dst.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        dst[i] = std::clamp(src[i] - dst[i], 0.0, 255.0);
    }
    return out;
}

}  // namespace

RgbImage sharpen(const RgbImage& img, const LaplacianKernel& kernel)
{
    RgbImage out;
    out.r = sharpen_channel(img.r, kernel);
    out.g = sharpen_channel(img.g, kernel);
    out.b = sharpen_channel(img.b, kernel);
    return out;
}

}  // namespace wbc
