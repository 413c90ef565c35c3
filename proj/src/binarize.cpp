#include "wbc/binarize.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wbc {

void ThresholdParams::validate() const
{
    if (!(t0 > 0.0)) {
        throw std::invalid_argument("threshold t0 must be > 0");
    }
    if (max_iters < 1) {
        throw std::invalid_argument("threshold max_iters must be >= 1");
    }
}

GrayImage hue_highpass(const HsiImage& hsi, double cutoff, double s_min)
{
    if (!(cutoff > 0.0 && cutoff < 360.0)) {
        throw std::invalid_argument("hue cutoff must lie in (0, 360)");
    }
    const int w = hsi.width();
    const int h = hsi.height();
    GrayImage out(w, h);
    double max_kept = -1.0;
#pragma omp parallel for schedule(static) reduction(max : max_kept)
    for (int y = 0; y < h; ++y) {
        const auto hue = hsi.h.row(y);
        const auto sat = hsi.s.row(y);
        for (int x = 0; x < w; ++x) {
            if (hue[x] >= cutoff && sat[x] >= s_min) {
                max_kept = std::max(max_kept, hue[x]);
            }
        }
    }
    if (max_kept < 0.0) {
        return out;
    }
    const double span = max_kept - cutoff;
#pragma omp parallel for schedule(static)
    for (int y = 0; y < h; ++y) {
        const auto hue = hsi.h.row(y);
        const auto sat = hsi.s.row(y);
        auto dst = out.row(y);
        for (int x = 0; x < w; ++x) {
            if (hue[x] >= cutoff && sat[x] >= s_min) {
                dst[x] = span > 0.0 ? 255.0 * (hue[x] - cutoff) / span : 255.0;
            }
        }
    }
    return out;
}

double isodata_threshold(const GrayImage& img, const ThresholdParams& params)
{
    params.validate();
    const auto values = img.values();
    if (values.empty()) {
        throw std::invalid_argument("isodata_threshold: empty image");
    }
    double sum = 0.0;
    for (double v : values) {
        sum += v;
    }
    double t = sum / static_cast<double>(values.size());
    for (int iter = 0; iter < params.max_iters; ++iter) {
        double upper_sum = 0.0;
        double lower_sum = 0.0;
        std::size_t upper_n = 0;
        std::size_t lower_n = 0;
        for (double v : values) {
            if (v > t) {
                upper_sum += v;
                ++upper_n;
            } else {
                lower_sum += v;
                ++lower_n;
            }
        }
        const double mu_upper = upper_n ? upper_sum / static_cast<double>(upper_n) : t;
        const double mu_lower = lower_n ? lower_sum / static_cast<double>(lower_n) : t;
        const double next = 0.5 * (mu_upper + mu_lower);
        const bool converged = std::abs(next - t) < params.t0;
        t = next;
        if (converged) {
            break;
        }
    }
    return t;
}

BinaryMask to_binary(const GrayImage& img, double t)
{
    BinaryMask out(img.width(), img.height());
    const auto src = img.values();
    auto dst = out.values();
    const auto n = static_cast<std::ptrdiff_t>(src.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        dst[i] = src[i] > t ? 1 : 0;
    }
    return out;
}

}  // namespace wbc
