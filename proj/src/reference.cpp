#include "wbc/reference.hpp"

#include <algorithm>
#include <stdexcept>

namespace wbc::reference {

GrayImage laplacian(const GrayImage& img, const LaplacianKernel& kernel)
{
    const int w = img.width();
    const int h = img.height();
    GrayImage out(w, h);
    const auto& k = kernel.taps();
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            double acc = 0.0;
            bool first = true;
            for (int dy = -1; dy <= 1; ++dy) {
                for (int dx = -1; dx <= 1; ++dx) {
                    const int sx = std::clamp(x + dx, 0, w - 1);
                    const int sy = std::clamp(y + dy, 0, h - 1);
                    const double term = k[(dy + 1) * 3 + (dx + 1)] * img(sx, sy);
                    acc = first ? term : acc + term;
                    first = false;
                }
            }
            out(x, y) = acc;
        }
    }
    return out;
}

RgbImage sharpen(const RgbImage& img, const LaplacianKernel& kernel)
{
    RgbImage out(img.width(), img.height());
    const GrayImage lr = reference::laplacian(img.r, kernel);
    const GrayImage lg = reference::laplacian(img.g, kernel);
    const GrayImage lb = reference::laplacian(img.b, kernel);
    for (int y = 0; y < img.height(); ++y) {
        for (int x = 0; x < img.width(); ++x) {
            out.set(x, y, std::clamp(img.r(x, y) - lr(x, y), 0.0, 255.0),
                    std::clamp(img.g(x, y) - lg(x, y), 0.0, 255.0),
                    std::clamp(img.b(x, y) - lb(x, y), 0.0, 255.0));
        }
    }
    return out;
}

HsiImage convert_image(const RgbImage& img)
{
    const int w = img.width();
    const int h = img.height();
    HsiImage out{Plane<double>(w, h), Plane<double>(w, h), Plane<double>(w, h)};
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

GrayImage hue_highpass(const HsiImage& hsi, double cutoff, double s_min)
{
    if (!(cutoff > 0.0 && cutoff < 360.0)) {
        throw std::invalid_argument("hue cutoff must lie in (0, 360)");
    }
    GrayImage out(hsi.width(), hsi.height());
    double max_kept = -1.0;
    for (int y = 0; y < hsi.height(); ++y) {
        for (int x = 0; x < hsi.width(); ++x) {
            if (hsi.h(x, y) >= cutoff && hsi.s(x, y) >= s_min) {
                max_kept = std::max(max_kept, hsi.h(x, y));
            }
        }
    }
    if (max_kept < 0.0) {
        return out;
    }
    const double span = max_kept - cutoff;
    for (int y = 0; y < hsi.height(); ++y) {
        for (int x = 0; x < hsi.width(); ++x) {
            if (hsi.h(x, y) >= cutoff && hsi.s(x, y) >= s_min) {
                out(x, y) = span > 0.0 ? 255.0 * (hsi.h(x, y) - cutoff) / span : 255.0;
            }
        }
    }
    return out;
}

BinaryMask to_binary(const GrayImage& img, double t)
{
    BinaryMask out(img.width(), img.height());
    for (int y = 0; y < img.height(); ++y) {
        for (int x = 0; x < img.width(); ++x) {
            out(x, y) = img(x, y) > t ? 1 : 0;
        }
    }
    return out;
}

BinaryMask dilate(const BinaryMask& mask, const StructuringElement& se)
{
    const auto offsets = se.offsets();
    BinaryMask out(mask.width(), mask.height());
    for (int y = 0; y < mask.height(); ++y) {
        for (int x = 0; x < mask.width(); ++x) {
            for (const Point d : offsets) {
                if (mask.contains(x + d.x, y + d.y) && mask(x + d.x, y + d.y)) {
                    out(x, y) = 1;
                    break;
                }
            }
        }
    }
    return out;
}

RgbImage pixelwise_multiply(const RgbImage& img, const BinaryMask& mask)
{
    if (!img.r.same_shape(mask)) {
        throw DimensionMismatch("pixelwise_multiply: shape mismatch");
    }
    RgbImage out(img.width(), img.height());
    for (int y = 0; y < img.height(); ++y) {
        for (int x = 0; x < img.width(); ++x) {
            if (mask(x, y)) {
                out.set(x, y, img.r(x, y), img.g(x, y), img.b(x, y));
            }
        }
    }
    return out;
}

}  // namespace wbc::reference
