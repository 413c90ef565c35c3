#include "wbc/raster.hpp"

#include <algorithm>
#include <string>

namespace wbc {

namespace {

void require_same_shape(int w1, int h1, int w2, int h2, const char* what)
{
    if (w1 != w2 || h1 != h2) {
        throw DimensionMismatch(std::string(what) + ": " + std::to_string(w1) + "x" + std::to_string(h1) +
                                " vs " + std::to_string(w2) + "x" + std::to_string(h2));
    }
}

void finish_region(Region& region)
{
    if (region.pixels.empty()) {
        return;
    }
    BBox box{region.pixels.front().x, region.pixels.front().y, region.pixels.front().x, region.pixels.front().y};
    double sx = 0.0;
    double sy = 0.0;
    for (const Point p : region.pixels) {
        box.min_x = std::min(box.min_x, p.x);
        box.min_y = std::min(box.min_y, p.y);
        box.max_x = std::max(box.max_x, p.x);
        box.max_y = std::max(box.max_y, p.y);
        sx += p.x;
        sy += p.y;
    }
    const auto n = static_cast<double>(region.pixels.size());
    region.bbox = box;
    region.centroid_x = sx / n;
    region.centroid_y = sy / n;
}

}  // namespace

RgbImage::RgbImage(int width, int height, double red, double green, double blue)
    : r(width, height, red), g(width, height, green), b(width, height, blue)
{
}

void RgbImage::set(int x, int y, double red, double green, double blue)
{
    r(x, y) = red;
    g(x, y) = green;
    b(x, y) = blue;
}

void RgbImage::validate() const
{
    if (!r.same_shape(g) || !r.same_shape(b)) {
        throw std::invalid_argument("RGB planes differ in shape");
    }
    for (const auto* plane : {&r, &g, &b}) {
        for (double v : plane->values()) {
            if (!(v >= 0.0 && v <= 255.0)) {
                throw std::invalid_argument("channel value outside [0, 255]");
            }
        }
    }
}

RgbImage pixelwise_multiply(const RgbImage& img, const BinaryMask& mask)
{
    require_same_shape(img.width(), img.height(), mask.width(), mask.height(), "pixelwise_multiply");
    RgbImage out(img.width(), img.height());
    const int h = img.height();
#pragma omp parallel for schedule(static)
    for (int y = 0; y < h; ++y) {
        const auto m = mask.row(y);
        for (int x = 0; x < img.width(); ++x) {
            if (m[x]) {
                out.set(x, y, img.r(x, y), img.g(x, y), img.b(x, y));
            }
        }
    }
    return out;
}

BinaryMask subtract_mask(const BinaryMask& a, const BinaryMask& b)
{
    require_same_shape(a.width(), a.height(), b.width(), b.height(), "subtract_mask");
    BinaryMask out(a.width(), a.height());
    auto dst = out.values();
    const auto lhs = a.values();
    const auto rhs = b.values();
    for (std::size_t i = 0; i < dst.size(); ++i) {
        dst[i] = (lhs[i] && !rhs[i]) ? 1 : 0;
    }
    return out;
}

BinaryMask mask_intersection(const BinaryMask& a, const BinaryMask& b)
{
    require_same_shape(a.width(), a.height(), b.width(), b.height(), "mask_intersection");
    BinaryMask out(a.width(), a.height());
    auto dst = out.values();
    const auto lhs = a.values();
    const auto rhs = b.values();
    for (std::size_t i = 0; i < dst.size(); ++i) {
        dst[i] = (lhs[i] && rhs[i]) ? 1 : 0;
    }
    return out;
}

std::size_t count_foreground(const BinaryMask& mask)
{
    return static_cast<std::size_t>(std::count_if(mask.values().begin(), mask.values().end(),
                                                  [](std::uint8_t v) { return v != 0; }));
}

Region region_stats(const LabelMatrix& labels, int label)
{
    if (label < 1 || label > labels.count) {
        throw std::out_of_range("label " + std::to_string(label) + " outside 1.." + std::to_string(labels.count));
    }
    Region region;
    region.label = label;
    for (int y = 0; y < labels.height(); ++y) {
        const auto row = labels.label.row(y);
        for (int x = 0; x < labels.width(); ++x) {
            if (row[x] == label) {
                region.pixels.push_back({x, y});
            }
        }
    }
    if (region.pixels.empty()) {
        throw std::invalid_argument("label " + std::to_string(label) + " has no pixels");
    }
    finish_region(region);
    return region;
}

std::vector<Region> all_regions(const LabelMatrix& labels)
{
    std::vector<Region> regions(static_cast<std::size_t>(labels.count));
    for (int i = 0; i < labels.count; ++i) {
        regions[i].label = i + 1;
    }
    for (int y = 0; y < labels.height(); ++y) {
        const auto row = labels.label.row(y);
        for (int x = 0; x < labels.width(); ++x) {
            if (row[x] > 0) {
                regions[row[x] - 1].pixels.push_back({x, y});
            }
        }
    }
    for (auto& region : regions) {
        finish_region(region);
    }
    return regions;
}

Region region_from_mask(const BinaryMask& mask)
{
    Region region;
    for (int y = 0; y < mask.height(); ++y) {
        const auto row = mask.row(y);
        for (int x = 0; x < mask.width(); ++x) {
            if (row[x]) {
                region.pixels.push_back({x, y});
            }
        }
    }
    if (region.pixels.empty()) {
        throw std::invalid_argument("region_from_mask: empty mask");
    }
    finish_region(region);
    return region;
}

BinaryMask mask_from_region(const Region& region, int width, int height)
{
    BinaryMask mask(width, height);
    for (const Point p : region.pixels) {
        if (!mask.contains(p.x, p.y)) {
            throw std::out_of_range("region pixel outside mask bounds");
        }
        mask(p.x, p.y) = 1;
    }
    return mask;
}

}  // namespace wbc
