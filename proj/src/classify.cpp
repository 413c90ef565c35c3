#include "wbc/classify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "wbc/colorspace.hpp"

namespace wbc {

std::string_view to_string(CellClass c)
{
    switch (c) {
    case CellClass::Neutrophil: return "neutrophil";
    case CellClass::Lymphocyte: return "lymphocyte";
    case CellClass::Monocyte: return "monocyte";
    case CellClass::Eosinophil: return "eosinophil";
    case CellClass::Basophil: return "basophil";
    case CellClass::Unknown: return "unknown";
    }
    return "unknown";
}

std::string count_key(CellClass c)
{
    return "no_of_" + std::string(to_string(c));
}

CellClass cell_class_from_string(std::string_view name)
{
    for (const CellClass c : kAllCellClasses) {
        if (to_string(c) == name) {
            return c;
        }
    }
    throw std::invalid_argument("unknown cell class '" + std::string(name) + "'");
}

void ClassifyParams::validate() const
{
    if (!(elongation_cut > 1.0)) {
        throw std::invalid_argument("elongation_cut must be > 1");
    }
    if (!(sat_white_max > 0.0 && sat_white_max < 1.0)) {
        throw std::invalid_argument("sat_white_max must lie in (0, 1)");
    }
    if (min_area < 1) {
        throw std::invalid_argument("min_area must be >= 1");
    }
    cytoplasm_se.validate();
}

ShapeFeatures shape_features(const Region& region, const BinaryMask& mask)
{
    if (region.pixels.empty()) {
        throw std::invalid_argument("shape_features: empty region");
    }
    const double w = region.bbox.width();
    const double h = region.bbox.height();
    ShapeFeatures f;
    f.elongation = std::max(w, h) / std::min(w, h);
    const auto cx = static_cast<int>(std::lround(region.centroid_x));
    const auto cy = static_cast<int>(std::lround(region.centroid_y));
    f.centroid_inside = mask.contains(cx, cy) && mask(cx, cy) != 0;
    return f;
}

BinaryMask cytoplasm_mask(const BinaryMask& nucleus, const StructuringElement& se)
{
    return ring_mask(nucleus, se);
}

std::optional<CytoplasmStats> cytoplasm_stats(const RgbImage& img, const BinaryMask& cmask)
{
    const RgbImage cytoplasm = pixelwise_multiply(img, cmask);
    double sin_sum = 0.0;
    double cos_sum = 0.0;
    double sat_sum = 0.0;
    std::size_t n = 0;
    constexpr double to_rad = std::numbers::pi / 180.0;
    for (int y = 0; y < cmask.height(); ++y) {
        const auto m = cmask.row(y);
        for (int x = 0; x < cmask.width(); ++x) {
            if (!m[x]) {
                continue;
            }
            const HsiPixel px = rgb_to_hsi(cytoplasm.r(x, y), cytoplasm.g(x, y), cytoplasm.b(x, y));
            sin_sum += px.s * std::sin(px.h * to_rad);
            cos_sum += px.s * std::cos(px.h * to_rad);
            sat_sum += px.s;
            ++n;
        }
    }
    if (n == 0) {
        return std::nullopt;
    }
    CytoplasmStats stats;
    stats.ave_saturation = sat_sum / static_cast<double>(n);
    if (sin_sum != 0.0 || cos_sum != 0.0) {
        double hue = std::atan2(sin_sum, cos_sum) / to_rad;
        if (hue < 0.0) {
            hue += 360.0;
        }
        stats.ave_hue = hue >= 360.0 ? hue - 360.0 : hue;
    }
    return stats;
}

CellClass classify_granulocyte(const CytoplasmStats& stats, const ClassifyParams& p)
{
    const bool white = p.literal_saturation_rule ? stats.ave_saturation > 1.0 - p.sat_white_max
                                                 : stats.ave_saturation < p.sat_white_max;
    if (white) {
        return CellClass::Neutrophil;
    }
    const std::array<MembershipDataSet, 2> sets{p.red_set, p.blue_set};
    const std::string color = classify_color(stats.ave_hue, sets);
    if (color == p.red_set.name()) {
        return CellClass::Eosinophil;
    }
    if (color == p.blue_set.name()) {
        return CellClass::Basophil;
    }
    return CellClass::Unknown;
}

CellClass classify_cell(const BinaryMask& nucleus, const Region& region, const RgbImage& enhanced,
                        const ClassifyParams& p)
{
    if (region.area() < p.min_area) {
        return CellClass::Unknown;
    }
    const ShapeFeatures shape = shape_features(region, nucleus);
    if (!shape.centroid_inside) {
        const auto stats = cytoplasm_stats(enhanced, cytoplasm_mask(nucleus, p.cytoplasm_se));
        return stats ? classify_granulocyte(*stats, p) : CellClass::Unknown;
    }
    return shape.elongation >= p.elongation_cut ? CellClass::Monocyte : CellClass::Lymphocyte;
}

}  // namespace wbc
