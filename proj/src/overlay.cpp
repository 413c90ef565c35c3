#include <algorithm>
#include <array>

#include "wbc/pipeline.hpp"

namespace wbc {

namespace {

struct Color {
    double r, g, b;
};

Color class_color(CellClass c)
{
    switch (c) {
    case CellClass::Neutrophil: return {255, 220, 0};
    case CellClass::Lymphocyte: return {0, 200, 0};
    case CellClass::Monocyte: return {0, 200, 255};
    case CellClass::Eosinophil: return {255, 0, 255};
    case CellClass::Basophil: return {255, 128, 0};
    case CellClass::Unknown: return {255, 255, 255};
    }
    return {255, 255, 255};
}

// 3x5 capitals, one string per row.
using Glyph = std::array<const char*, 5>;

Glyph class_glyph(CellClass c)
{
    switch (c) {
    case CellClass::Neutrophil: return {"110", "101", "101", "101", "101"};
    case CellClass::Lymphocyte: return {"100", "100", "100", "100", "111"};
    case CellClass::Monocyte: return {"101", "111", "101", "101", "101"};
    case CellClass::Eosinophil: return {"111", "100", "111", "100", "111"};
    case CellClass::Basophil: return {"110", "101", "110", "101", "110"};
    case CellClass::Unknown: return {"101", "101", "101", "101", "111"};
    }
    return {"111", "111", "111", "111", "111"};
}

void plot(RgbImage& img, int x, int y, Color c)
{
    if (img.r.contains(x, y)) {
        img.set(x, y, c.r, c.g, c.b);
    }
}

}  // namespace

RgbImage render_overlay(const RgbImage& img, const DifferentialReport& report)
{
    RgbImage out = img;
    const int w = img.width();
    const int h = img.height();
    for (const CellRecord& cell : report.cells) {
        const Color color = class_color(cell.cls);
        const int x0 = std::max(cell.bbox.min_x - 2, 0);
        const int y0 = std::max(cell.bbox.min_y - 2, 0);
        const int x1 = std::min(cell.bbox.max_x + 2, w - 1);
        const int y1 = std::min(cell.bbox.max_y + 2, h - 1);
        for (int x = x0; x <= x1; ++x) {
            plot(out, x, y0, color);
            plot(out, x, y1, color);
        }
        for (int y = y0; y <= y1; ++y) {
            plot(out, x0, y, color);
            plot(out, x1, y, color);
        }
        // The letter sits on top of the box, or just inside it near the top edge.
        const Glyph glyph = class_glyph(cell.cls);
        const int gy = y0 >= 5 ? y0 - 5 : y0 + 1;
        const int gx = y0 >= 5 ? x0 : x0 + 1;
        for (int row = 0; row < 5; ++row) {
            for (int col = 0; col < 3; ++col) {
                if (glyph[row][col] == '1') {
                    plot(out, gx + col, gy + row, color);
                }
            }
        }
    }
    return out;
}

}  // namespace wbc
