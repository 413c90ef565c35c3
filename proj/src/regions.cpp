#include "wbc/regions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace wbc {

void StructuringElement::validate() const
{
    if (radius < 1) {
        throw std::invalid_argument("structuring element radius must be >= 1");
    }
}

std::vector<Point> StructuringElement::offsets() const
{
    validate();
    std::vector<Point> out;
    for (int dy = -radius; dy <= radius; ++dy) {
        for (int dx = -radius; dx <= radius; ++dx) {
            if (shape == Shape::Square || dx * dx + dy * dy <= radius * radius) {
                out.push_back({dx, dy});
            }
        }
    }
    return out;
}

void ValidityParams::validate() const
{
    if (!(factor > 0.0 && factor <= 1.0)) {
        throw std::invalid_argument("validity factor must lie in (0, 1]");
    }
    if (min_area < 1) {
        throw std::invalid_argument("validity min_area must be >= 1");
    }
}

namespace {

class DisjointSets {
public:
    int make()
    {
        parent_.push_back(static_cast<int>(parent_.size()));
        return parent_.back();
    }

    int find(int a)
    {
        while (parent_[a] != a) {
            parent_[a] = parent_[parent_[a]];
            a = parent_[a];
        }
        return a;
    }

    void unite(int a, int b)
    {
        a = find(a);
        b = find(b);
        if (a != b) {
            parent_[std::max(a, b)] = std::min(a, b);
        }
    }

private:
    std::vector<int> parent_;
};

}  // namespace

LabelMatrix label(const BinaryMask& mask, Connectivity connectivity)
{
    const int w = mask.width();
    const int h = mask.height();
    LabelMatrix out{Plane<std::int32_t>(w, h), 0};
    auto& lab = out.label;
    DisjointSets sets;
    sets.make();  // provisional label 0 is background

    // First pass: provisional labels from the already-visited neighbours.
    const bool eight = connectivity == Connectivity::Eight;
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            if (!mask(x, y)) {
                continue;
            }
            int current = 0;
            const auto visit = [&](int nx, int ny) {
                if (!lab.contains(nx, ny)) {
                    return;
                }
                const int n = lab(nx, ny);
                if (n == 0) {
                    return;
                }
                if (current == 0) {
                    current = n;
                } else {
                    sets.unite(current, n);
                }
            };
            visit(x - 1, y);
            visit(x, y - 1);
            if (eight) {
                visit(x - 1, y - 1);
                visit(x + 1, y - 1);
            }
            lab(x, y) = current != 0 ? current : sets.make();
        }
    }

    // Second pass: compact roots to 1..count in first-encounter order.
    std::vector<int> final_label;
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            const int provisional = lab(x, y);
            if (provisional == 0) {
                continue;
            }
            const int root = sets.find(provisional);
            if (static_cast<std::size_t>(root) >= final_label.size()) {
                final_label.resize(static_cast<std::size_t>(root) + 1, 0);
            }
            if (final_label[root] == 0) {
                final_label[root] = ++out.count;
            }
            lab(x, y) = final_label[root];
        }
    }
    return out;
}

std::vector<double> label_maxima(const LabelMatrix& labels, const GrayImage& highpass)
{
    if (!labels.label.same_shape(highpass)) {
        throw DimensionMismatch("label_maxima: label matrix and highpass differ in shape");
    }
    std::vector<double> maxima(static_cast<std::size_t>(labels.count) + 1, 0.0);
    std::vector<bool> seen(maxima.size(), false);
    const auto lab = labels.label.values();
    const auto val = highpass.values();
    for (std::size_t i = 0; i < lab.size(); ++i) {
        const auto l = static_cast<std::size_t>(lab[i]);
        if (l == 0) {
            continue;
        }
        if (!seen[l] || val[i] > maxima[l]) {
            maxima[l] = val[i];
            seen[l] = true;
        }
    }
    return maxima;
}

std::vector<int> valid_contours(const LabelMatrix& labels, const GrayImage& highpass, const ValidityParams& p)
{
    p.validate();
    if (labels.count == 0) {
        return {};
    }
    const auto maxima = label_maxima(labels, highpass);
    std::vector<int> area(maxima.size(), 0);
    for (const auto l : labels.label.values()) {
        ++area[static_cast<std::size_t>(l)];
    }
    const double global = *std::max_element(maxima.begin() + 1, maxima.end());
    std::vector<int> valid;
    for (int l = 1; l <= labels.count; ++l) {
        if (maxima[l] > p.factor * global && area[l] >= p.min_area) {
            valid.push_back(l);
        }
    }
    return valid;
}

BinaryMask dilate(const BinaryMask& mask, const StructuringElement& se)
{
    se.validate();
    const int w = mask.width();
    const int h = mask.height();
    const int r = se.radius;
    BinaryMask out(w, h);

    if (se.shape == StructuringElement::Shape::Square) {
        // Separable: a row pass with a running count, then a column pass.
        BinaryMask rows(w, h);
#pragma omp parallel for schedule(static)
        for (int y = 0; y < h; ++y) {
            const auto src = mask.row(y);
            auto dst = rows.row(y);
            std::vector<int> prefix(static_cast<std::size_t>(w) + 1, 0);
            for (int x = 0; x < w; ++x) {
                prefix[x + 1] = prefix[x] + (src[x] ? 1 : 0);
            }
            for (int x = 0; x < w; ++x) {
                const int lo = std::max(x - r, 0);
                const int hi = std::min(x + r, w - 1);
                dst[x] = prefix[hi + 1] - prefix[lo] > 0 ? 1 : 0;
            }
        }
#pragma omp parallel for schedule(static)
        for (int y = 0; y < h; ++y) {
            const int lo = std::max(y - r, 0);
            const int hi = std::min(y + r, h - 1);
            auto dst = out.row(y);
            for (int yy = lo; yy <= hi; ++yy) {
                const auto src = rows.row(yy);
                for (int x = 0; x < w; ++x) {
                    dst[x] |= src[x];
                }
            }
        }
        return out;
    }

    const auto offsets = se.offsets();
#pragma omp parallel for schedule(static)
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            for (const Point d : offsets) {
                const int sx = x + d.x;
                const int sy = y + d.y;
                if (mask.contains(sx, sy) && mask(sx, sy)) {
                    out(x, y) = 1;
                    break;
                }
            }
        }
    }
    return out;
}

BinaryMask ring_mask(const BinaryMask& mask, const StructuringElement& se)
{
    return subtract_mask(dilate(mask, se), mask);
}

std::vector<BinaryMask> separate_overlap(const Region& contour, const GrayImage& highpass,
                                         const OverlapParams& params)
{
    const int w = highpass.width();
    const int h = highpass.height();
    BinaryMask original = mask_from_region(contour, w, h);
    const BinaryMask ring = ring_mask(original, params.se);

    double ring_sum = 0.0;
    std::size_t ring_n = 0;
    for (int y = 0; y < h; ++y) {
        const auto m = ring.row(y);
        const auto v = highpass.row(y);
        for (int x = 0; x < w; ++x) {
            if (m[x]) {
                ring_sum += v[x];
                ++ring_n;
            }
        }
    }
    if (ring_n == 0) {
        return {std::move(original)};
    }
    const double fill = ring_sum / static_cast<double>(ring_n);

    GrayImage scratch(w, h, fill);
    for (const Point p : contour.pixels) {
        scratch(p.x, p.y) = highpass(p.x, p.y);
    }
    const double t = isodata_threshold(scratch, params.threshold);
    const BinaryMask inside = mask_intersection(to_binary(scratch, t), original);
    const LabelMatrix parts = label(inside, params.connectivity);
    if (parts.count < 2) {
        return {std::move(original)};
    }

    std::vector<BinaryMask> out;
    for (const Region& part : all_regions(parts)) {
        if (part.area() >= params.min_fragment_area) {
            out.push_back(mask_from_region(part, w, h));
        }
    }
    if (out.size() < 2) {
        return {std::move(original)};
    }
    return out;
}

}  // namespace wbc
