#pragma once

// Image containers shared by every pipeline stage.
//
// Coordinates are (x = column, y = row) with the origin at the top-left
// corner. Planes are stored row-major.

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace wbc {

template <typename T>
class Plane {
public:
    using value_type = T;

    Plane() = default;

    Plane(int width, int height, T fill = T{})
        : width_(width), height_(height)
    {
        if (width <= 0 || height <= 0) {
            throw std::invalid_argument("plane dimensions must be positive");
        }
        data_.assign(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), fill);
    }

    int width() const noexcept { return width_; }
    int height() const noexcept { return height_; }
    std::size_t size() const noexcept { return data_.size(); }
    bool empty() const noexcept { return data_.empty(); }

    bool contains(int x, int y) const noexcept
    {
        return x >= 0 && y >= 0 && x < width_ && y < height_;
    }

    T& operator()(int x, int y) { return data_[index(x, y)]; }
    const T& operator()(int x, int y) const { return data_[index(x, y)]; }

    std::span<T> row(int y) { return {data_.data() + index(0, y), static_cast<std::size_t>(width_)}; }
    std::span<const T> row(int y) const
    {
        return {data_.data() + index(0, y), static_cast<std::size_t>(width_)};
    }

    std::span<T> values() noexcept { return data_; }
    std::span<const T> values() const noexcept { return data_; }

    template <typename U>
    bool same_shape(const Plane<U>& other) const noexcept
    {
        return width_ == other.width() && height_ == other.height();
    }

    bool operator==(const Plane&) const = default;

private:
    std::size_t index(int x, int y) const noexcept
    {
        return static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) + static_cast<std::size_t>(x);
    }

    int width_ = 0;
    int height_ = 0;
    std::vector<T> data_;
};

/// Real-valued single channel. Values are unbounded while filtering.
using GrayImage = Plane<double>;

/// One byte per pixel, 0 = background, 1 = foreground.
using BinaryMask = Plane<std::uint8_t>;

/// Three channel planes holding values in [0, 255]. Values stay real-valued
/// after enhancement and are quantized only when written to disk.
struct RgbImage {
    Plane<double> r, g, b;

    RgbImage() = default;
    RgbImage(int width, int height, double red = 0.0, double green = 0.0, double blue = 0.0);

    int width() const noexcept { return r.width(); }
    int height() const noexcept { return r.height(); }
    bool empty() const noexcept { return r.empty(); }

    void set(int x, int y, double red, double green, double blue);

    /// Throws std::invalid_argument when the planes disagree in shape or a
    /// value leaves [0, 255].
    void validate() const;

    bool operator==(const RgbImage&) const = default;
};

struct Point {
    int x = 0;
    int y = 0;
    bool operator==(const Point&) const = default;
};

struct BBox {
    int min_x = 0;
    int min_y = 0;
    int max_x = 0;
    int max_y = 0;

    int width() const noexcept { return max_x - min_x + 1; }
    int height() const noexcept { return max_y - min_y + 1; }
    bool contains(Point p) const noexcept
    {
        return p.x >= min_x && p.x <= max_x && p.y >= min_y && p.y <= max_y;
    }
    bool operator==(const BBox&) const = default;
};

struct LabelMatrix {
    Plane<std::int32_t> label;
    int count = 0;

    int width() const noexcept { return label.width(); }
    int height() const noexcept { return label.height(); }
};

/// One labeled component. Pixels are kept in raster order.
struct Region {
    int label = 0;
    std::vector<Point> pixels;
    BBox bbox;
    double centroid_x = 0.0;
    double centroid_y = 0.0;

    int area() const noexcept { return static_cast<int>(pixels.size()); }
};

class DimensionMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// img where mask is set, black elsewhere.
RgbImage pixelwise_multiply(const RgbImage& img, const BinaryMask& mask);

/// Set difference a \ b.
BinaryMask subtract_mask(const BinaryMask& a, const BinaryMask& b);

BinaryMask mask_intersection(const BinaryMask& a, const BinaryMask& b);

std::size_t count_foreground(const BinaryMask& mask);

Region region_stats(const LabelMatrix& labels, int label);

/// Every region of the matrix in one pass, indexed by label - 1.
std::vector<Region> all_regions(const LabelMatrix& labels);

/// Builds a region (label 0) from the set pixels of a mask. Throws if empty.
Region region_from_mask(const BinaryMask& mask);

BinaryMask mask_from_region(const Region& region, int width, int height);

}  // namespace wbc
