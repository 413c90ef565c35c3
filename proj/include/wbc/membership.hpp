#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace wbc {

struct MembershipPoint {
    double x = 0.0;
    double y = 0.0;
};

/// Training pairs of a fuzzy membership function evaluated by Lagrange
/// interpolation. Needs at least two points with distinct x and y in [0, 1];
/// violations throw std::invalid_argument at construction.
class MembershipDataSet {
public:
    MembershipDataSet(std::string name, std::vector<MembershipPoint> points);

    /// One `x y` pair per line; `#` starts a comment.
    static MembershipDataSet load(std::string name, const std::filesystem::path& path);
    static MembershipDataSet parse(std::string name, const std::string& text);

    const std::string& name() const noexcept { return name_; }
    std::span<const MembershipPoint> points() const noexcept { return points_; }
    double min_x() const noexcept { return min_x_; }
    double max_x() const noexcept { return max_x_; }

    /// The raw interpolating polynomial, no support test and no clamping.
    double interpolate(double x) const;

private:
    std::string name_;
    std::vector<MembershipPoint> points_;
    std::vector<double> weights_;
    double min_x_ = 0.0;
    double max_x_ = 0.0;
};

/// 0 outside [min x, max x]; otherwise the interpolant clamped to [0, 1].
double membership(const MembershipDataSet& ds, double x);

/// Membership of a hue angle. The set may be expressed on an unwrapped axis
/// (e.g. 330..390 for red), so the hue is also tried shifted by +-360 and the
/// best response wins.
double hue_membership(const MembershipDataSet& ds, double hue);

inline constexpr const char* kUnknownColor = "unknown";

/// Name of the set with the highest hue membership, first set wins ties.
/// Returns kUnknownColor when every membership is zero.
std::string classify_color(double hue, std::span<const MembershipDataSet> sets);

MembershipDataSet default_red_set();
MembershipDataSet default_blue_set();

}  // namespace wbc
