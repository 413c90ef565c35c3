#include "wbc/membership.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace wbc {

MembershipDataSet::MembershipDataSet(std::string name, std::vector<MembershipPoint> points)
    : name_(std::move(name)), points_(std::move(points))
{
    if (points_.size() < 2) {
        throw std::invalid_argument("membership set '" + name_ + "' needs at least two points");
    }
    for (const auto& p : points_) {
        if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
            throw std::invalid_argument("membership set '" + name_ + "' has a non-finite value");
        }
        if (p.y < 0.0 || p.y > 1.0) {
            throw std::invalid_argument("membership set '" + name_ + "' has a degree outside [0, 1]");
        }
    }
    // Barycentric-free form: precompute 1 / prod_{j != i} (x_i - x_j).
    weights_.resize(points_.size());
    for (std::size_t i = 0; i < points_.size(); ++i) {
        double denom = 1.0;
        for (std::size_t j = 0; j < points_.size(); ++j) {
            if (j == i) {
                continue;
            }
            const double d = points_[i].x - points_[j].x;
            if (d == 0.0) {
                throw std::invalid_argument("membership set '" + name_ + "' repeats x = " +
                                            std::to_string(points_[i].x));
            }
            denom *= d;
        }
        weights_[i] = 1.0 / denom;
    }
    const auto [lo, hi] = std::minmax_element(points_.begin(), points_.end(),
                                              [](const auto& a, const auto& b) { return a.x < b.x; });
    min_x_ = lo->x;
    max_x_ = hi->x;
}

MembershipDataSet MembershipDataSet::parse(std::string name, const std::string& text)
{
    std::vector<MembershipPoint> points;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            continue;
        }
        std::istringstream fields(line);
        MembershipPoint p;
        std::string extra;
        if (!(fields >> p.x >> p.y) || (fields >> extra)) {
            throw std::invalid_argument("membership table '" + name + "' line " + std::to_string(lineno) +
                                        ": expected `x y`");
        }
        points.push_back(p);
    }
    return MembershipDataSet(std::move(name), std::move(points));
}

MembershipDataSet MembershipDataSet::load(std::string name, const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open membership table " + path.string());
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse(std::move(name), buffer.str());
}

double MembershipDataSet::interpolate(double x) const
{
    double sum = 0.0;
    for (std::size_t i = 0; i < points_.size(); ++i) {
        double term = points_[i].y * weights_[i];
        for (std::size_t j = 0; j < points_.size(); ++j) {
            if (j != i) {
                term *= x - points_[j].x;
            }
        }
        sum += term;
    }
    return sum;
}

double membership(const MembershipDataSet& ds, double x)
{
    if (x < ds.min_x() || x > ds.max_x()) {
        return 0.0;
    }
    // Exact at the nodes; the product form can be off by an ulp there.
    for (const auto& p : ds.points()) {
        if (p.x == x) {
            return p.y;
        }
    }
    return std::clamp(ds.interpolate(x), 0.0, 1.0);
}

double hue_membership(const MembershipDataSet& ds, double hue)
{
    return std::max({membership(ds, hue), membership(ds, hue - 360.0), membership(ds, hue + 360.0)});
}

std::string classify_color(double hue, std::span<const MembershipDataSet> sets)
{
    if (sets.empty()) {
        throw std::invalid_argument("classify_color: no membership sets");
    }
    double best = 0.0;
    const MembershipDataSet* winner = nullptr;
    for (const auto& ds : sets) {
        const double m = hue_membership(ds, hue);
        if (m > best) {
            best = m;
            winner = &ds;
        }
    }
    return winner ? winner->name() : std::string(kUnknownColor);
}

MembershipDataSet default_red_set()
{
    // Red straddles 0 degrees, so it lives on an unwrapped 330..390 axis.
    return MembershipDataSet("red", {{330, 0.0}, {350, 0.8}, {360, 1.0}, {370, 1.0}, {390, 0.0}});
}

MembershipDataSet default_blue_set()
{
    return MembershipDataSet("blue", {{180, 0.0}, {220, 0.9}, {240, 1.0}, {280, 0.0}});
}

}  // namespace wbc
