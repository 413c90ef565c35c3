#pragma once

#include <array>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "wbc/classify.hpp"
#include "wbc/raster.hpp"
#include "wbc/synth.hpp"

namespace wbc {

struct CellRecord {
    CellClass cls = CellClass::Unknown;
    BBox bbox;
    double centroid_x = 0.0;
    double centroid_y = 0.0;
};

/// Per-class WBC counts of one field. JSON keys follow the classic
/// `total_wbc` / `no_of_<class>` layout (see count_key).
struct DifferentialReport {
    std::vector<CellRecord> cells;

    int count(CellClass c) const;
    int total() const { return static_cast<int>(cells.size()); }

    nlohmann::ordered_json to_json() const;
    static DifferentialReport from_json(const nlohmann::ordered_json& j);

    static std::string csv_header();
    /// One CSV row; `name` fills the leading image column.
    std::string csv_row(const std::string& name) const;

    /// Counts (including unknown) and total agree with the truth.
    bool matches(const GroundTruth& truth) const;
};

}  // namespace wbc
