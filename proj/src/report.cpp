#include "wbc/report.hpp"

#include <algorithm>
#include <sstream>

namespace wbc {

namespace {

// Column order of the report, matching the classic printout.
constexpr std::array<CellClass, 6> kReportOrder{CellClass::Lymphocyte, CellClass::Monocyte, CellClass::Neutrophil,
                                                CellClass::Eosinophil, CellClass::Basophil, CellClass::Unknown};

}  // namespace

int DifferentialReport::count(CellClass c) const
{
    return static_cast<int>(std::count_if(cells.begin(), cells.end(), [c](const CellRecord& r) { return r.cls == c; }));
}

nlohmann::ordered_json DifferentialReport::to_json() const
{
    nlohmann::ordered_json j;
    j["total_wbc"] = total();
    for (const CellClass c : kReportOrder) {
        j[count_key(c)] = count(c);
    }
    nlohmann::ordered_json records = nlohmann::ordered_json::array();
    for (const CellRecord& r : cells) {
        nlohmann::ordered_json rec;
        rec["class"] = to_string(r.cls);
        rec["bbox"] = {r.bbox.min_x, r.bbox.min_y, r.bbox.max_x, r.bbox.max_y};
        rec["centroid"] = {r.centroid_x, r.centroid_y};
        records.push_back(rec);
    }
    j["cells"] = records;
    return j;
}

DifferentialReport DifferentialReport::from_json(const nlohmann::ordered_json& j)
{
    DifferentialReport report;
    for (const auto& rec : j.at("cells")) {
        CellRecord r;
        r.cls = cell_class_from_string(rec.at("class").get<std::string>());
        const auto& b = rec.at("bbox");
        r.bbox = {b.at(0).get<int>(), b.at(1).get<int>(), b.at(2).get<int>(), b.at(3).get<int>()};
        r.centroid_x = rec.at("centroid").at(0).get<double>();
        r.centroid_y = rec.at("centroid").at(1).get<double>();
        report.cells.push_back(r);
    }
    if (j.value("total_wbc", report.total()) != report.total()) {
        throw std::invalid_argument("report total_wbc disagrees with its cell records");
    }
    return report;
}

std::string DifferentialReport::csv_header()
{
    std::string header = "image,total_wbc";
    for (const CellClass c : kReportOrder) {
        header += "," + count_key(c);
    }
    return header;
}

std::string DifferentialReport::csv_row(const std::string& name) const
{
    std::ostringstream row;
    row << name << ',' << total();
    for (const CellClass c : kReportOrder) {
        row << ',' << count(c);
    }
    return row.str();
}

bool DifferentialReport::matches(const GroundTruth& truth) const
{
    if (total() != truth.total()) {
        return false;
    }
    return std::all_of(kAllCellClasses.begin(), kAllCellClasses.end(),
                       [&](CellClass c) { return count(c) == truth.count(c); });
}

}  // namespace wbc
