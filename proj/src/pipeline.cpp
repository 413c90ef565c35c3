#include "wbc/pipeline.hpp"

#include <algorithm>
#include <fstream>
#include <tuple>

#include "wbc/enhance.hpp"
#include "wbc/image_io.hpp"
#include "wbc/regions.hpp"

namespace wbc {

namespace {

double median(std::vector<int> values)
{
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    if (n == 0) {
        return 0.0;
    }
    return n % 2 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

void write_text(const std::filesystem::path& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    out << text;
}

}  // namespace

Pipeline::Pipeline(PipelineConfig config) : config_(std::move(config))
{
    config_.validate();
    classify_params_ = config_.classify_params();
}

StageOutputs Pipeline::run_stages(const RgbImage& img) const
{
    img.validate();
    StageOutputs s;
    s.enhanced = config_.sharpen ? sharpen(img, config_.laplacian_kernel()) : img;
    s.hsi = convert_image(s.enhanced);
    s.highpass = hue_highpass(s.hsi, config_.hue_cutoff, config_.s_min);
    s.threshold = isodata_threshold(s.highpass, config_.threshold_params());
    s.binary = to_binary(s.highpass, s.threshold);
    s.labels = label(s.binary, config_.connectivity_mode());
    s.valid_labels = valid_contours(s.labels, s.highpass, config_.validity_params());

    const auto regions = all_regions(s.labels);
    std::vector<int> areas;
    for (const int l : s.valid_labels) {
        areas.push_back(regions[l - 1].area());
    }
    const double split_area = config_.overlap_k * median(areas);

    OverlapParams overlap;
    overlap.se = config_.structuring_element();
    overlap.threshold = config_.threshold_params();
    overlap.connectivity = config_.connectivity_mode();
    overlap.min_fragment_area = config_.min_area;

    const int w = img.width();
    const int h = img.height();
    for (const int l : s.valid_labels) {
        const Region& region = regions[l - 1];
        if (region.area() > split_area) {
            for (BinaryMask& part : separate_overlap(region, s.highpass, overlap)) {
                s.nuclei.push_back(std::move(part));
            }
        } else {
            s.nuclei.push_back(mask_from_region(region, w, h));
        }
    }
    return s;
}

DifferentialReport Pipeline::classify(const StageOutputs& stages) const
{
    struct Ordered {
        Point first;
        CellRecord record;
    };
    std::vector<Ordered> cells;
    for (const BinaryMask& nucleus : stages.nuclei) {
        const Region region = region_from_mask(nucleus);
        CellRecord rec;
        rec.cls = classify_cell(nucleus, region, stages.enhanced, classify_params_);
        rec.bbox = region.bbox;
        rec.centroid_x = region.centroid_x;
        rec.centroid_y = region.centroid_y;
        cells.push_back({region.pixels.front(), rec});
    }
    std::sort(cells.begin(), cells.end(), [](const Ordered& a, const Ordered& b) {
        return std::tie(a.first.y, a.first.x) < std::tie(b.first.y, b.first.x);
    });
    DifferentialReport report;
    for (const auto& c : cells) {
        report.cells.push_back(c.record);
    }
    return report;
}

DifferentialReport Pipeline::count(const RgbImage& img) const
{
    return classify(run_stages(img));
}

DifferentialReport count_field(const RgbImage& img, const PipelineConfig& config)
{
    return Pipeline(config).count(img);
}

std::filesystem::path truth_sidecar(const std::filesystem::path& image)
{
    std::filesystem::path p = image;
    p += ".truth";
    return p;
}

int BatchSummary::failed() const
{
    return static_cast<int>(std::count_if(fields.begin(), fields.end(), [](const auto& f) { return f.failed(); }));
}

int BatchSummary::evaluated() const
{
    return static_cast<int>(
        std::count_if(fields.begin(), fields.end(), [](const auto& f) { return f.report && f.truth; }));
}

int BatchSummary::exact_matches() const
{
    return static_cast<int>(
        std::count_if(fields.begin(), fields.end(), [](const auto& f) { return f.exact_match(); }));
}

std::optional<double> BatchSummary::accuracy() const
{
    const int n = evaluated();
    if (n == 0) {
        return std::nullopt;
    }
    return static_cast<double>(exact_matches()) / n;
}

nlohmann::ordered_json BatchSummary::to_json() const
{
    DifferentialReport all;
    for (const auto& f : fields) {
        if (f.report) {
            all.cells.insert(all.cells.end(), f.report->cells.begin(), f.report->cells.end());
        }
    }
    nlohmann::ordered_json totals = all.to_json();
    totals.erase("cells");

    nlohmann::ordered_json j;
    j["inputs"] = fields.size();
    j["failed"] = failed();
    j["totals"] = totals;
    j["evaluated"] = evaluated();
    j["exact_matches"] = exact_matches();
    const auto acc = accuracy();
    j["accuracy"] = acc ? nlohmann::ordered_json(*acc) : nlohmann::ordered_json(nullptr);

    nlohmann::ordered_json per_field = nlohmann::ordered_json::array();
    for (const auto& f : fields) {
        nlohmann::ordered_json item;
        item["image"] = f.input.string();
        if (f.report) {
            item["total_wbc"] = f.report->total();
        } else {
            item["error"] = f.error;
        }
        if (f.truth && f.report) {
            item["exact_match"] = f.exact_match();
        }
        if (!f.truth_error.empty()) {
            item["truth_error"] = f.truth_error;
        }
        per_field.push_back(item);
    }
    j["fields"] = per_field;
    return j;
}

BatchSummary run_batch(std::vector<std::filesystem::path> paths, const PipelineConfig& config,
                       const BatchOptions& options)
{
    std::sort(paths.begin(), paths.end());
    const Pipeline pipeline(config);
    if (options.out_dir) {
        std::filesystem::create_directories(*options.out_dir);
    }

    BatchSummary summary;
    summary.fields.resize(paths.size());
    const auto n = static_cast<std::ptrdiff_t>(paths.size());
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        FieldResult& result = summary.fields[i];
        result.input = paths[i];
        try {
            const RgbImage img = read_image(paths[i]);
            result.report = pipeline.count(img);
            if (options.out_dir) {
                const auto stem = paths[i].stem().string();
                write_text(*options.out_dir / (stem + ".json"), result.report->to_json().dump(2) + "\n");
                if (options.overlay) {
                    write_png(*options.out_dir / (stem + "_overlay.png"), render_overlay(img, *result.report));
                }
            }
        } catch (const std::exception& e) {
            result.report.reset();
            result.error = e.what();
        }
        const auto sidecar = truth_sidecar(paths[i]);
        if (std::filesystem::exists(sidecar)) {
            try {
                std::ifstream in(sidecar);
                result.truth = ground_truth_from_json(nlohmann::ordered_json::parse(in));
            } catch (const std::exception& e) {
                result.truth_error = sidecar.string() + ": " + e.what();
            }
        }
    }

    if (options.out_dir) {
        write_text(*options.out_dir / "summary.json", summary.to_json().dump(2) + "\n");
    }
    return summary;
}

}  // namespace wbc
