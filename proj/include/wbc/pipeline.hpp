#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "wbc/binarize.hpp"
#include "wbc/classify.hpp"
#include "wbc/colorspace.hpp"
#include "wbc/config.hpp"
#include "wbc/raster.hpp"
#include "wbc/report.hpp"
#include "wbc/synth.hpp"

namespace wbc {

/// Every intermediate product of one field, in stage order.
struct StageOutputs {
    RgbImage enhanced;
    HsiImage hsi;
    GrayImage highpass;
    double threshold = 0.0;
    BinaryMask binary;
    LabelMatrix labels;
    std::vector<int> valid_labels;
    /// One mask per nucleus after overlap separation, in raster order.
    std::vector<BinaryMask> nuclei;
};

/// sharpen -> HSI -> hue high-pass -> isodata threshold -> binarize -> label
/// -> valid contours -> overlap separation -> per-nucleus classification.
class Pipeline {
public:
    explicit Pipeline(PipelineConfig config);

    const PipelineConfig& config() const noexcept { return config_; }

    StageOutputs run_stages(const RgbImage& img) const;
    DifferentialReport count(const RgbImage& img) const;

private:
    DifferentialReport classify(const StageOutputs& stages) const;

    PipelineConfig config_;
    ClassifyParams classify_params_;
};

DifferentialReport count_field(const RgbImage& img, const PipelineConfig& config);

/// Card-style annotation: a box and a class letter per cell, one colour per
/// class. An empty report leaves the image untouched.
RgbImage render_overlay(const RgbImage& img, const DifferentialReport& report);

/// `<image>.truth` next to the image.
std::filesystem::path truth_sidecar(const std::filesystem::path& image);

struct BatchOptions {
    /// Where per-field reports (and overlays) go; nothing is written if unset.
    std::optional<std::filesystem::path> out_dir;
    bool overlay = false;
};

struct FieldResult {
    std::filesystem::path input;
    std::optional<DifferentialReport> report;
    /// Decode or processing failure; empty on success.
    std::string error;
    std::optional<GroundTruth> truth;
    std::string truth_error;

    bool failed() const { return !report.has_value(); }
    bool exact_match() const { return report && truth && report->matches(*truth); }
};

struct BatchSummary {
    /// Sorted by input path.
    std::vector<FieldResult> fields;

    int failed() const;
    int evaluated() const;
    int exact_matches() const;
    /// exact_matches / evaluated; nullopt when nothing had ground truth.
    std::optional<double> accuracy() const;

    nlohmann::ordered_json to_json() const;
};

/// Counts every image; fields run concurrently, failures are recorded and the
/// rest of the batch continues. When out_dir is set, writes
/// `<stem>.json` per field (plus `<stem>_overlay.png`) and `summary.json`.
BatchSummary run_batch(std::vector<std::filesystem::path> paths, const PipelineConfig& config,
                       const BatchOptions& options = {});

}  // namespace wbc
