#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "wbc/binarize.hpp"
#include "wbc/classify.hpp"
#include "wbc/enhance.hpp"
#include "wbc/regions.hpp"

namespace wbc {

class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Every tunable of the counting pipeline. Serialized as a flat JSON object;
/// keys that are absent keep their defaults, unknown keys are rejected.
struct PipelineConfig {
    // enhancement
    bool sharpen = true;
    std::string kernel = "four";  // "four" | "eight"

    // segmentation
    double hue_cutoff = 150.0;
    double s_min = 0.15;
    double t0 = 0.5;
    int max_iters = 100;

    // contours
    double validity_factor = 0.85;
    int min_area = 30;
    int connectivity = 8;
    std::string se_shape = "square";  // "square" | "disc"
    int se_radius = 1;
    double overlap_k = 1.8;

    // classification
    double elongation_cut = 1.25;
    double sat_white_max = 0.2;
    bool literal_saturation_rule = false;
    int cytoplasm_radius = 3;
    std::string red_set_path;
    std::string blue_set_path;

    /// Throws ConfigError naming the first out-of-range field.
    void validate() const;

    LaplacianKernel laplacian_kernel() const;
    ThresholdParams threshold_params() const;
    ValidityParams validity_params() const;
    StructuringElement structuring_element() const;
    Connectivity connectivity_mode() const;
    /// Loads the membership tables when paths are set.
    ClassifyParams classify_params() const;

    static PipelineConfig from_json(const nlohmann::ordered_json& j);
    static PipelineConfig load(const std::filesystem::path& path);
    nlohmann::ordered_json to_json() const;
};

}  // namespace wbc
