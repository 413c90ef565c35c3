#include "wbc/config.hpp"

#include <fstream>

namespace wbc {

namespace {

template <typename T>
void read_field(const nlohmann::ordered_json& j, const char* key, T& field)
{
    if (!j.contains(key)) {
        return;
    }
    try {
        field = j.at(key).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("config key '") + key + "': " + e.what());
    }
}

void require(bool ok, const std::string& what)
{
    if (!ok) {
        throw ConfigError("config: " + what);
    }
}

}  // namespace

void PipelineConfig::validate() const
{
    require(kernel == "four" || kernel == "eight", "kernel must be \"four\" or \"eight\"");
    require(hue_cutoff > 0.0 && hue_cutoff < 360.0, "hue_cutoff must lie in (0, 360)");
    require(s_min >= 0.0 && s_min <= 1.0, "s_min must lie in [0, 1]");
    require(t0 > 0.0, "t0 must be > 0");
    require(max_iters >= 1, "max_iters must be >= 1");
    require(validity_factor > 0.0 && validity_factor <= 1.0, "validity_factor must lie in (0, 1]");
    require(min_area >= 1, "min_area must be >= 1");
    require(connectivity == 4 || connectivity == 8, "connectivity must be 4 or 8");
    require(se_shape == "square" || se_shape == "disc", "se_shape must be \"square\" or \"disc\"");
    require(se_radius >= 1, "se_radius must be >= 1");
    require(overlap_k > 0.0, "overlap_k must be > 0");
    require(elongation_cut > 1.0, "elongation_cut must be > 1");
    require(sat_white_max > 0.0 && sat_white_max < 1.0, "sat_white_max must lie in (0, 1)");
    require(cytoplasm_radius >= 1, "cytoplasm_radius must be >= 1");
}

LaplacianKernel PipelineConfig::laplacian_kernel() const
{
    return kernel == "eight" ? LaplacianKernel::eight_neighbor() : LaplacianKernel::four_neighbor();
}

ThresholdParams PipelineConfig::threshold_params() const
{
    return {t0, max_iters};
}

ValidityParams PipelineConfig::validity_params() const
{
    return {validity_factor, min_area};
}

StructuringElement PipelineConfig::structuring_element() const
{
    return se_shape == "disc" ? StructuringElement::disc(se_radius) : StructuringElement::square(se_radius);
}

Connectivity PipelineConfig::connectivity_mode() const
{
    return connectivity == 4 ? Connectivity::Four : Connectivity::Eight;
}

ClassifyParams PipelineConfig::classify_params() const
{
    ClassifyParams p;
    p.elongation_cut = elongation_cut;
    p.sat_white_max = sat_white_max;
    p.literal_saturation_rule = literal_saturation_rule;
    p.cytoplasm_se = se_shape == "disc" ? StructuringElement::disc(cytoplasm_radius)
                                        : StructuringElement::square(cytoplasm_radius);
    p.min_area = min_area;
    try {
        if (!red_set_path.empty()) {
            p.red_set = MembershipDataSet::load("red", red_set_path);
        }
        if (!blue_set_path.empty()) {
            p.blue_set = MembershipDataSet::load("blue", blue_set_path);
        }
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    return p;
}

PipelineConfig PipelineConfig::from_json(const nlohmann::ordered_json& j)
{
    if (!j.is_object()) {
        throw ConfigError("config: top level must be a JSON object");
    }
    PipelineConfig cfg;
    const nlohmann::ordered_json defaults = cfg.to_json();
    for (const auto& item : j.items()) {
        if (!defaults.contains(item.key())) {
            throw ConfigError("config: unknown key '" + item.key() + "'");
        }
    }
    read_field(j, "sharpen", cfg.sharpen);
    read_field(j, "kernel", cfg.kernel);
    read_field(j, "hue_cutoff", cfg.hue_cutoff);
    read_field(j, "s_min", cfg.s_min);
    read_field(j, "t0", cfg.t0);
    read_field(j, "max_iters", cfg.max_iters);
    read_field(j, "validity_factor", cfg.validity_factor);
    read_field(j, "min_area", cfg.min_area);
    read_field(j, "connectivity", cfg.connectivity);
    read_field(j, "se_shape", cfg.se_shape);
    read_field(j, "se_radius", cfg.se_radius);
    read_field(j, "overlap_k", cfg.overlap_k);
    read_field(j, "elongation_cut", cfg.elongation_cut);
    read_field(j, "sat_white_max", cfg.sat_white_max);
    read_field(j, "literal_saturation_rule", cfg.literal_saturation_rule);
    read_field(j, "cytoplasm_radius", cfg.cytoplasm_radius);
    read_field(j, "red_set_path", cfg.red_set_path);
    read_field(j, "blue_set_path", cfg.blue_set_path);
    cfg.validate();
    return cfg;
}

PipelineConfig PipelineConfig::load(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file " + path.string());
    }
    nlohmann::ordered_json j;
    try {
        j = nlohmann::ordered_json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError(path.string() + ": " + e.what());
    }
    PipelineConfig cfg = from_json(j);
    // Membership tables are resolved relative to the config file.
    const auto base = path.parent_path();
    for (std::string* p : {&cfg.red_set_path, &cfg.blue_set_path}) {
        if (!p->empty() && std::filesystem::path(*p).is_relative()) {
            *p = (base / *p).string();
        }
    }
    return cfg;
}

nlohmann::ordered_json PipelineConfig::to_json() const
{
    nlohmann::ordered_json j;
    j["sharpen"] = sharpen;
    j["kernel"] = kernel;
    j["hue_cutoff"] = hue_cutoff;
    j["s_min"] = s_min;
    j["t0"] = t0;
    j["max_iters"] = max_iters;
    j["validity_factor"] = validity_factor;
    j["min_area"] = min_area;
    j["connectivity"] = connectivity;
    j["se_shape"] = se_shape;
    j["se_radius"] = se_radius;
    j["overlap_k"] = overlap_k;
    j["elongation_cut"] = elongation_cut;
    j["sat_white_max"] = sat_white_max;
    j["literal_saturation_rule"] = literal_saturation_rule;
    j["cytoplasm_radius"] = cytoplasm_radius;
    j["red_set_path"] = red_set_path;
    j["blue_set_path"] = blue_set_path;
    return j;
}

}  // namespace wbc
