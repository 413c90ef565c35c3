// wbc: count white blood cells in smear images, generate synthetic fields,
// evaluate against ground truth.
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wbc/config.hpp"
#include "wbc/image_io.hpp"
#include "wbc/pipeline.hpp"
#include "wbc/synth.hpp"

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

wbc::PipelineConfig load_config(const std::string& path)
{
    return path.empty() ? wbc::PipelineConfig{} : wbc::PipelineConfig::load(path);
}

void write_file(const fs::path& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    out << text;
}

void print_table(const wbc::BatchSummary& summary)
{
    for (const auto& f : summary.fields) {
        if (!f.report) {
            continue;
        }
        const auto& r = *f.report;
        std::cout << f.input.string() << "\n  total_wbc " << r.total() << "\n";
        for (const auto c : wbc::kAllCellClasses) {
            std::cout << "  " << std::left << std::setw(11) << wbc::to_string(c) << ' ' << r.count(c) << "\n";
        }
    }
}

int run_count(const std::vector<std::string>& images, const std::string& config_path, const std::string& out_dir,
              bool overlay, bool json, bool csv)
{
    const auto config = load_config(config_path);
    wbc::BatchOptions options;
    if (!out_dir.empty()) {
        options.out_dir = out_dir;
    }
    options.overlay = overlay;
    const auto summary = wbc::run_batch({images.begin(), images.end()}, config, options);

    if (json) {
        ordered_json all = ordered_json::array();
        for (const auto& f : summary.fields) {
            if (f.report) {
                ordered_json item;
                item["image"] = f.input.string();
                item.update(f.report->to_json());
                all.push_back(item);
            }
        }
        std::cout << all.dump(2) << "\n";
    } else if (csv) {
        std::cout << wbc::DifferentialReport::csv_header() << "\n";
        for (const auto& f : summary.fields) {
            if (f.report) {
                std::cout << f.report->csv_row(f.input.string()) << "\n";
            }
        }
    } else {
        print_table(summary);
    }

    for (const auto& f : summary.fields) {
        if (f.failed()) {
            std::cerr << "error: " << f.error << "\n";
        }
        if (!f.truth_error.empty()) {
            std::cerr << "warning: " << f.truth_error << "\n";
        }
    }
    return summary.failed() > 0 ? 1 : 0;
}

void save_field(const wbc::SyntheticField& field, const fs::path& png)
{
    wbc::write_png(png, field.image);
    write_file(wbc::truth_sidecar(png), wbc::to_json(field.truth).dump(2) + "\n");
}

int run_synth(const std::string& spec_path, const std::string& out_dir)
{
    std::ifstream in(spec_path);
    if (!in) {
        throw std::runtime_error("cannot read " + spec_path);
    }
    const ordered_json j = ordered_json::parse(in);
    fs::create_directories(out_dir);

    if (j.contains("suite")) {
        const auto& s = j.at("suite");
        const int n = s.at("n").get<int>();
        const auto seed = s.value("seed", std::uint64_t{1});
        wbc::ClassMix mix = wbc::default_mix();
        if (s.contains("mix")) {
            mix = s.at("mix").get<wbc::ClassMix>();
        }
        wbc::SuiteOptions options;
        options.width = s.value("width", options.width);
        options.height = s.value("height", options.height);
        options.min_cells = s.value("min_cells", options.min_cells);
        options.max_cells = s.value("max_cells", options.max_cells);
        options.pair_probability = s.value("pair_probability", options.pair_probability);
        const auto fields = wbc::generate_suite(n, mix, seed, options);
        for (std::size_t i = 0; i < fields.size(); ++i) {
            char name[32];
            std::snprintf(name, sizeof name, "field_%04zu.png", i);
            save_field(fields[i], fs::path(out_dir) / name);
        }
        std::cout << "wrote " << fields.size() << " fields to " << out_dir << "\n";
        return 0;
    }

    const auto field = wbc::generate(wbc::field_spec_from_json(j));
    const fs::path png = fs::path(out_dir) / (fs::path(spec_path).stem().string() + ".png");
    save_field(field, png);
    std::cout << "wrote " << png.string() << " (" << field.truth.total() << " cells)\n";
    return 0;
}

int run_eval(const std::string& dir, const std::string& config_path)
{
    std::vector<fs::path> images;
    for (const auto& entry : fs::directory_iterator(dir)) {
        const auto ext = entry.path().extension();
        if (entry.is_regular_file() && (ext == ".png" || ext == ".bmp") && fs::exists(wbc::truth_sidecar(entry.path()))) {
            images.push_back(entry.path());
        }
    }
    const auto summary = wbc::run_batch(images, load_config(config_path));
    for (const auto& f : summary.fields) {
        if (f.failed()) {
            std::cerr << "error: " << f.error << "\n";
        } else if (f.truth && !f.exact_match()) {
            std::cout << "mismatch " << f.input.filename().string() << ": got " << f.report->total() << ", expected "
                      << f.truth->total() << "\n";
        }
    }
    const auto acc = summary.accuracy();
    std::cout << "evaluated " << summary.evaluated() << ", exact " << summary.exact_matches() << ", accuracy "
              << std::fixed << std::setprecision(4) << acc.value_or(0.0) << "\n";
    return summary.failed() > 0 ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"White blood cell differential counter"};
    app.require_subcommand(1);

    std::vector<std::string> images;
    std::string config_path;
    std::string out_dir;
    bool overlay = false;
    bool json = false;
    bool csv = false;
    auto* count = app.add_subcommand("count", "Count and classify the WBCs in each image");
    count->add_option("images", images, "PNG or BMP images")->required();
    count->add_option("--config", config_path, "Pipeline configuration (JSON)")->check(CLI::ExistingFile);
    count->add_option("--out", out_dir, "Directory for per-image reports and summary.json");
    count->add_flag("--overlay", overlay, "Also write an annotated PNG per image (needs --out)");
    auto* json_flag = count->add_flag("--json", json, "Print reports as JSON");
    auto* csv_flag = count->add_flag("--csv", csv, "Print reports as CSV");
    json_flag->excludes(csv_flag);

    std::string spec_path;
    std::string synth_out;
    auto* synth = app.add_subcommand("synth", "Render synthetic fields with ground truth");
    synth->add_option("--spec", spec_path, "Field spec, or {\"suite\": {...}}")->required()->check(CLI::ExistingFile);
    synth->add_option("--out", synth_out, "Output directory")->required();

    std::string eval_dir;
    std::string eval_config;
    auto* eval = app.add_subcommand("eval", "Score images that have .truth sidecars");
    eval->add_option("--dir", eval_dir, "Directory of images")->required()->check(CLI::ExistingDirectory);
    eval->add_option("--config", eval_config, "Pipeline configuration (JSON)")->check(CLI::ExistingFile);

    bool dump = false;
    std::string dump_config;
    auto* config = app.add_subcommand("config", "Show the effective configuration");
    config->add_flag("--dump", dump, "Print the configuration as JSON")->required();
    config->add_option("--config", dump_config, "Configuration to load")->check(CLI::ExistingFile);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*count) {
            if (overlay && out_dir.empty()) {
                throw CLI::ValidationError("--overlay", "requires --out");
            }
            return run_count(images, config_path, out_dir, overlay, json, csv);
        }
        if (*synth) {
            return run_synth(spec_path, synth_out);
        }
        if (*eval) {
            return run_eval(eval_dir, eval_config);
        }
        if (*config) {
            std::cout << load_config(dump_config).to_json().dump(2) << "\n";
            return 0;
        }
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
