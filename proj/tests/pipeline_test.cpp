#include <filesystem>
#include <fstream>

#include <gtest/gtest.h>

#include "oracles/oracles.hpp"
#include "wbc/image_io.hpp"
#include "wbc/pipeline.hpp"

using namespace wbc;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& name)
{
    const fs::path dir = fs::temp_directory_path() / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

void save(const SyntheticField& f, const fs::path& png)
{
    write_png(png, f.image);
    std::ofstream(truth_sidecar(png)) << to_json(f.truth).dump();
}

}  // namespace

TEST(Pipeline, FiveCellField)
{
    const auto report = count_field(generate(five_cell_field_spec()).image, PipelineConfig{});
    EXPECT_EQ(report.total(), 5);
    EXPECT_EQ(report.count(CellClass::Neutrophil), 2);
    EXPECT_EQ(report.count(CellClass::Eosinophil), 1);
    EXPECT_EQ(report.count(CellClass::Monocyte), 1);
    EXPECT_EQ(report.count(CellClass::Lymphocyte), 1);
}

TEST(Pipeline, TwoCellField)
{
    const auto report = count_field(generate(two_cell_field_spec()).image, PipelineConfig{});
    EXPECT_EQ(report.total(), 2);
    EXPECT_EQ(report.count(CellClass::Neutrophil), 1);
    EXPECT_EQ(report.count(CellClass::Monocyte), 1);
}

TEST(Pipeline, BackgroundOnly)
{
    FieldSpec spec;
    spec.seed = 8;
    EXPECT_EQ(count_field(generate(spec).image, PipelineConfig{}).total(), 0);
    EXPECT_EQ(count_field(RgbImage(32, 32, 200, 200, 200), PipelineConfig{}).total(), 0);
}

TEST(Pipeline, TouchingPairsAreCountedSeparately)
{
    FieldSpec spec;
    spec.width = 200;
    spec.height = 160;
    spec.seed = 3;
    spec.cells = {{CellClass::Lymphocyte, {80, 80}, 10, 0, 1}, {CellClass::Neutrophil, {101, 80}, 10, 1, 0}};
    const auto field = generate(spec);
    const auto report = count_field(field.image, PipelineConfig{});
    EXPECT_TRUE(report.matches(field.truth)) << report.to_json().dump();
}

TEST(Pipeline, RecordsInRasterOrder)
{
    const auto report = count_field(generate(five_cell_field_spec()).image, PipelineConfig{});
    ASSERT_EQ(static_cast<int>(report.cells.size()), report.total());
    for (std::size_t i = 1; i < report.cells.size(); ++i) {
        EXPECT_LE(report.cells[i - 1].bbox.min_y, report.cells[i].bbox.min_y);
    }
}

TEST(Pipeline, Deterministic)
{
    const auto img = generate(five_cell_field_spec()).image;
    const Pipeline p{PipelineConfig{}};
    EXPECT_EQ(p.count(img).to_json().dump(), p.count(img).to_json().dump());
}

TEST(Pipeline, StagesFollowTheChain)
{
    PipelineConfig cfg;
    cfg.sharpen = false;
    const auto img = generate(two_cell_field_spec()).image;
    const auto s = Pipeline(cfg).run_stages(img);
    EXPECT_EQ(s.enhanced, img);
    const GrayImage hp = hue_highpass(convert_image(img), cfg.hue_cutoff, cfg.s_min);
    EXPECT_EQ(s.highpass, hp);
    EXPECT_EQ(s.threshold, isodata_threshold(hp, cfg.threshold_params()));
    EXPECT_EQ(s.binary, to_binary(hp, s.threshold));
}

TEST(Pipeline, SharpenSwitchOnlyTouchesEnhancement)
{
    // Sharpening is the identity on a constant image.
    const RgbImage img(40, 30, 90, 50, 190);
    PipelineConfig off;
    off.sharpen = false;
    const auto a = Pipeline(PipelineConfig{}).run_stages(img);
    const auto b = Pipeline(off).run_stages(img);
    EXPECT_EQ(a.enhanced, b.enhanced);
    EXPECT_EQ(a.highpass, b.highpass);
    EXPECT_EQ(a.binary, b.binary);
    EXPECT_EQ(a.valid_labels, b.valid_labels);
}

TEST(Overlay, EmptyReportIsIdentity)
{
    const auto img = generate(two_cell_field_spec()).image;
    EXPECT_EQ(render_overlay(img, DifferentialReport{}), img);
}

TEST(Overlay, OneBoxPerCell)
{
    const auto report = count_field(generate(five_cell_field_spec()).image, PipelineConfig{});
    ASSERT_EQ(report.total(), 5);
    const RgbImage out = render_overlay(RgbImage(320, 240), report);
    BinaryMask drawn(320, 240);
    for (std::size_t i = 0; i < drawn.size(); ++i) {
        drawn.values()[i] = out.r.values()[i] + out.g.values()[i] + out.b.values()[i] > 0 ? 1 : 0;
    }
    EXPECT_EQ(label(drawn, Connectivity::Eight).count, 5);
}

TEST(RunBatch, EmptyList)
{
    const auto summary = run_batch({}, PipelineConfig{});
    EXPECT_TRUE(summary.fields.empty());
    EXPECT_EQ(summary.failed(), 0);
    EXPECT_FALSE(summary.accuracy());
}

TEST(RunBatch, CorruptFileIsRecorded)
{
    const fs::path dir = fresh_dir("wbc_batch_corrupt");
    save(generate(five_cell_field_spec()), dir / "a.png");
    save(generate(two_cell_field_spec()), dir / "c.png");
    std::ofstream(dir / "b.png") << "not a png";
    const fs::path out = dir / "out";

    BatchOptions options;
    options.out_dir = out;
    options.overlay = true;
    const auto summary = run_batch({dir / "c.png", dir / "b.png", dir / "a.png"}, PipelineConfig{}, options);
    ASSERT_EQ(summary.fields.size(), 3u);
    EXPECT_EQ(summary.fields[0].input.filename(), "a.png");
    EXPECT_EQ(summary.failed(), 1);
    EXPECT_TRUE(summary.fields[1].failed());
    EXPECT_FALSE(summary.fields[1].error.empty());
    EXPECT_EQ(summary.evaluated(), 2);
    EXPECT_EQ(summary.accuracy().value_or(0.0), 1.0);

    EXPECT_TRUE(fs::exists(out / "a.json"));
    EXPECT_TRUE(fs::exists(out / "c.json"));
    EXPECT_FALSE(fs::exists(out / "b.json"));
    EXPECT_TRUE(fs::exists(out / "a_overlay.png"));
    EXPECT_TRUE(fs::exists(out / "summary.json"));

    std::ifstream in(out / "summary.json");
    const auto j = nlohmann::ordered_json::parse(in);
    EXPECT_EQ(j.at("failed"), 1);
    EXPECT_EQ(j.at("totals").at("total_wbc"), 7);
}

TEST(RunBatch, BadSidecarIsAWarning)
{
    const fs::path dir = fresh_dir("wbc_batch_sidecar");
    const auto f = generate(two_cell_field_spec());
    write_png(dir / "x.png", f.image);
    std::ofstream(truth_sidecar(dir / "x.png")) << "{]";
    const auto summary = run_batch({dir / "x.png"}, PipelineConfig{});
    EXPECT_EQ(summary.failed(), 0);
    EXPECT_FALSE(summary.fields[0].truth_error.empty());
    EXPECT_EQ(summary.evaluated(), 0);
}
