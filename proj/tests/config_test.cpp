#include <filesystem>
#include <fstream>

#include <gtest/gtest.h>

#include "wbc/config.hpp"

using namespace wbc;
namespace fs = std::filesystem;

TEST(PipelineConfig, DefaultsAreValid)
{
    const PipelineConfig c;
    EXPECT_NO_THROW(c.validate());
    EXPECT_EQ(c.hue_cutoff, 150.0);
    EXPECT_EQ(c.validity_factor, 0.85);
    EXPECT_EQ(c.connectivity_mode(), Connectivity::Eight);
}

TEST(PipelineConfig, JsonRoundTrip)
{
    PipelineConfig c;
    c.kernel = "eight";
    c.min_area = 12;
    c.se_shape = "disc";
    const auto j = c.to_json();
    EXPECT_EQ(PipelineConfig::from_json(j).to_json(), j);
}

TEST(PipelineConfig, PartialObjectKeepsDefaults)
{
    const auto c = PipelineConfig::from_json(nlohmann::ordered_json::parse(R"({"min_area": 50})"));
    EXPECT_EQ(c.min_area, 50);
    EXPECT_EQ(c.hue_cutoff, 150.0);
}

TEST(PipelineConfig, RejectsUnknownKeysAndBadValues)
{
    using nlohmann::ordered_json;
    EXPECT_THROW(PipelineConfig::from_json(ordered_json::parse(R"({"hue_cutof": 150})")), ConfigError);
    EXPECT_THROW(PipelineConfig::from_json(ordered_json::parse(R"({"connectivity": 6})")), ConfigError);
    EXPECT_THROW(PipelineConfig::from_json(ordered_json::parse(R"({"validity_factor": 1.5})")), ConfigError);
    EXPECT_THROW(PipelineConfig::from_json(ordered_json::parse(R"({"min_area": "big"})")), ConfigError);
    EXPECT_THROW(PipelineConfig::from_json(ordered_json::parse(R"([1, 2])")), ConfigError);
}

TEST(PipelineConfig, LoadResolvesTablesNextToFile)
{
    const fs::path dir = fs::temp_directory_path() / "wbc_config_test";
    fs::create_directories(dir);
    std::ofstream(dir / "blue.txt") << "200 0\n240 1\n260 0\n";
    std::ofstream(dir / "config.json") << R"({"blue_set_path": "blue.txt"})";
    const auto c = PipelineConfig::load(dir / "config.json");
    EXPECT_EQ(c.classify_params().blue_set.max_x(), 260.0);

    std::ofstream(dir / "broken.json") << "{ not json";
    EXPECT_THROW(PipelineConfig::load(dir / "broken.json"), ConfigError);
    EXPECT_THROW(PipelineConfig::load(dir / "absent.json"), ConfigError);

    std::ofstream(dir / "missing_table.json") << R"({"red_set_path": "nope.txt"})";
    EXPECT_THROW(PipelineConfig::load(dir / "missing_table.json").classify_params(), ConfigError);
}
