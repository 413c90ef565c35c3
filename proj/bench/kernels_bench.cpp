// Parallel kernels against their serial references on a 1024x768 field.
#include <benchmark/benchmark.h>

#include "wbc/binarize.hpp"
#include "wbc/colorspace.hpp"
#include "wbc/enhance.hpp"
#include "wbc/pipeline.hpp"
#include "wbc/reference.hpp"
#include "wbc/regions.hpp"
#include "wbc/synth.hpp"

namespace {

const wbc::RgbImage& field()
{
    static const wbc::RgbImage img = [] {
        wbc::SuiteOptions options;
        options.width = 1024;
        options.height = 768;
        options.min_cells = 12;
        options.max_cells = 12;
        options.background.rbc_count = 200;
        return wbc::generate_suite(1, wbc::default_mix(), 99, options).front().image;
    }();
    return img;
}

const wbc::BinaryMask& nuclei()
{
    static const wbc::BinaryMask mask = [] {
        const auto hp = wbc::hue_highpass(wbc::convert_image(field()), 150.0, 0.15);
        return wbc::to_binary(hp, wbc::isodata_threshold(hp));
    }();
    return mask;
}

void BM_Sharpen(benchmark::State& state)
{
    for (auto _ : state) {
        benchmark::DoNotOptimize(wbc::sharpen(field()));
    }
}

void BM_SharpenReference(benchmark::State& state)
{
    const auto k = wbc::LaplacianKernel::four_neighbor();
    for (auto _ : state) {
        benchmark::DoNotOptimize(wbc::reference::sharpen(field(), k));
    }
}

void BM_ConvertImage(benchmark::State& state)
{
    for (auto _ : state) {
        benchmark::DoNotOptimize(wbc::convert_image(field()));
    }
}

void BM_ConvertImageReference(benchmark::State& state)
{
    for (auto _ : state) {
        benchmark::DoNotOptimize(wbc::reference::convert_image(field()));
    }
}

void BM_HueHighpass(benchmark::State& state)
{
    const auto hsi = wbc::convert_image(field());
    for (auto _ : state) {
        benchmark::DoNotOptimize(wbc::hue_highpass(hsi, 150.0, 0.15));
    }
}

void BM_HueHighpassReference(benchmark::State& state)
{
    const auto hsi = wbc::convert_image(field());
    for (auto _ : state) {
        benchmark::DoNotOptimize(wbc::reference::hue_highpass(hsi, 150.0, 0.15));
    }
}

void BM_Dilate(benchmark::State& state)
{
    const auto se = wbc::StructuringElement::square(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(wbc::dilate(nuclei(), se));
    }
}

void BM_DilateReference(benchmark::State& state)
{
    const auto se = wbc::StructuringElement::square(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(wbc::reference::dilate(nuclei(), se));
    }
}

void BM_CountField(benchmark::State& state)
{
    const wbc::Pipeline pipeline{wbc::PipelineConfig{}};
    for (auto _ : state) {
        benchmark::DoNotOptimize(pipeline.count(field()));
    }
}

}  // namespace

BENCHMARK(BM_Sharpen)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SharpenReference)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ConvertImage)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ConvertImageReference)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HueHighpass)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HueHighpassReference)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Dilate)->Arg(1)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DilateReference)->Arg(1)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CountField)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
