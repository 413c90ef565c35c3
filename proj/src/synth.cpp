#include "wbc/synth.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <stdexcept>
#include <utility>

#include "wbc/regions.hpp"

namespace wbc {

namespace {

struct Rgb {
    double r, g, b;
};

// Reddish colours all have g - b == 40.
constexpr Rgb kPlasma{245, 222, 182};
constexpr Rgb kRedCell{222, 150, 110};
constexpr Rgb kRedCellPallor{236, 182, 142};
constexpr Rgb kEosinophilCytoplasm{230, 90, 50};

constexpr Rgb kNucleus{90, 50, 190};
constexpr Rgb kWhiteCytoplasm{240, 236, 240};
constexpr Rgb kPaleCytoplasm{228, 226, 236};
constexpr Rgb kBasophilCytoplasm{120, 140, 220};
// Brighter than the cytoplasm around it, so sharpening pushes the contact
// line towards white instead of into the nucleus hue range.
constexpr Rgb kSeam{242, 240, 244};

constexpr int kCytoplasmMargin = 7;

std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Portable draws; the standard distributions are implementation-defined.
double unit(std::mt19937_64& rng)
{
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

int uniform_int(std::mt19937_64& rng, int lo, int hi)
{
    return lo + static_cast<int>(unit(rng) * static_cast<double>(hi - lo + 1));
}

double nucleus_extent(const CellSpec& c)
{
    switch (c.cls) {
    case CellClass::Monocyte: return 1.4 * c.nucleus_radius;
    case CellClass::Lymphocyte:
    case CellClass::Unknown: return c.nucleus_radius;
    default: return c.nucleus_radius + 2.0;
    }
}

int cell_radius(const CellSpec& c)
{
    return static_cast<int>(std::ceil(nucleus_extent(c))) + kCytoplasmMargin;
}

Rgb cytoplasm_color(CellClass c)
{
    switch (c) {
    case CellClass::Neutrophil: return kWhiteCytoplasm;
    case CellClass::Eosinophil: return kEosinophilCytoplasm;
    case CellClass::Basophil: return kBasophilCytoplasm;
    default: return kPaleCytoplasm;
    }
}

bool is_granulocyte(CellClass c)
{
    return c == CellClass::Neutrophil || c == CellClass::Eosinophil || c == CellClass::Basophil;
}

BinaryMask nucleus_mask(const CellSpec& c, int width, int height)
{
    BinaryMask mask(width, height);
    const int reach = static_cast<int>(std::ceil(nucleus_extent(c))) + 1;
    const double r = c.nucleus_radius;
    for (int dy = -reach; dy <= reach; ++dy) {
        for (int dx = -reach; dx <= reach; ++dx) {
            const int x = c.center.x + dx;
            const int y = c.center.y + dy;
            if (!mask.contains(x, y)) {
                continue;
            }
            bool inside = false;
            if (c.cls == CellClass::Monocyte) {
                const bool horizontal = c.orientation % 2 == 0;
                const double a = horizontal ? 1.4 * r : 0.8 * r;
                const double b = horizontal ? 0.8 * r : 1.4 * r;
                inside = (dx * dx) / (a * a) + (dy * dy) / (b * b) <= 1.0;
            } else if (is_granulocyte(c.cls)) {
                // Horseshoe: an annulus with a quarter-turn gap.
                const double outer = r + 2.0;
                const double inner = 0.5 * outer;
                const double d = std::hypot(dx, dy);
                if (d >= inner && d <= outer) {
                    const double gap = (c.orientation % 4) * std::numbers::pi / 2.0;
                    double delta = std::atan2(dy, dx) - gap;
                    delta = std::remainder(delta, 2.0 * std::numbers::pi);
                    inside = std::abs(delta) >= std::numbers::pi / 4.0;
                }
            } else {
                inside = dx * dx + dy * dy <= r * r;
            }
            if (inside) {
                mask(x, y) = 1;
            }
        }
    }
    return mask;
}

void fill_disc(RgbImage& img, double cx, double cy, double radius, Rgb color)
{
    const int x0 = std::max(0, static_cast<int>(std::floor(cx - radius)));
    const int x1 = std::min(img.width() - 1, static_cast<int>(std::ceil(cx + radius)));
    const int y0 = std::max(0, static_cast<int>(std::floor(cy - radius)));
    const int y1 = std::min(img.height() - 1, static_cast<int>(std::ceil(cy + radius)));
    for (int y = y0; y <= y1; ++y) {
        for (int x = x0; x <= x1; ++x) {
            if ((x - cx) * (x - cx) + (y - cy) * (y - cy) <= radius * radius) {
                img.set(x, y, color.r, color.g, color.b);
            }
        }
    }
}

void fill_mask(RgbImage& img, const BinaryMask& mask, Rgb color)
{
    for (int y = 0; y < mask.height(); ++y) {
        for (int x = 0; x < mask.width(); ++x) {
            if (mask(x, y)) {
                img.set(x, y, color.r, color.g, color.b);
            }
        }
    }
}

double distance(Point a, Point b)
{
    return std::hypot(static_cast<double>(a.x - b.x), static_cast<double>(a.y - b.y));
}

std::vector<std::pair<int, int>> partner_pairs(const FieldSpec& spec)
{
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < static_cast<int>(spec.cells.size()); ++i) {
        if (const auto p = spec.cells[i].overlap_partner) {
            const std::pair<int, int> pair{std::min(i, *p), std::max(i, *p)};
            if (std::find(pairs.begin(), pairs.end(), pair) == pairs.end()) {
                pairs.push_back(pair);
            }
        }
    }
    return pairs;
}

}  // namespace

int GroundTruth::total() const
{
    return std::accumulate(counts.begin(), counts.end(), 0);
}

void FieldSpec::validate() const
{
    if (width < 16 || height < 16) {
        throw std::invalid_argument("field must be at least 16x16");
    }
    if (background.noise_amplitude < 0 || background.noise_amplitude > 10) {
        throw std::invalid_argument("noise amplitude must lie in [0, 10]");
    }
    if (background.rbc_count < 0 || background.rbc_radius_min < 2 ||
        background.rbc_radius_max < background.rbc_radius_min) {
        throw std::invalid_argument("invalid red cell parameters");
    }
    const auto pairs = partner_pairs(*this);
    const int n = static_cast<int>(cells.size());
    for (int i = 0; i < n; ++i) {
        const CellSpec& c = cells[i];
        if (c.cls == CellClass::Unknown) {
            throw std::invalid_argument("cell " + std::to_string(i) + ": cannot render class unknown");
        }
        if (c.nucleus_radius < 4 || c.nucleus_radius > 40) {
            throw std::invalid_argument("cell " + std::to_string(i) + ": nucleus radius outside [4, 40]");
        }
        const int reach = cell_radius(c);
        if (c.center.x - reach < 0 || c.center.y - reach < 0 || c.center.x + reach >= width ||
            c.center.y + reach >= height) {
            throw std::invalid_argument("cell " + std::to_string(i) + ": does not fit inside the field");
        }
        if (c.overlap_partner && (*c.overlap_partner < 0 || *c.overlap_partner >= n || *c.overlap_partner == i)) {
            throw std::invalid_argument("cell " + std::to_string(i) + ": invalid overlap partner");
        }
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double d = distance(cells[i].center, cells[j].center);
            const bool partners = std::find(pairs.begin(), pairs.end(), std::pair{i, j}) != pairs.end();
            if (partners) {
                const double reach = nucleus_extent(cells[i]) + nucleus_extent(cells[j]);
                if (d < 0.6 * reach || d > reach) {
                    throw std::invalid_argument("cells " + std::to_string(i) + " and " + std::to_string(j) +
                                                ": partner nuclei must touch without stacking");
                }
            } else if (d < cell_radius(cells[i]) + cell_radius(cells[j])) {
                throw std::invalid_argument("cells " + std::to_string(i) + " and " + std::to_string(j) + " collide");
            }
        }
    }
}

SyntheticField generate(const FieldSpec& spec)
{
    spec.validate();
    std::mt19937_64 rng(splitmix64(spec.seed));
    RgbImage img(spec.width, spec.height, kPlasma.r, kPlasma.g, kPlasma.b);

    for (int k = 0; k < spec.background.rbc_count; ++k) {
        for (int attempt = 0; attempt < 50; ++attempt) {
            const int radius = uniform_int(rng, spec.background.rbc_radius_min, spec.background.rbc_radius_max);
            const Point c{uniform_int(rng, 0, spec.width - 1), uniform_int(rng, 0, spec.height - 1)};
            const bool clear = std::all_of(spec.cells.begin(), spec.cells.end(), [&](const CellSpec& cell) {
                return distance(c, cell.center) >= cell_radius(cell) + radius + 3;
            });
            if (clear) {
                fill_disc(img, c.x, c.y, radius, kRedCell);
                fill_disc(img, c.x, c.y, 0.45 * radius, kRedCellPallor);
                break;
            }
        }
    }

    std::vector<BinaryMask> nuclei;
    nuclei.reserve(spec.cells.size());
    for (const CellSpec& cell : spec.cells) {
        fill_disc(img, cell.center.x, cell.center.y, cell_radius(cell), cytoplasm_color(cell.cls));
        nuclei.push_back(nucleus_mask(cell, spec.width, spec.height));
    }
    const auto pairs = partner_pairs(spec);
    // Touching cells split their shared cytoplasm by the nearer nucleus.
    for (const auto& [i, j] : pairs) {
        const CellSpec& a = spec.cells[i];
        const CellSpec& b = spec.cells[j];
        for (int y = 0; y < spec.height; ++y) {
            for (int x = 0; x < spec.width; ++x) {
                const double ra = distance({x, y}, a.center);
                const double rb = distance({x, y}, b.center);
                if (ra <= cell_radius(a) && rb <= cell_radius(b)) {
                    const Rgb c = cytoplasm_color(ra - nucleus_extent(a) <= rb - nucleus_extent(b) ? a.cls : b.cls);
                    img.set(x, y, c.r, c.g, c.b);
                }
            }
        }
    }
    // Basophil granules leave a pale rim around the nucleus; a touching
    // partner gets one too so the blue cytoplasm never meets its nucleus.
    std::vector<bool> halo(spec.cells.size());
    for (std::size_t i = 0; i < spec.cells.size(); ++i) {
        halo[i] = halo[i] || spec.cells[i].cls == CellClass::Basophil;
    }
    for (const auto& [i, j] : pairs) {
        const bool any = halo[i] || halo[j];
        halo[i] = any;
        halo[j] = any;
    }
    for (std::size_t i = 0; i < spec.cells.size(); ++i) {
        if (halo[i]) {
            fill_mask(img, ring_mask(nuclei[i], StructuringElement::square(1)), kWhiteCytoplasm);
        }
    }
    GroundTruth truth;
    BinaryMask stained(spec.width, spec.height);
    for (std::size_t i = 0; i < spec.cells.size(); ++i) {
        fill_mask(img, nuclei[i], kNucleus);
        for (std::size_t k = 0; k < stained.size(); ++k) {
            stained.values()[k] |= nuclei[i].values()[k];
        }
        ++truth.counts[static_cast<std::size_t>(spec.cells[i].cls)];
        truth.boxes.push_back(region_from_mask(nuclei[i]).bbox);
    }
    for (const auto& [i, j] : pairs) {
        const CellSpec& a = spec.cells[i];
        const CellSpec& b = spec.cells[j];
        for (int y = 0; y < spec.height; ++y) {
            for (int x = 0; x < spec.width; ++x) {
                if (!nuclei[i](x, y) && !nuclei[j](x, y)) {
                    continue;
                }
                const double da = distance({x, y}, a.center) - nucleus_extent(a);
                const double db = distance({x, y}, b.center) - nucleus_extent(b);
                if (std::abs(da - db) <= 2.0) {
                    img.set(x, y, kSeam.r, kSeam.g, kSeam.b);
                    stained(x, y) = 0;
                }
            }
        }
    }

    const int amp = spec.background.noise_amplitude;
    if (amp > 0) {
        for (int y = 0; y < spec.height; ++y) {
            for (int x = 0; x < spec.width; ++x) {
                const double n = uniform_int(rng, -amp, amp);
                img.set(x, y, std::clamp(img.r(x, y) + n, 0.0, 255.0), std::clamp(img.g(x, y) + n, 0.0, 255.0),
                        std::clamp(img.b(x, y) + n, 0.0, 255.0));
            }
        }
    }
    return {std::move(img), std::move(truth), std::move(stained)};
}

ClassMix default_mix()
{
    ClassMix mix{60.0, 30.0, 5.0, 2.0, 0.7};
    const double sum = std::accumulate(mix.begin(), mix.end(), 0.0);
    for (double& m : mix) {
        m /= sum;
    }
    return mix;
}

std::vector<FieldSpec> suite_specs(int n, const ClassMix& mix, std::uint64_t seed, const SuiteOptions& options)
{
    if (n < 0) {
        throw std::invalid_argument("suite size must be >= 0");
    }
    if (std::any_of(mix.begin(), mix.end(), [](double m) { return !(m >= 0.0); }) ||
        std::abs(std::accumulate(mix.begin(), mix.end(), 0.0) - 1.0) > 1e-6) {
        throw std::invalid_argument("class mix must be non-negative and sum to 1");
    }
    if (options.min_cells < 0 || options.max_cells < options.min_cells) {
        throw std::invalid_argument("invalid cells-per-field range");
    }
    if (!(options.pair_probability >= 0.0 && options.pair_probability <= 1.0)) {
        throw std::invalid_argument("pair probability must lie in [0, 1]");
    }
    constexpr std::array<CellClass, 5> classes{CellClass::Neutrophil, CellClass::Lymphocyte, CellClass::Monocyte,
                                               CellClass::Eosinophil, CellClass::Basophil};
    const auto draw_class = [&mix, &classes](std::mt19937_64& rng) {
        const double u = unit(rng);
        double acc = 0.0;
        for (std::size_t c = 0; c < classes.size(); ++c) {
            acc += mix[c];
            if (u < acc) {
                return classes[c];
            }
        }
        return classes.back();
    };
    // Clear of every placed cell except `skip`.
    const auto clear_of = [](const std::vector<CellSpec>& cells, const CellSpec& cell, std::size_t skip) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i != skip && distance(cell.center, cells[i].center) < cell_radius(cell) + cell_radius(cells[i]) + 4) {
                return false;
            }
        }
        return true;
    };
    std::vector<FieldSpec> specs(static_cast<std::size_t>(n));
    for (int f = 0; f < n; ++f) {
        FieldSpec& spec = specs[f];
        spec.width = options.width;
        spec.height = options.height;
        spec.background = options.background;
        spec.seed = splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(f)));
        std::mt19937_64 rng(spec.seed);
        const int wanted = uniform_int(rng, options.min_cells, options.max_cells);
        for (int k = 0; k < wanted; ++k) {
            CellSpec cell;
            cell.cls = draw_class(rng);
            cell.nucleus_radius = uniform_int(rng, 9, 12);
            cell.orientation = uniform_int(rng, 0, 3);
            const int reach = cell_radius(cell);
            if (2 * reach >= spec.width || 2 * reach >= spec.height) {
                continue;
            }
            bool placed = false;
            for (int attempt = 0; attempt < 200 && !placed; ++attempt) {
                cell.center = {uniform_int(rng, reach, spec.width - 1 - reach),
                               uniform_int(rng, reach, spec.height - 1 - reach)};
                placed = clear_of(spec.cells, cell, spec.cells.size());
                if (placed) {
                    spec.cells.push_back(cell);
                }
            }
            if (!placed || k + 1 >= wanted || unit(rng) >= options.pair_probability) {
                continue;
            }
            // A touching partner, placed just inside contact distance.
            const std::size_t first = spec.cells.size() - 1;
            CellSpec partner;
            partner.cls = draw_class(rng);
            partner.nucleus_radius = uniform_int(rng, 9, 12);
            partner.orientation = uniform_int(rng, 0, 3);
            partner.overlap_partner = static_cast<int>(first);
            const double d =
                (0.85 + 0.15 * unit(rng)) * (nucleus_extent(spec.cells[first]) + nucleus_extent(partner));
            const int preach = cell_radius(partner);
            for (int attempt = 0; attempt < 24; ++attempt) {
                const double angle = 2.0 * std::numbers::pi * unit(rng);
                partner.center = {spec.cells[first].center.x + static_cast<int>(std::lround(d * std::cos(angle))),
                                  spec.cells[first].center.y + static_cast<int>(std::lround(d * std::sin(angle)))};
                const double actual = distance(partner.center, spec.cells[first].center);
                const double touch = nucleus_extent(spec.cells[first]) + nucleus_extent(partner);
                const bool inside = partner.center.x >= preach && partner.center.y >= preach &&
                                    partner.center.x < spec.width - preach && partner.center.y < spec.height - preach;
                if (inside && actual >= 0.85 * touch && actual <= touch && clear_of(spec.cells, partner, first)) {
                    spec.cells[first].overlap_partner = static_cast<int>(spec.cells.size());
                    spec.cells.push_back(partner);
                    ++k;
                    break;
                }
            }
        }
    }
    return specs;
}

std::vector<SyntheticField> generate_suite(int n, const ClassMix& mix, std::uint64_t seed,
                                           const SuiteOptions& options)
{
    const auto specs = suite_specs(n, mix, seed, options);
    std::vector<SyntheticField> fields(specs.size());
    const auto count = static_cast<std::ptrdiff_t>(specs.size());
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
        fields[i] = generate(specs[i]);
    }
    return fields;
}

FieldSpec five_cell_field_spec()
{
    FieldSpec spec;
    spec.width = 320;
    spec.height = 240;
    spec.seed = 13;
    spec.cells = {
        {CellClass::Neutrophil, {60, 60}, 10, 0, std::nullopt},
        {CellClass::Neutrophil, {250, 70}, 11, 2, std::nullopt},
        {CellClass::Eosinophil, {160, 120}, 10, 1, std::nullopt},
        {CellClass::Monocyte, {70, 180}, 10, 0, std::nullopt},
        {CellClass::Lymphocyte, {250, 180}, 10, 0, std::nullopt},
    };
    return spec;
}

FieldSpec two_cell_field_spec()
{
    FieldSpec spec;
    spec.width = 256;
    spec.height = 192;
    spec.seed = 15;
    spec.cells = {
        {CellClass::Neutrophil, {70, 90}, 11, 3, std::nullopt},
        {CellClass::Monocyte, {180, 100}, 10, 1, std::nullopt},
    };
    return spec;
}

nlohmann::ordered_json to_json(const FieldSpec& spec)
{
    nlohmann::ordered_json cells = nlohmann::ordered_json::array();
    for (const CellSpec& c : spec.cells) {
        nlohmann::ordered_json cell;
        cell["class"] = to_string(c.cls);
        cell["center"] = {c.center.x, c.center.y};
        cell["nucleus_radius"] = c.nucleus_radius;
        cell["orientation"] = c.orientation;
        cell["overlap_partner"] = c.overlap_partner ? nlohmann::ordered_json(*c.overlap_partner) : nlohmann::ordered_json(nullptr);
        cells.push_back(cell);
    }
    nlohmann::ordered_json j;
    j["width"] = spec.width;
    j["height"] = spec.height;
    j["seed"] = spec.seed;
    j["background"] = {{"rbc_count", spec.background.rbc_count},
                       {"rbc_radius_min", spec.background.rbc_radius_min},
                       {"rbc_radius_max", spec.background.rbc_radius_max},
                       {"noise_amplitude", spec.background.noise_amplitude}};
    j["cells"] = cells;
    return j;
}

FieldSpec field_spec_from_json(const nlohmann::ordered_json& j)
{
    FieldSpec spec;
    spec.width = j.value("width", spec.width);
    spec.height = j.value("height", spec.height);
    spec.seed = j.value("seed", spec.seed);
    if (j.contains("background")) {
        const auto& bg = j.at("background");
        spec.background.rbc_count = bg.value("rbc_count", spec.background.rbc_count);
        spec.background.rbc_radius_min = bg.value("rbc_radius_min", spec.background.rbc_radius_min);
        spec.background.rbc_radius_max = bg.value("rbc_radius_max", spec.background.rbc_radius_max);
        spec.background.noise_amplitude = bg.value("noise_amplitude", spec.background.noise_amplitude);
    }
    for (const auto& c : j.value("cells", nlohmann::ordered_json::array())) {
        CellSpec cell;
        cell.cls = cell_class_from_string(c.at("class").get<std::string>());
        cell.center = {c.at("center").at(0).get<int>(), c.at("center").at(1).get<int>()};
        cell.nucleus_radius = c.value("nucleus_radius", cell.nucleus_radius);
        cell.orientation = c.value("orientation", 0);
        if (c.contains("overlap_partner") && !c.at("overlap_partner").is_null()) {
            cell.overlap_partner = c.at("overlap_partner").get<int>();
        }
        spec.cells.push_back(cell);
    }
    return spec;
}

nlohmann::ordered_json to_json(const GroundTruth& truth)
{
    nlohmann::ordered_json j;
    j["total_wbc"] = truth.total();
    for (const CellClass c : kAllCellClasses) {
        j[count_key(c)] = truth.count(c);
    }
    nlohmann::ordered_json boxes = nlohmann::ordered_json::array();
    for (const BBox& b : truth.boxes) {
        boxes.push_back({b.min_x, b.min_y, b.max_x, b.max_y});
    }
    j["boxes"] = boxes;
    return j;
}

GroundTruth ground_truth_from_json(const nlohmann::ordered_json& j)
{
    GroundTruth truth;
    for (const CellClass c : kAllCellClasses) {
        truth.counts[static_cast<std::size_t>(c)] = j.value(count_key(c), 0);
    }
    if (j.contains("total_wbc") && j.at("total_wbc").get<int>() != truth.total()) {
        throw std::invalid_argument("ground truth total_wbc disagrees with the class counts");
    }
    for (const auto& b : j.value("boxes", nlohmann::ordered_json::array())) {
        truth.boxes.push_back({b.at(0).get<int>(), b.at(1).get<int>(), b.at(2).get<int>(), b.at(3).get<int>()});
    }
    return truth;
}

}  // namespace wbc
