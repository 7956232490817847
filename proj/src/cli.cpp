// Copyright 2026 The qblur Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qblur/cli.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "qblur/blurcore.hpp"
#include "qblur/errors.hpp"
#include "qblur/image_io.hpp"
#include "qblur/terrain.hpp"

namespace qblur::cli {

namespace {

constexpr double kPi = std::numbers::pi;

// Flags shared by every subcommand that decodes a circuit.
struct DecodeFlags {
    bool log = false;
    bool linear = false;
    double decades = 5.0;
    bool exact = false;
    bool sampled = false;
    std::uint64_t shots = 0;
    std::uint64_t seed = 0;

    void attach(CLI::App *app, bool default_log) {
        auto *log_opt = app->add_flag("--log", log, default_log ? "Logarithmic display (default)" : "Logarithmic display");
        auto *lin_opt = app->add_flag("--linear", linear, default_log ? "Linear display" : "Linear display (default)");
        log_opt->excludes(lin_opt);
        app->add_option("--decades", decades, "Decades shown by the logarithmic display")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
        auto *exact_opt = app->add_flag("--exact", exact, "Read probabilities directly (default)");
        auto *shots_opt = app->add_option("--shots", shots, "Estimate from N sampled shots")->check(CLI::PositiveNumber);
        auto *sampled_opt = app->add_flag("--sampled", sampled, "Estimate from 4^n sampled shots");
        exact_opt->excludes(shots_opt)->excludes(sampled_opt);
        shots_opt->excludes(sampled_opt);
        app->add_option("--seed", seed, "RNG seed")->capture_default_str();
        default_log_ = default_log;
    }

    DecodeOptions options() const {
        DecodeOptions o;
        o.display = (log || (default_log_ && !linear)) ? DisplayTransform::logarithmic : DisplayTransform::linear;
        o.log_decades = decades;
        o.seed = seed;
        if (shots > 0 || sampled) {
            o.mode = DecodeMode::sampled;
            if (shots > 0) o.shots = shots;
        }
        return o;
    }

   private:
    bool default_log_ = false;
};

struct BlurArgs {
    std::string input;
    std::string output;
    double theta = 0.0;
    DecodeFlags decode;
};

struct TransitionArgs {
    std::string input_a;
    std::string input_b;
    std::size_t frames = 8;
    std::string pattern;
    std::string pattern_b;
    DecodeFlags decode;
};

struct TerrainArgs {
    std::string output;
    std::string layout;
    std::string cells;
    std::string height;
    std::uint32_t size = 200;
    std::uint64_t seed = 0;
    double theta = 0.15 * kPi;
    std::size_t variants = 100;
    std::size_t attempts = terrain::PlacementSpec{}.attempts;
    std::uint32_t bands = 5;
    std::uint32_t seed_size = 16;
    std::uint32_t seed_points = terrain::SeedSpec{}.point_count;
    std::string combine = "max";
    bool linear = false;
    double decades = 3.0;
};

struct GhzArgs {
    std::uint32_t size = 4;
    std::vector<double> thetas{0.0, 0.1 * kPi, 0.2 * kPi, 0.3 * kPi, 0.4 * kPi, 0.5 * kPi};
    bool include_pi = false;
    std::string pattern;
    double decades = 5.0;
};

HeightMap load_gray(const std::string &path, std::ostream &err) {
    const auto img = io::read_pnm(path);
    if (img.channels != 1) {
        throw std::invalid_argument(path + ": expected a graymap");
    }
    auto h = io::to_height_map(img);
    if (img.width != img.height) {
        err << "warning: " << path << " is " << img.width << "x" << img.height << "; zero-padding to a square\n";
    }
    return io::pad_to_square(h);
}

int cmd_blur(const BlurArgs &args, std::ostream &out, std::ostream &err) {
    const auto img = io::read_pnm(args.input);
    if (img.width != img.height) {
        err << "warning: " << args.input << " is " << img.width << "x" << img.height
            << "; zero-padding to a square\n";
    }
    const auto options = args.decode.options();
    if (img.channels == 1) {
        const auto height = io::pad_to_square(io::to_height_map(img));
        const auto mapping = make_grid(height.box().side(0));
        io::write_pnm(args.output, io::from_height_map(blur(height, args.theta, mapping, options)));
    } else {
        const auto color = io::to_color_image(img);
        ColorImage padded(io::pad_to_square(color.red), io::pad_to_square(color.green), io::pad_to_square(color.blue));
        const auto mapping = make_grid(padded.box().side(0));
        io::write_pnm(args.output, io::from_color_image(blur_color(padded, args.theta, mapping, options)));
    }
    out << "wrote " << args.output << "\n";
    return kExitOk;
}

int cmd_transition(const TransitionArgs &args, std::ostream &out, std::ostream &err) {
    if (args.frames < 2) {
        throw std::invalid_argument("--frames must be at least 2");
    }
    // Validate the patterns before doing any work.
    format_frame_path(args.pattern, 0);
    if (!args.pattern_b.empty()) format_frame_path(args.pattern_b, 0);

    const auto a = load_gray(args.input_a, err);
    const auto b = load_gray(args.input_b, err);
    if (!(a.box() == b.box())) {
        throw std::invalid_argument("transition inputs must have the same dimensions");
    }
    const auto mapping = make_grid(a.box().side(0));
    const auto options = args.decode.options();
    for (std::size_t k = 0; k < args.frames; ++k) {
        const double fraction = static_cast<double>(k) / static_cast<double>(args.frames - 1);
        const auto [frame_a, frame_b] = transition(a, b, fraction, mapping, options);
        io::write_pnm(format_frame_path(args.pattern, k), io::from_height_map(frame_a));
        if (!args.pattern_b.empty()) {
            io::write_pnm(format_frame_path(args.pattern_b, k), io::from_height_map(frame_b));
        }
    }
    out << "wrote " << args.frames << " frames\n";
    return kExitOk;
}

int cmd_terrain(const TerrainArgs &args, std::ostream &out) {
    if (args.combine != "max" && args.combine != "add") {
        throw std::invalid_argument("--combine must be 'max' or 'add'");
    }
    HeightMap layout = default_island_layout();
    if (!args.layout.empty()) {
        const auto img = io::read_pnm(args.layout);
        if (img.channels != 1) throw std::invalid_argument(args.layout + ": layout must be a graymap");
        layout = io::to_height_map(img);
    }

    const auto seed_image = terrain::random_seed_image({args.seed_size, args.seed_points, args.seed});
    DecodeOptions decode;
    decode.display = args.linear ? DisplayTransform::linear : DisplayTransform::logarithmic;
    decode.log_decades = args.decades;
    const auto textures = terrain::texture_variants(seed_image, args.theta, args.variants, args.seed + 1, decode);

    terrain::PlacementSpec placement;
    placement.attempts = args.attempts;
    placement.texture_variants = args.variants;
    placement.seed = args.seed + 2;
    placement.combine = args.combine == "max" ? terrain::Combine::max : terrain::Combine::clamped_add;
    const auto island = terrain::generate_island({layout, args.size, args.size}, textures, placement);

    io::write_pnm(args.output, io::from_color_image(terrain::colorize(island, terrain::default_palette())));
    if (!args.height.empty()) {
        io::write_pnm(args.height, io::from_height_map(island));
    }
    if (!args.cells.empty()) {
        std::ostringstream dump;
        char line[96];
        for (const auto &[coord, cell] : terrain::voxelize(island, args.bands)) {
            // Truncate so a residual just below 1 never prints as 1.000000.
            const double residual = std::floor(cell.residual * 1e6) / 1e6;
            std::snprintf(line, sizeof line, "%u %u %u %.6f %s\n", coord[0], coord[1], cell.level, residual,
                          cell.object == terrain::Feature::tree ? "tree" : "none");
            dump << line;
        }
        io::write_file_atomic(args.cells, dump.str());
    }
    out << "wrote " << args.output << "\n";
    return kExitOk;
}

int cmd_demo_ghz(const GhzArgs &args, std::ostream &out) {
    format_frame_path(args.pattern, 0);
    if (args.size < 2) throw std::invalid_argument("--size must be at least 2");
    const auto line = make_line(args.size);
    const std::uint64_t all_ones = (std::uint64_t{1} << line.width()) - 1;
    std::uint32_t corner = 0;
    while (corner < line.size() && line[corner].value() != all_ones) ++corner;
    if (corner >= args.size) {
        throw std::invalid_argument("--size " + std::to_string(args.size) +
                                    " leaves the all-ones bit string off the grid; try a power of two");
    }
    const auto mapping = make_grid(args.size);
    HeightMap ghz = HeightMap::square(args.size);
    ghz.set({0, 0}, 1.0);
    ghz.set({corner, corner}, 1.0);

    std::vector<double> thetas = args.thetas;
    if (args.include_pi) thetas.push_back(kPi);
    DecodeOptions options;
    options.display = DisplayTransform::logarithmic;
    options.log_decades = args.decades;
    for (std::size_t k = 0; k < thetas.size(); ++k) {
        io::write_pnm(format_frame_path(args.pattern, k), io::from_height_map(blur(ghz, thetas[k], mapping, options)));
    }
    out << "wrote " << thetas.size() << " frames\n";
    return kExitOk;
}

}  // namespace

std::string format_frame_path(const std::string &pattern, std::size_t index) {
    std::size_t conversions = 0;
    std::string out;
    for (std::size_t i = 0; i < pattern.size(); ++i) {
        if (pattern[i] != '%') {
            out.push_back(pattern[i]);
            continue;
        }
        if (i + 1 < pattern.size() && pattern[i + 1] == '%') {
            out.push_back('%');
            ++i;
            continue;
        }
        std::size_t j = i + 1;
        bool zero = false;
        if (j < pattern.size() && pattern[j] == '0') {
            zero = true;
            ++j;
        }
        std::size_t width = 0;
        while (j < pattern.size() && pattern[j] >= '0' && pattern[j] <= '9') width = width * 10 + (pattern[j++] - '0');
        if (j >= pattern.size() || pattern[j] != 'd' || width > 32) {
            throw std::invalid_argument("output pattern supports only %d or %0Nd: " + pattern);
        }
        std::string digits = std::to_string(index);
        if (digits.size() < width) digits.insert(0, width - digits.size(), zero ? '0' : ' ');
        out += digits;
        ++conversions;
        i = j;
    }
    if (conversions != 1) {
        throw std::invalid_argument("output pattern needs exactly one %d conversion: " + pattern);
    }
    return out;
}

HeightMap default_island_layout() {
    // Radial falloff around the centre of a 10 x 10 grid, quantized to tenths.
    HeightMap layout = HeightMap::square(10);
    for (std::uint32_t x = 0; x < 10; ++x) {
        for (std::uint32_t y = 0; y < 10; ++y) {
            const double dx = x - 4.5, dy = y - 4.5;
            const double r = std::sqrt(dx * dx + dy * dy) / 5.0;
            const double v = std::round(std::max(0.0, 1.0 - r * r) * 10.0) / 10.0;
            if (v > 0.0) layout.set({x, y}, v);
        }
    }
    return layout;
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Quantum blur: procedural generation from statevector interference", "qblur"};
    app.require_subcommand(1);

    BlurArgs blur_args;
    auto *blur_cmd = app.add_subcommand("blur", "Blur an image with RY(theta) on every qubit");
    blur_cmd->add_option("input", blur_args.input, "Input PGM/PPM")->required();
    blur_cmd->add_option("output", blur_args.output, "Output image")->required();
    blur_cmd->add_option("--theta", blur_args.theta, "Rotation angle in radians")->required();
    blur_args.decode.attach(blur_cmd, false);

    TransitionArgs tr_args;
    auto *tr_cmd = app.add_subcommand("transition", "Fractional-SWAP transition between two graymaps");
    tr_cmd->add_option("input_a", tr_args.input_a, "First image")->required();
    tr_cmd->add_option("input_b", tr_args.input_b, "Second image")->required();
    tr_cmd->add_option("--frames", tr_args.frames, "Frame count K (fractions k/(K-1))")->capture_default_str();
    tr_cmd->add_option("--output-pattern", tr_args.pattern, "Frame path with one %d, e.g. frame_%03d.pgm")->required();
    tr_cmd->add_option("--output-pattern-b", tr_args.pattern_b, "Also write register B frames");
    tr_args.decode.attach(tr_cmd, false);

    TerrainArgs te_args;
    auto *te_cmd = app.add_subcommand("terrain", "Generate a textured island");
    te_cmd->add_option("output", te_args.output, "Colorized island (PPM)")->required();
    te_cmd->add_option("--layout", te_args.layout, "Coarse layout graymap (default: built-in 10x10 island)");
    te_cmd->add_option("--size", te_args.size, "Island side in pixels")->check(CLI::PositiveNumber)->capture_default_str();
    te_cmd->add_option("--seed", te_args.seed, "RNG seed")->capture_default_str();
    te_cmd->add_option("--theta", te_args.theta, "Texture blur angle in radians")->capture_default_str();
    te_cmd->add_option("--variants", te_args.variants, "Shuffled texture variants")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    te_cmd->add_option("--attempts", te_args.attempts, "Placement attempts")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    te_cmd->add_option("--bands", te_args.bands, "Voxel height bands for --cells")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    te_cmd->add_option("--seed-size", te_args.seed_size, "Seed image side")->capture_default_str();
    te_cmd->add_option("--seed-points", te_args.seed_points, "Points in the seed image")->capture_default_str();
    te_cmd->add_option("--combine", te_args.combine, "Overlap rule: max or add")->capture_default_str();
    te_cmd->add_option("--cells", te_args.cells, "Write 'x y level residual object' records here");
    te_cmd->add_option("--height", te_args.height, "Also write the island height map (PGM)");
    te_cmd->add_flag("--linear", te_args.linear, "Linear texture display instead of logarithmic");
    te_cmd->add_option("--decades", te_args.decades, "Decades for the logarithmic texture display")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    GhzArgs ghz_args;
    auto *ghz_cmd = app.add_subcommand("demo-ghz", "Rotate the two-pixel GHZ image through a theta sweep");
    ghz_cmd->add_option("--size", ghz_args.size, "Grid side; the all-ones key must land on the grid")->capture_default_str();
    ghz_cmd->add_option("--thetas", ghz_args.thetas, "Angles in radians (default 0, 0.1pi, ..., 0.5pi)");
    ghz_cmd->add_flag("--include-pi", ghz_args.include_pi, "Append a theta = pi frame");
    ghz_cmd->add_option("--output-pattern", ghz_args.pattern, "Frame path with one %d")->required();
    ghz_cmd->add_option("--decades", ghz_args.decades, "Decades for the logarithmic display")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    std::vector<const char *> argv;
    argv.reserve(args.size());
    for (const auto &a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        app.exit(e, out, err);
        return kExitInput;
    }

    try {
        if (blur_cmd->parsed()) return cmd_blur(blur_args, out, err);
        if (tr_cmd->parsed()) return cmd_transition(tr_args, out, err);
        if (te_cmd->parsed()) return cmd_terrain(te_args, out);
        if (ghz_cmd->parsed()) return cmd_demo_ghz(ghz_args, out);
    } catch (const CapacityError &e) {
        err << "error: " << e.what() << "\n";
        return kExitCapacity;
    } catch (const io::IoError &e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::out_of_range &e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitFailure;
}

}  // namespace qblur::cli
