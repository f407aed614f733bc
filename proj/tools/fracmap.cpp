// Copyright 2026 The fracmap Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: orbit simulation, bifurcation scans and
// symmetry checks, with CSV outputs, optional PPM scatter plots and a
// JSON run manifest per command.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fracmap/bifurcation.hpp"
#include "fracmap/caputo.hpp"
#include "fracmap/io_iterator.hpp"
#include "fracmap/raster.hpp"
#include "fracmap/spectral.hpp"
#include "fracmap/symmetry.hpp"
#include "fracmap/thresholds.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

constexpr int kExitOk = 0;
constexpr int kExitBadArgs = 2;
constexpr int kExitDiverged = 3;
constexpr int kExitPatternViolated = 4;

using json = nlohmann::json;
using namespace fracmap;

struct MapFlags {
    std::string kind = "dihedral";
    int m = 3;
    double a = 0.0, b = 0.0, c = 0.0, d = 0.0, gamma = 0.0;
    int n_power = 0;
    std::string config_path;
};

void add_map_flags(CLI::App* cmd, MapFlags& f) {
    cmd->add_option("--config", f.config_path,
                    "key-value map config file (flags override file values)");
    cmd->add_option("--map", f.kind, "map kind: dihedral|cyclic|dihedral-re");
    cmd->add_option("--m", f.m, "symmetry order m (>= 2)");
    cmd->add_option("--a", f.a, "coefficient a");
    cmd->add_option("--b", f.b, "coefficient b");
    cmd->add_option("--c", f.c, "imaginary linear coefficient (cyclic)");
    cmd->add_option("--d", f.d, "conjugate-power coefficient");
    cmd->add_option("--gamma", f.gamma, "Re(z^n) coefficient (dihedral-re)");
    cmd->add_option("--n-power", f.n_power, "exponent n of Re(z^n) (dihedral-re)");
}

MapSpec resolve_spec(const CLI::App* cmd, const MapFlags& f) {
    MapSpec spec;
    if (!f.config_path.empty()) {
        std::ifstream in(f.config_path);
        if (!in) throw std::invalid_argument("cannot open config file " + f.config_path);
        std::stringstream buf;
        buf << in.rdbuf();
        spec = map_spec_from_kv(buf.str());
    }
    auto given = [&](const std::string& name) { return cmd->count(name) > 0; };
    if (f.config_path.empty() || given("--map")) {
        if (f.kind == "dihedral")
            spec.kind = MapKind::Dihedral;
        else if (f.kind == "cyclic")
            spec.kind = MapKind::Cyclic;
        else if (f.kind == "dihedral-re")
            spec.kind = MapKind::DihedralRe;
        else
            throw std::invalid_argument("unknown map kind: " + f.kind);
    }
    if (f.config_path.empty() || given("--m")) spec.m = f.m;
    if (f.config_path.empty() || given("--a")) spec.a = f.a;
    if (f.config_path.empty() || given("--b")) spec.b = f.b;
    if (f.config_path.empty() || given("--c")) spec.c = f.c;
    if (f.config_path.empty() || given("--d")) spec.d = f.d;
    if (f.config_path.empty() || given("--gamma")) spec.gamma = f.gamma;
    if (f.config_path.empty() || given("--n-power")) spec.n_power = f.n_power;
    // Re(z^n) maps default to n = m, the exponent that keeps the map
    // m-fold symmetric.
    if (spec.kind == MapKind::DihedralRe && !given("--n-power") && spec.n_power == 0)
        spec.n_power = spec.m;
    validate(spec);
    return spec;
}

json spec_json(const MapSpec& s) {
    return json{{"kind", to_string(s.kind)}, {"m", s.m},         {"a", s.a},
                {"b", s.b},                  {"c", s.c},         {"d", s.d},
                {"gamma", s.gamma},          {"n_power", s.n_power}};
}

void write_manifest(const std::string& base_path, const std::string& command,
                    const json& config, std::uint64_t seed,
                    const std::vector<std::string>& artifacts) {
    json manifest{{"command", command},
                  {"version", kVersion},
                  {"seed", seed},
                  {"config", config},
                  {"artifacts", artifacts}};
    const std::string path = base_path + ".manifest.json";
    std::ofstream out(path);
    out << manifest.dump(2) << '\n';
}

void plot_orbit(const Orbit& orbit, std::size_t discard, const std::string& path) {
    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    const std::size_t end = orbit.diverged_at ? *orbit.diverged_at : orbit.points.size();
    for (std::size_t i = discard; i < end; ++i) {
        xmin = std::min(xmin, orbit.points[i].x);
        xmax = std::max(xmax, orbit.points[i].x);
        ymin = std::min(ymin, orbit.points[i].y);
        ymax = std::max(ymax, orbit.points[i].y);
    }
    if (!(xmin < xmax)) { xmin -= 0.5; xmax += 0.5; }
    if (!(ymin < ymax)) { ymin -= 0.5; ymax += 0.5; }
    const double mx = 0.05 * (xmax - xmin);
    const double my = 0.05 * (ymax - ymin);
    Canvas canvas(900, 900);
    canvas.set_view(xmin - mx, xmax + mx, ymin - my, ymax + my);
    for (std::size_t i = discard; i < end; ++i)
        canvas.plot(orbit.points[i].x, orbit.points[i].y, palette_color(0));
    canvas.save_ppm(path);
}

void plot_scan(const std::vector<BifurcativeSet>& sets, const std::string& path) {
    double ymin = 1e300, ymax = -1e300;
    for (const auto& s : sets)
        for (const auto& cell : s.samples)
            for (const double x : cell) {
                ymin = std::min(ymin, x);
                ymax = std::max(ymax, x);
            }
    if (!(ymin < ymax)) { ymin -= 0.5; ymax += 0.5; }
    const auto& grid = sets.front().axis_values;
    Canvas canvas(1200, 800);
    canvas.set_view(grid.front(), grid.back(), ymin - 0.05 * (ymax - ymin),
                    ymax + 0.05 * (ymax - ymin));
    for (const auto& s : sets)
        for (std::size_t i = 0; i < grid.size(); ++i)
            for (const double x : s.samples[i])
                canvas.plot(grid[i], x, palette_color(s.ic_index));
    canvas.save_ppm(path);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"integer- and fractional-order symmetric maps on the complex plane"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    // --- simulate ---
    auto* sim = app.add_subcommand("simulate", "generate one orbit and export CSV");
    MapFlags sim_map;
    add_map_flags(sim, sim_map);
    std::string sim_order = "io";
    double sim_q = 0.5, sim_x0 = 0.0, sim_y0 = 0.0;
    double sim_escape = kDefaultEscapeRadius;
    std::size_t sim_steps = 10000, sim_discard = 0, sim_memory = 0;
    std::string sim_out, sim_plot, sim_psd, sim_window = "hann";
    sim->add_option("--order", sim_order, "io | fo")
        ->check(CLI::IsMember({"io", "fo"}));
    sim->add_option("--q", sim_q, "fractional order in (0,1), fo only");
    sim->add_option("--x0", sim_x0, "initial condition, real part");
    sim->add_option("--y0", sim_y0, "initial condition, imaginary part");
    sim->add_option("--steps", sim_steps, "iteration count");
    sim->add_option("--discard", sim_discard, "transient length (metadata + plot)");
    sim->add_option("--escape", sim_escape, "escape radius");
    sim->add_option("--memory", sim_memory, "fo memory truncation, 0 = full history");
    sim->add_option("--out", sim_out, "orbit CSV path")->required();
    sim->add_option("--plot", sim_plot, "optional scatter PPM path");
    sim->add_option("--psd", sim_psd,
                    "optional spectrum CSV of the post-transient x series "
                    "(also prints the attractor classification)");
    sim->add_option("--window", sim_window, "psd window: hann | none")
        ->check(CLI::IsMember({"hann", "none"}));

    // --- bifurcation ---
    auto* bif = app.add_subcommand("bifurcation", "bifurcation-diagram scan");
    MapFlags bif_map;
    add_map_flags(bif, bif_map);
    std::string bif_axis = "a", bif_order = "io", bif_prefix;
    double bif_min = 0.0, bif_max = 1.0, bif_q = 0.0;
    std::size_t bif_axis_steps = 100, bif_steps = 2200, bif_discard = 2000, bif_keep = 200;
    double bif_escape = kDefaultEscapeRadius;
    bool bif_rand_y0 = false, bif_plot = false;
    double bif_y0_min = -1.0, bif_y0_max = 1.0;
    std::uint64_t bif_seed = 0;
    unsigned bif_threads = 0;
    std::vector<std::string> bif_ics;
    bif->add_option("--axis", bif_axis, "scan axis: a | q | x0")
        ->check(CLI::IsMember({"a", "q", "x0"}));
    bif->add_option("--min", bif_min, "axis minimum")->required();
    bif->add_option("--max", bif_max, "axis maximum")->required();
    bif->add_option("--steps-axis", bif_axis_steps, "grid points along the axis");
    bif->add_option("--order", bif_order, "io | fo")->check(CLI::IsMember({"io", "fo"}));
    bif->add_option("--q", bif_q, "fixed fractional order for fo a/x0 scans");
    bif->add_option("--ic", bif_ics, "initial condition \"x,y\" (repeatable)");
    bif->add_option("--steps", bif_steps, "iterations per cell");
    bif->add_option("--discard", bif_discard, "transient discarded per cell");
    bif->add_option("--keep", bif_keep, "samples kept per cell");
    bif->add_flag("--randomize-y0", bif_rand_y0, "draw y0 per cell (x0 scans)");
    bif->add_option("--y0-min", bif_y0_min, "randomized y0 lower bound");
    bif->add_option("--y0-max", bif_y0_max, "randomized y0 upper bound");
    bif->add_option("--escape", bif_escape, "escape radius");
    bif->add_option("--seed", bif_seed, "random seed");
    bif->add_option("--threads", bif_threads, "worker threads, 0 = hardware");
    bif->add_option("--out-prefix", bif_prefix, "output path prefix")->required();
    bif->add_flag("--plot", bif_plot, "write combined scatter PPM");

    // --- symmetry ---
    auto* sym = app.add_subcommand("symmetry", "equivariance / orbit symmetry checks");
    MapFlags sym_map;
    add_map_flags(sym, sym_map);
    std::string sym_check = "equivariance", sym_element, sym_order = "io", sym_out;
    std::size_t sym_samples = 1000, sym_steps = 100000, sym_discard = 1000;
    double sym_radius = 1.5, sym_q = 0.5, sym_x0 = 0.05, sym_y0 = 0.1;
    double sym_escape = kDefaultEscapeRadius;
    std::uint64_t sym_seed = 1;
    sym->add_option("--check", sym_check, "equivariance | orbit")
        ->check(CLI::IsMember({"equivariance", "orbit"}));
    sym->add_option("--element", sym_element, "single element Rk or Sk (default: all)");
    sym->add_option("--samples", sym_samples, "sample count (equivariance)");
    sym->add_option("--radius", sym_radius, "sampling disk radius (equivariance)");
    sym->add_option("--seed", sym_seed, "sampling seed (equivariance)");
    sym->add_option("--order", sym_order, "orbit check: io | fo")
        ->check(CLI::IsMember({"io", "fo"}));
    sym->add_option("--q", sym_q, "orbit check: fractional order");
    sym->add_option("--x0", sym_x0, "orbit check: initial x");
    sym->add_option("--y0", sym_y0, "orbit check: initial y");
    sym->add_option("--steps", sym_steps, "orbit check: steps");
    sym->add_option("--discard", sym_discard, "orbit check: transient discard");
    sym->add_option("--escape", sym_escape, "orbit check: escape radius");
    sym->add_option("--out", sym_out, "report CSV path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitBadArgs;
    }

    try {
        if (sim->parsed()) {
            const MapSpec spec = resolve_spec(sim, sim_map);
            Orbit orbit;
            if (sim_order == "fo")
                orbit = iterate_fo(spec, {sim_x0, sim_y0}, sim_q, sim_steps, sim_escape,
                                   sim_memory);
            else
                orbit = iterate_io(spec, {sim_x0, sim_y0}, sim_steps, sim_escape);
            orbit.discard = sim_discard;

            std::ofstream out(sim_out);
            if (!out) throw std::invalid_argument("cannot open output " + sim_out);
            write_orbit_csv(orbit, out);
            out.close();
            std::vector<std::string> artifacts{sim_out};
            if (!sim_plot.empty()) {
                const std::size_t plot_from =
                    (orbit.diverged_at && *orbit.diverged_at <= sim_discard)
                        ? 0
                        : sim_discard;
                plot_orbit(orbit, plot_from, sim_plot);
                artifacts.push_back(sim_plot);
            }
            if (!sim_psd.empty()) {
                std::vector<double> xs;
                const std::size_t end =
                    orbit.diverged_at ? *orbit.diverged_at : orbit.points.size();
                for (std::size_t i = sim_discard; i < end; ++i)
                    xs.push_back(orbit.points[i].x);
                const Spectrum s =
                    psd(xs, sim_window == "hann" ? Window::Hann : Window::None);
                std::ofstream sout(sim_psd);
                if (!sout) throw std::invalid_argument("cannot open output " + sim_psd);
                write_spectrum_csv(s, sout);
                artifacts.push_back(sim_psd);
                const AttractorLabel label = classify(orbit, sim_discard);
                std::printf("classification: %s (%zu sharp peaks", to_string(label.label),
                            label.peak_count);
                for (std::size_t i = 0; i < label.dominant_freqs.size() && i < 4; ++i)
                    std::printf("%s%.5g", i ? " " : "; dominant: ",
                                label.dominant_freqs[i]);
                std::printf(")\n");
            }
            json config{{"map", spec_json(spec)},
                        {"order", sim_order},
                        {"x0", sim_x0},
                        {"y0", sim_y0},
                        {"steps", sim_steps},
                        {"discard", sim_discard},
                        {"escape", sim_escape}};
            if (sim_order == "fo") {
                config["q"] = sim_q;
                config["memory"] = sim_memory;
            }
            write_manifest(sim_out, "simulate", config, 0, artifacts);

            if (orbit.diverged_at) {
                std::fprintf(stderr, "orbit diverged at step %zu\n", *orbit.diverged_at);
                if (*orbit.diverged_at <= sim_discard) return kExitDiverged;
            }
            return kExitOk;
        }

        if (bif->parsed()) {
            ScanConfig cfg;
            cfg.spec = resolve_spec(bif, bif_map);
            cfg.axis = bif_axis == "a"    ? ScanAxis::ParamA
                       : bif_axis == "q"  ? ScanAxis::OrderQ
                                          : ScanAxis::InitX0;
            cfg.axis_min = bif_min;
            cfg.axis_max = bif_max;
            cfg.axis_steps = bif_axis_steps;
            cfg.steps = bif_steps;
            cfg.discard = bif_discard;
            cfg.keep = bif_keep;
            cfg.randomize_y0 = bif_rand_y0;
            cfg.y0_min = bif_y0_min;
            cfg.y0_max = bif_y0_max;
            cfg.escape_radius = bif_escape;
            cfg.seed = bif_seed;
            if (bif_axis == "q") {
                if (bif->count("--order") && bif_order != "fo")
                    throw std::invalid_argument("axis q implies --order fo");
            } else if (bif_order == "fo") {
                if (!bif->count("--q"))
                    throw std::invalid_argument("fo scans over a/x0 require --q");
                cfg.q_fixed = bif_q;
            }
            if (bif_ics.empty()) {
                cfg.initial_conditions.push_back({0.05, 0.1});
            } else {
                for (const auto& text : bif_ics) {
                    double x = 0, y = 0;
                    if (std::sscanf(text.c_str(), "%lf,%lf", &x, &y) != 2)
                        throw std::invalid_argument("bad --ic value: " + text);
                    cfg.initial_conditions.push_back({x, y});
                }
            }

            const auto sets = run_scan(cfg, bif_threads);

            std::vector<std::string> artifacts;
            for (const auto& s : sets) {
                const std::string path =
                    bif_prefix + "_bs" + std::to_string(s.ic_index) + ".csv";
                std::ofstream out(path);
                if (!out) throw std::invalid_argument("cannot open output " + path);
                write_scan_csv(s, out);
                artifacts.push_back(path);
            }
            if (bif_plot) {
                const std::string path = bif_prefix + ".ppm";
                plot_scan(sets, path);
                artifacts.push_back(path);
            }
            json ics = json::array();
            for (const auto& ic : cfg.initial_conditions)
                ics.push_back(json{{"x", ic.x}, {"y", ic.y}});
            json config{{"map", spec_json(cfg.spec)},
                        {"axis", bif_axis},
                        {"axis_min", cfg.axis_min},
                        {"axis_max", cfg.axis_max},
                        {"axis_steps", cfg.axis_steps},
                        {"initial_conditions", ics},
                        {"steps", cfg.steps},
                        {"discard", cfg.discard},
                        {"keep", cfg.keep},
                        {"randomize_y0", cfg.randomize_y0},
                        {"escape", cfg.escape_radius}};
            if (cfg.q_fixed) config["q"] = *cfg.q_fixed;
            if (cfg.randomize_y0) {
                config["y0_min"] = cfg.y0_min;
                config["y0_max"] = cfg.y0_max;
            }
            write_manifest(bif_prefix, "bifurcation", config, cfg.seed, artifacts);
            return kExitOk;
        }

        // --- symmetry ---
        const MapSpec spec = resolve_spec(sym, sym_map);
        std::vector<GroupElement> targets;
        if (sym_element.empty()) {
            targets = elements(spec.m);
        } else {
            const auto g = parse_element(sym_element, spec.m);
            if (!g) throw std::invalid_argument("bad --element: " + sym_element);
            targets.push_back(*g);
        }

        bool pattern_ok = true;
        std::ostringstream csv;
        if (sym_check == "equivariance") {
            std::vector<EquivarianceReport> reports;
            std::printf("%-8s %-14s %-12s %s\n", "element", "max_defect", "expected",
                        "verdict");
            for (const auto& g : targets) {
                const auto rep = check_equivariance(spec, g, sym_samples, sym_radius,
                                                    sym_seed);
                reports.push_back(rep);
                const bool expect_pass = !g.reflect || spec.kind != MapKind::Cyclic;
                const bool pass = rep.max_defect < thresholds::kEquivariancePass;
                const bool fail = rep.max_defect > thresholds::kEquivarianceFail;
                const bool ok = expect_pass ? pass : fail;
                pattern_ok = pattern_ok && ok;
                std::printf("%-8s %-14.3e %-12s %s\n", name(g).c_str(), rep.max_defect,
                            expect_pass ? "equivariant" : "broken", ok ? "ok" : "VIOLATED");
            }
            write_report_csv(std::span<const EquivarianceReport>(reports), csv);
        } else {
            Orbit orbit;
            if (sym_order == "fo")
                orbit = iterate_fo(spec, {sym_x0, sym_y0}, sym_q, sym_steps, sym_escape);
            else
                orbit = iterate_io(spec, {sym_x0, sym_y0}, sym_steps, sym_escape);
            orbit.discard = sym_discard;

            std::vector<OrbitSymmetryReport> reports;
            std::printf("%-8s %-14s %-12s %s\n", "element", "defect", "expected",
                        "verdict");
            for (const auto& g : targets) {
                const auto rep = orbit_symmetry_defect(orbit, g, sym_discard);
                reports.push_back(rep);
                bool expect_symmetric;
                if (sym_order == "fo")
                    expect_symmetric = (g.k == 0 && !g.reflect) ||
                                       (sym_y0 == 0.0 && g.k == 0 && g.reflect);
                else
                    expect_symmetric = spec.kind != MapKind::Cyclic || !g.reflect;
                const bool symmetric = rep.defect < thresholds::kCloudDefectTol;
                const bool ok = symmetric == expect_symmetric;
                pattern_ok = pattern_ok && ok;
                std::printf("%-8s %-14.3e %-12s %s\n", name(g).c_str(), rep.defect,
                            expect_symmetric ? "symmetric" : "broken",
                            ok ? "ok" : "VIOLATED");
            }
            write_report_csv(std::span<const OrbitSymmetryReport>(reports), csv);
        }
        if (!sym_out.empty()) {
            std::ofstream out(sym_out);
            if (!out) throw std::invalid_argument("cannot open output " + sym_out);
            out << csv.str();
            json config{{"map", spec_json(spec)}, {"check", sym_check}};
            write_manifest(sym_out, "symmetry", config, sym_seed, {sym_out});
        }
        return pattern_ok ? kExitOk : kExitPatternViolated;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitBadArgs;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitBadArgs;
    }
}
