// SPDX-License-Identifier: Apache-2.0
//
// holomimo: wavenumber-domain holographic MIMO channel and capacity simulation
// Copyright (C) 2026 The holomimo authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------


#include "holomimo/channel.hpp"
#include "holomimo/experiments.hpp"
#include "holomimo/random.hpp"

#include "CLI11.hpp"

#include <filesystem>
#include <iostream>
#include <optional>

namespace fs = std::filesystem;
using namespace holomimo;

namespace
{
    constexpr int exit_config = 2;
    constexpr int exit_numeric = 3;
    constexpr int exit_io = 4;

    ScenarioConfig load_config(const std::string &path)
    {
        return parse_scenario(read_text_file(path));
    }

    void ensure_directory(const fs::path &dir)
    {
        std::error_code ec;
        fs::create_directories(dir, ec);
        if (ec || !fs::is_directory(dir))
            throw io_error("cannot create output directory '" + dir.string() + "'");
    }

    ProgressFn progress_printer(bool quiet)
    {
        if (quiet)
            return {};
        return [](std::size_t done, std::size_t total, const SweepRow &row)
        {
            std::cerr << "[" << done << "/" << total << "] " << row.series << " " << axis_name(row.axis) << "="
                      << format_double(row.axis_value) << ": " << row.capacity_bits << " +- " << row.std_error << "\n";
        };
    }

    void export_realizations(const ScenarioConfig &config, Seed seed, const std::string &angular_path,
                             const std::string &spatial_path)
    {
        const auto rx_lattice = enumerate_lattice(config.rx);
        const auto tx_lattice = enumerate_lattice(config.tx);
        const auto rx = compute_spectrum(config.scenario.rx_distribution(), rx_lattice);
        const auto tx = compute_spectrum(config.scenario.tx_distribution(), tx_lattice);
        // The exported realization is trial 0 of the Monte Carlo run
        const Seed trial_seed = derive_trial_seed(seed, 0);
        const auto angular = sample_angular_channel<double>(rx, tx, trial_seed);
        const auto json = serialize_scenario(config);
        if (!angular_path.empty())
        {
            write_hmio(angular_path, angular.matrix);
            write_hmio_sidecar(angular_path + ".json", json, trial_seed, rx, tx, "angular");
        }
        if (!spatial_path.empty())
        {
            const auto spatial = synthesize_spatial(angular, build_fourier_basis<double>(config.rx, rx_lattice),
                                                    build_fourier_basis<double>(config.tx, tx_lattice));
            write_hmio(spatial_path, spatial.matrix);
            write_hmio_sidecar(spatial_path + ".json", json, trial_seed, rx, tx, "spatial");
        }
    }

    std::string spectrum_csv(const ScenarioConfig &config)
    {
        std::string out = "side,idx_x,idx_y,kx_lo,kx_hi,ky_lo,ky_hi,variance\n";
        for (const char *side : {"rx", "tx"})
        {
            const bool is_rx = side[0] == 'r';
            const auto lattice = enumerate_lattice(is_rx ? config.rx : config.tx);
            const auto spectrum = compute_spectrum(is_rx ? config.scenario.rx_distribution()
                                                         : config.scenario.tx_distribution(),
                                                   lattice);
            for (Index j = 0; j < lattice.cardinality(); ++j)
            {
                const auto &c = lattice.cells[static_cast<std::size_t>(j)];
                out += std::string(side) + "," + std::to_string(c.idx_x) + "," + std::to_string(c.idx_y) + "," +
                       format_double(c.kx_lo) + "," + format_double(c.kx_hi) + "," + format_double(c.ky_lo) + "," +
                       format_double(c.ky_hi) + "," + format_double(spectrum.variances(j)) + "\n";
            }
        }
        return out;
    }
}

int main(int argc, char **argv)
{
    CLI::App app{"holomimo: holographic MIMO channel and capacity simulation"};
    app.require_subcommand(1);

    std::string config_path, spec_path, out_csv, out_svg, out_dir, export_angular, export_spatial;
    Seed seed = 1;
    Index trials = 200;
    double scale = 1.0;
    std::optional<double> snr_db;
    bool record_timing = false, quiet = false;

    auto *point = app.add_subcommand("point", "Evaluate the ergodic capacity of one configuration");
    point->add_option("--config", config_path, "Scenario JSON file")->required();
    point->add_option("--seed", seed, "Master seed");
    point->add_option("--trials", trials, "Monte Carlo trials");
    point->add_option("--snr-db", snr_db, "Override the configured SNR (dB)");
    point->add_option("--export-angular", export_angular, "Write one angular realization (HMIO) plus a JSON sidecar");
    point->add_option("--export-spatial", export_spatial, "Write one spatial realization (HMIO) plus a JSON sidecar");

    auto *sweep = app.add_subcommand("sweep", "Run a parameter sweep from a JSON spec");
    sweep->add_option("--spec", spec_path, "Sweep spec JSON file")->required();
    sweep->add_option("--out-csv", out_csv, "CSV output path")->required();
    sweep->add_option("--out-svg", out_svg, "SVG output path");
    sweep->add_flag("--record-timing", record_timing, "Fill the wall_time_s column");
    sweep->add_flag("--quiet", quiet, "No progress output");

    std::vector<CLI::App *> figs;
    for (const char *name : {"fig4", "fig5", "fig6"})
    {
        auto *fig = app.add_subcommand(name, std::string("Run the ") + name + " sweep, writing " + name + ".csv and " + name + ".svg");
        fig->add_option("--out", out_dir, "Output directory")->required();
        fig->add_option("--trials", trials, "Monte Carlo trials per point");
        fig->add_option("--seed", seed, "Master seed");
        fig->add_option("--scale", scale, "Aperture scale factor (0.25 gives 3.75 wavelength arrays)");
        fig->add_flag("--record-timing", record_timing, "Fill the wall_time_s column");
        fig->add_flag("--quiet", quiet, "No progress output");
        figs.push_back(fig);
    }

    auto *spectrum = app.add_subcommand("spectrum", "Dump per-cell variances of both link ends");
    spectrum->add_option("--config", config_path, "Scenario JSON file")->required();
    spectrum->add_option("--out-csv", out_csv, "CSV output path")->required();

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp &e)
    {
        return app.exit(e);
    }
    catch (const CLI::CallForAllHelp &e)
    {
        return app.exit(e);
    }
    catch (const CLI::ParseError &e)
    {
        app.exit(e);
        return exit_config;
    }

    try
    {
        if (*point)
        {
            auto config = load_config(config_path);
            if (snr_db)
                config.snr_db = *snr_db;
            run_point(config, trials, seed, std::cout);
            if (!export_angular.empty() || !export_spatial.empty())
                export_realizations(config, seed, export_angular, export_spatial);
        }
        else if (*sweep)
        {
            auto spec = parse_sweep_spec(read_text_file(spec_path));
            spec.out_csv = out_csv;
            spec.out_svg = out_svg;
            spec.record_timing = record_timing;
            run_sweep(spec, progress_printer(quiet));
        }
        else if (*spectrum)
        {
            write_text_file(out_csv, spectrum_csv(load_config(config_path)));
        }
        else
        {
            for (std::size_t k = 0; k < figs.size(); ++k)
            {
                if (!*figs[k])
                    continue;
                const std::string name = figs[k]->get_name();
                SweepSpec spec = k == 0 ? fig4_spec(scale, trials, seed)
                                 : k == 1 ? fig5_spec(scale, trials, seed)
                                          : fig6_spec(scale, trials, seed);
                ensure_directory(out_dir);
                spec.out_csv = fs::path(out_dir) / (name + ".csv");
                spec.out_svg = fs::path(out_dir) / (name + ".svg");
                spec.record_timing = record_timing;
                run_sweep(spec, progress_printer(quiet));
            }
        }
    }
    catch (const config_error &e)
    {
        std::cerr << "configuration error: " << e.what() << "\n";
        return exit_config;
    }
    catch (const numeric_error &e)
    {
        std::cerr << "numeric error: " << e.what() << "\n";
        return exit_numeric;
    }
    catch (const io_error &e)
    {
        std::cerr << "I/O error: " << e.what() << "\n";
        return exit_io;
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
