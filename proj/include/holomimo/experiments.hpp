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

#ifndef HOLOMIMO_EXPERIMENTS_HPP
#define HOLOMIMO_EXPERIMENTS_HPP

#include "holomimo/scenarios.hpp"

#include <filesystem>
#include <functional>
#include <string>
#include <vector>

namespace holomimo
{
    enum class SweepAxis
    {
        azimuth_spread,   // degrees, applied to both link ends
        elevation_spread, // degrees, applied to both link ends
        snr_db,
        spacing,          // wavelengths; element area capped at spacing^2
        aperture          // wavelengths, square, both link ends
    };

    std::string_view axis_name(SweepAxis axis);
    SweepAxis parse_axis(std::string_view name);

    // Returns a copy of `config` with the axis set to `value`
    ScenarioConfig apply_axis(const ScenarioConfig &config, SweepAxis axis, double value);

    struct SweepSeries
    {
        std::string label;
        ScenarioConfig config;
    };

    struct SweepSpec
    {
        SweepAxis axis = SweepAxis::snr_db;
        std::vector<double> values;
        std::vector<SweepSeries> series;
        Index trials = 200;
        Seed master_seed = 1;
        std::string title;
        std::filesystem::path out_csv; // empty: not written
        std::filesystem::path out_svg;
        bool record_timing = false;    // wall_time_s stays 0 otherwise, keeping the CSV reproducible

        void validate() const;
    };

    struct SweepRow
    {
        std::string series;
        SweepAxis axis = SweepAxis::snr_db;
        double axis_value = 0.0;
        double capacity_bits = 0.0;
        double std_error = 0.0;
        Index n_r = 0;
        Index n_s = 0;
        double wall_time_s = 0.0;

        bool operator==(const SweepRow &) const = default;
    };

    struct SweepResult
    {
        std::vector<SweepRow> rows;
        bool operator==(const SweepResult &) const = default;
    };

    struct PointResult
    {
        CapacityEstimate estimate;
        Index n_r = 0;
        Index n_s = 0;
        double upper_bound = 0.0;
        double low_snr = 0.0;
    };

    // lattice -> spectra -> Monte Carlo capacity
    PointResult evaluate_point(const ScenarioConfig &config, Index trials, Seed seed);

    // evaluate_point plus the human-readable report (mean, std. error, n_R, n_S, bound, low-SNR value)
    PointResult run_point(const ScenarioConfig &config, Index trials, Seed seed, std::ostream &report);

    // Seed of point (series, value), independent of evaluation order
    Seed sweep_point_seed(Seed master, std::size_t series, std::size_t value);

    using ProgressFn = std::function<void(std::size_t done, std::size_t total, const SweepRow &row)>;

    // Evaluates every (series, value) pair; writes out_csv / out_svg when set
    SweepResult run_sweep(const SweepSpec &spec, const ProgressFn &progress = {});

    // Sweep spec from JSON: {"axis", "values", "series": [{"label", "config"}], "trials", "seed", "title"}
    SweepSpec parse_sweep_spec(std::string_view text);

    // Pre-populated sweeps; `scale` multiplies every aperture
    SweepSpec fig4_spec(double scale = 1.0, Index trials = 200, Seed seed = 1);
    SweepSpec fig5_spec(double scale = 1.0, Index trials = 200, Seed seed = 1);
    SweepSpec fig6_spec(double scale = 1.0, Index trials = 200, Seed seed = 1);

    std::string format_csv(const SweepResult &result);
    SweepResult parse_csv(std::string_view text);
    void emit_csv(const SweepResult &result, const std::filesystem::path &path);

    std::string format_svg(const SweepResult &result, const std::string &title, const std::string &x_label);
    void emit_svg(const SweepResult &result, const std::filesystem::path &path,
                  const std::string &title, const std::string &x_label);

    // Axis label for plots, with unit
    std::string axis_label(SweepAxis axis);

    // Shortest decimal that parses back to the same double
    std::string format_double(double x);

    // Writes `contents` to `path`; io_error names the path on failure
    void write_text_file(const std::filesystem::path &path, const std::string &contents);
    std::string read_text_file(const std::filesystem::path &path);
}

#endif
