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

#ifndef HOLOMIMO_SCENARIOS_HPP
#define HOLOMIMO_SCENARIOS_HPP

#include "holomimo/angular_spectrum.hpp"
#include "holomimo/capacity.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace holomimo
{
    // Propagation scenario parameters. Angles in radians, element area in wavelengths squared.
    struct ScenarioPreset
    {
        std::string name;
        double frequency_hz = 6.0e9;
        double azimuth_mean = pi / 2;
        double elevation_mean = pi / 4;
        double tx_azimuth_spread = 0.0;
        double tx_elevation_spread = 0.0;
        double rx_azimuth_spread = 0.0;
        double rx_elevation_spread = 0.0;
        double element_area = 1.0 / 64.0;
        double aperture_efficiency = 0.6;

        void validate() const;
        double wavelength() const { return speed_of_light / frequency_hz; }
        AngleDistribution tx_distribution() const;
        AngleDistribution rx_distribution() const;

        bool operator==(const ScenarioPreset &) const = default;
    };

    // UMa, UMi or RMa line-of-sight parameters at 6 GHz. Returns a copy.
    ScenarioPreset builtin_preset(std::string_view name);
    std::vector<std::string> builtin_preset_names();

    enum class ApertureScheme
    {
        discrete,  // fixed element area
        continuous // element area L_x L_y / N
    };

    // Everything needed to evaluate one capacity point
    struct ScenarioConfig
    {
        ScenarioPreset scenario;
        PlanarArrayConfig tx;
        PlanarArrayConfig rx;
        ApertureScheme scheme = ApertureScheme::discrete;
        double snr_db = 30.0;

        void validate() const;
        ArrayPair arrays() const { return {tx, rx}; }
        bool operator==(const ScenarioConfig &) const = default;
    };

    // Parses a JSON scenario document (angles in degrees). Unspecified fields come from the
    // named preset; without a preset the full parameter set is required. Unknown keys,
    // wrong types and out-of-range values throw config_error naming the JSON path.
    ScenarioConfig parse_scenario(std::string_view text);

    // Explicit JSON form of a configuration; parse_scenario(serialize_scenario(c)) == c
    std::string serialize_scenario(const ScenarioConfig &config);

    // Default configuration for a built-in scenario: 15 wavelength square arrays at lambda/4 spacing
    ScenarioConfig default_config(std::string_view preset_name);

    std::string_view scheme_name(ApertureScheme scheme);
}

#endif
