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


#include "holomimo/scenarios.hpp"

#include "json.hpp"

#include <array>
#include <cmath>
#include <set>

namespace holomimo
{
    namespace
    {
        using json = nlohmann::json;

        struct TableRow
        {
            const char *name;
            double tx_az, tx_el, rx_az, rx_el; // degrees
        };

        constexpr std::array<TableRow, 3> table_rows{{
            {"UMa", 14.0, 0.3, 65.0, 8.9},
            {"UMi", 14.7, 0.6, 46.0, 4.4},
            {"RMa", 7.9, 0.1, 33.0, 3.0},
        }};

        const std::set<std::string> known_keys{
            "preset", "name", "frequency_ghz", "azimuth_mean_deg", "elevation_mean_deg",
            "tx_spread_az_deg", "tx_spread_el_deg", "rx_spread_az_deg", "rx_spread_el_deg",
            "aperture_wavelengths", "aperture_x_wavelengths", "aperture_y_wavelengths",
            "tx_aperture_x_wavelengths", "tx_aperture_y_wavelengths",
            "rx_aperture_x_wavelengths", "rx_aperture_y_wavelengths",
            "spacing_wavelengths", "element_area_wavelengths_sq", "aperture_efficiency",
            "scheme", "snr_db"};

        // Keys that make up the full parameter set when no preset is named
        constexpr std::array<const char *, 9> full_set{
            "frequency_ghz", "azimuth_mean_deg", "elevation_mean_deg",
            "tx_spread_az_deg", "tx_spread_el_deg", "rx_spread_az_deg", "rx_spread_el_deg",
            "element_area_wavelengths_sq", "aperture_efficiency"};

        [[noreturn]] void fail(const std::string &key, const std::string &reason)
        {
            throw config_error("scenario $." + key + ": " + reason);
        }

        std::string validated_string(const json &doc, const std::string &key)
        {
            const auto &v = doc.at(key);
            if (!v.is_string())
                fail(key, "expected a string");
            return v.get<std::string>();
        }

        double number(const json &doc, const std::string &key)
        {
            const auto &v = doc.at(key);
            if (!v.is_number())
                fail(key, "expected a number");
            const double x = v.get<double>();
            if (!std::isfinite(x))
                fail(key, "must be finite");
            return x;
        }

        double positive(const json &doc, const std::string &key)
        {
            const double x = number(doc, key);
            if (!(x > 0.0))
                fail(key, "must be positive, got " + json(x).dump());
            return x;
        }

        // Frequency in GHz that maps back to `hz` exactly
        double ghz_exact(double hz)
        {
            const double guess = hz / 1e9;
            double c = guess;
            for (int k = 0; k < 4; ++k)
                c = std::nextafter(c, -INFINITY);
            for (int k = 0; k < 9; ++k, c = std::nextafter(c, INFINITY))
                if (c * 1e9 == hz)
                    return c;
            return guess;
        }
    }

    void ScenarioPreset::validate() const
    {
        if (!(frequency_hz > 0.0) || !std::isfinite(frequency_hz))
            throw config_error("scenario " + name + ": frequency must be positive");
        if (!std::isfinite(azimuth_mean))
            throw config_error("scenario " + name + ": azimuth mean must be finite");
        if (!(elevation_mean >= 0.0 && elevation_mean <= pi / 2))
            throw config_error("scenario " + name + ": elevation mean must lie in [0, 90] degrees");
        for (double s : {tx_azimuth_spread, tx_elevation_spread, rx_azimuth_spread, rx_elevation_spread})
            if (!(s > 0.0) || !std::isfinite(s))
                throw config_error("scenario " + name + ": angle spreads must be positive");
        if (!(element_area > 0.0))
            throw config_error("scenario " + name + ": element area must be positive");
        if (!(aperture_efficiency > 0.0 && aperture_efficiency < 1.0))
            throw config_error("scenario " + name + ": aperture efficiency must lie in (0, 1)");
    }

    AngleDistribution ScenarioPreset::tx_distribution() const
    {
        return AngleDistribution::make(azimuth_mean, tx_azimuth_spread, elevation_mean, tx_elevation_spread);
    }

    AngleDistribution ScenarioPreset::rx_distribution() const
    {
        return AngleDistribution::make(azimuth_mean, rx_azimuth_spread, elevation_mean, rx_elevation_spread);
    }

    std::vector<std::string> builtin_preset_names()
    {
        std::vector<std::string> out;
        for (const auto &r : table_rows)
            out.emplace_back(r.name);
        return out;
    }

    ScenarioPreset builtin_preset(std::string_view name)
    {
        for (const auto &r : table_rows)
        {
            if (name != r.name)
                continue;
            ScenarioPreset p;
            p.name = r.name;
            p.frequency_hz = 6.0e9;
            p.azimuth_mean = deg_to_rad(90.0);
            p.elevation_mean = deg_to_rad(45.0);
            p.tx_azimuth_spread = deg_to_rad(r.tx_az);
            p.tx_elevation_spread = deg_to_rad(r.tx_el);
            p.rx_azimuth_spread = deg_to_rad(r.rx_az);
            p.rx_elevation_spread = deg_to_rad(r.rx_el);
            p.element_area = 1.0 / 64.0;
            p.aperture_efficiency = 0.6;
            return p;
        }
        std::string valid;
        for (const auto &r : table_rows)
            valid += (valid.empty() ? "" : ", ") + std::string(r.name);
        throw config_error("unknown scenario preset '" + std::string(name) + "' (valid: " + valid + ")");
    }

    std::string_view scheme_name(ApertureScheme scheme)
    {
        return scheme == ApertureScheme::discrete ? "discrete" : "continuous";
    }

    void ScenarioConfig::validate() const
    {
        scenario.validate();
        tx.validate();
        rx.validate();
        if (!std::isfinite(snr_db))
            throw config_error("scenario " + scenario.name + ": SNR must be finite");
    }

    ScenarioConfig default_config(std::string_view preset_name)
    {
        return parse_scenario("{\"preset\":\"" + std::string(preset_name) + "\"}");
    }

    ScenarioConfig parse_scenario(std::string_view text)
    {
        json doc;
        try
        {
            doc = json::parse(text);
        }
        catch (const json::parse_error &e)
        {
            throw config_error(std::string("scenario: invalid JSON: ") + e.what());
        }
        if (!doc.is_object())
            throw config_error("scenario $: expected a JSON object");
        for (const auto &item : doc.items())
            if (!known_keys.contains(item.key()))
                fail(item.key(), "unknown key");

        ScenarioPreset p;
        if (doc.contains("preset"))
        {
            try
            {
                p = builtin_preset(validated_string(doc, "preset"));
            }
            catch (const config_error &e)
            {
                fail("preset", e.what());
            }
        }
        else
        {
            for (const char *key : full_set)
                if (!doc.contains(key))
                    fail(key, "required when no preset is given (name a preset or supply the full parameter set)");
            p.name = "custom";
        }

        if (doc.contains("name"))
            p.name = validated_string(doc, "name");
        if (doc.contains("frequency_ghz"))
            p.frequency_hz = positive(doc, "frequency_ghz") * 1e9;
        if (doc.contains("azimuth_mean_deg"))
            p.azimuth_mean = deg_to_rad(number(doc, "azimuth_mean_deg"));
        if (doc.contains("elevation_mean_deg"))
        {
            const double e = number(doc, "elevation_mean_deg");
            if (!(e >= 0.0 && e <= 90.0))
                fail("elevation_mean_deg", "must lie in [0, 90], got " + json(e).dump());
            p.elevation_mean = deg_to_rad(e);
        }
        if (doc.contains("tx_spread_az_deg"))
            p.tx_azimuth_spread = deg_to_rad(positive(doc, "tx_spread_az_deg"));
        if (doc.contains("tx_spread_el_deg"))
            p.tx_elevation_spread = deg_to_rad(positive(doc, "tx_spread_el_deg"));
        if (doc.contains("rx_spread_az_deg"))
            p.rx_azimuth_spread = deg_to_rad(positive(doc, "rx_spread_az_deg"));
        if (doc.contains("rx_spread_el_deg"))
            p.rx_elevation_spread = deg_to_rad(positive(doc, "rx_spread_el_deg"));
        if (doc.contains("aperture_efficiency"))
        {
            const double eta = number(doc, "aperture_efficiency");
            if (!(eta > 0.0 && eta < 1.0))
                fail("aperture_efficiency", "must lie in (0, 1), got " + json(eta).dump());
            p.aperture_efficiency = eta;
        }

        const double spacing = doc.contains("spacing_wavelengths") ? positive(doc, "spacing_wavelengths") : 0.25;
        if (doc.contains("element_area_wavelengths_sq"))
        {
            const double area = positive(doc, "element_area_wavelengths_sq");
            if (area > spacing * spacing * (1.0 + 1e-12))
                fail("element_area_wavelengths_sq", "exceeds spacing^2 = " + json(spacing * spacing).dump());
            p.element_area = area;
        }
        else
            p.element_area = std::min(p.element_area, spacing * spacing); // elements cannot overlap

        double len = 15.0;
        if (doc.contains("aperture_wavelengths"))
            len = positive(doc, "aperture_wavelengths");
        double len_x = doc.contains("aperture_x_wavelengths") ? positive(doc, "aperture_x_wavelengths") : len;
        double len_y = doc.contains("aperture_y_wavelengths") ? positive(doc, "aperture_y_wavelengths") : len;

        auto side = [&](const std::string &prefix)
        {
            PlanarArrayConfig a;
            a.len_x = doc.contains(prefix + "aperture_x_wavelengths") ? positive(doc, prefix + "aperture_x_wavelengths") : len_x;
            a.len_y = doc.contains(prefix + "aperture_y_wavelengths") ? positive(doc, prefix + "aperture_y_wavelengths") : len_y;
            a.spacing = spacing;
            a.element_area = p.element_area;
            a.aperture_efficiency = p.aperture_efficiency;
            a.wavelength = p.wavelength();
            if (a.n_x() < 1 || a.n_y() < 1)
                fail(prefix + "aperture_wavelengths", "aperture is smaller than one element spacing");
            return a;
        };

        ScenarioConfig c;
        c.scenario = p;
        c.tx = side("tx_");
        c.rx = side("rx_");
        if (doc.contains("scheme"))
        {
            const auto s = validated_string(doc, "scheme");
            if (s == "discrete")
                c.scheme = ApertureScheme::discrete;
            else if (s == "continuous")
                c.scheme = ApertureScheme::continuous;
            else
                fail("scheme", "expected \"discrete\" or \"continuous\", got \"" + s + "\"");
        }
        if (doc.contains("snr_db"))
            c.snr_db = number(doc, "snr_db");

        try
        {
            c.validate();
        }
        catch (const config_error &e)
        {
            throw config_error(std::string("scenario $: ") + e.what());
        }
        return c;
    }

    std::string serialize_scenario(const ScenarioConfig &c)
    {
        const auto &p = c.scenario;
        nlohmann::ordered_json j;
        j["name"] = p.name;
        j["frequency_ghz"] = ghz_exact(p.frequency_hz);
        j["azimuth_mean_deg"] = degrees_exact(p.azimuth_mean);
        j["elevation_mean_deg"] = degrees_exact(p.elevation_mean);
        j["tx_spread_az_deg"] = degrees_exact(p.tx_azimuth_spread);
        j["tx_spread_el_deg"] = degrees_exact(p.tx_elevation_spread);
        j["rx_spread_az_deg"] = degrees_exact(p.rx_azimuth_spread);
        j["rx_spread_el_deg"] = degrees_exact(p.rx_elevation_spread);
        j["tx_aperture_x_wavelengths"] = c.tx.len_x;
        j["tx_aperture_y_wavelengths"] = c.tx.len_y;
        j["rx_aperture_x_wavelengths"] = c.rx.len_x;
        j["rx_aperture_y_wavelengths"] = c.rx.len_y;
        j["spacing_wavelengths"] = c.tx.spacing;
        j["element_area_wavelengths_sq"] = p.element_area;
        j["aperture_efficiency"] = p.aperture_efficiency;
        j["scheme"] = std::string(scheme_name(c.scheme));
        j["snr_db"] = c.snr_db;
        return j.dump(2) + "\n";
    }
}
