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

#include <catch_amalgamated.hpp>

using namespace holomimo;
using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::WithinRel;

namespace
{
    std::string error_of(const std::string &doc)
    {
        try
        {
            parse_scenario(doc);
        }
        catch (const config_error &e)
        {
            return e.what();
        }
        return "";
    }
}

TEST_CASE("built-in presets reproduce the parameter table", "[scenarios]")
{
    struct Row
    {
        const char *name;
        double tx_az, tx_el, rx_az, rx_el;
    };
    for (const Row &r : {Row{"UMa", 14.0, 0.3, 65.0, 8.9}, Row{"UMi", 14.7, 0.6, 46.0, 4.4}, Row{"RMa", 7.9, 0.1, 33.0, 3.0}})
    {
        const auto p = builtin_preset(r.name);
        CHECK(p.name == r.name);
        CHECK(degrees_exact(p.tx_azimuth_spread) == r.tx_az);
        CHECK(degrees_exact(p.tx_elevation_spread) == r.tx_el);
        CHECK(degrees_exact(p.rx_azimuth_spread) == r.rx_az);
        CHECK(degrees_exact(p.rx_elevation_spread) == r.rx_el);
        CHECK(degrees_exact(p.azimuth_mean) == 90.0);
        CHECK(degrees_exact(p.elevation_mean) == 45.0);
        CHECK(p.frequency_hz == 6.0e9);
        CHECK(p.element_area == 1.0 / 64.0);
        CHECK(p.aperture_efficiency == 0.6);
        CHECK_NOTHROW(p.validate());
        CHECK_NOTHROW(p.tx_distribution());
    }
    CHECK_THAT(builtin_preset("UMa").wavelength(), WithinRel(0.0499654096666667, 1e-12));
    CHECK(builtin_preset_names() == std::vector<std::string>{"UMa", "UMi", "RMa"});
}

TEST_CASE("unknown preset lists the valid names", "[scenarios]")
{
    try
    {
        builtin_preset("Indoor");
        FAIL("no exception");
    }
    catch (const config_error &e)
    {
        CHECK_THAT(e.what(), ContainsSubstring("Indoor") && ContainsSubstring("UMa") && ContainsSubstring("UMi") && ContainsSubstring("RMa"));
    }
    CHECK_THAT(error_of(R"({"preset":"Indoor"})"), ContainsSubstring("$.preset"));
}

TEST_CASE("preset with square geometry", "[scenarios]")
{
    const auto c = parse_scenario(R"({"preset":"UMa","aperture_wavelengths":15,"spacing_wavelengths":0.25})");
    CHECK(c.scenario == builtin_preset("UMa"));
    for (const auto *a : {&c.tx, &c.rx})
    {
        CHECK(a->len_x == 15.0);
        CHECK(a->len_y == 15.0);
        CHECK(a->spacing == 0.25);
        CHECK(a->n_elements() == 3600);
        CHECK(a->element_area == 1.0 / 64.0);
        CHECK(a->aperture_efficiency == 0.6);
    }
    CHECK(c.scheme == ApertureScheme::discrete);
    CHECK(c.snr_db == 30.0);
    CHECK(c == default_config("UMa"));
}

TEST_CASE("configuration errors name the offending key", "[scenarios]")
{
    CHECK_THAT(error_of(R"({"preset":"UMa","aperture_efficiency":1.5})"), ContainsSubstring("$.aperture_efficiency") && ContainsSubstring("(0, 1)"));
    CHECK_THAT(error_of("{}"), ContainsSubstring("preset"));
    CHECK_THAT(error_of(R"({"preset":"UMa","colour":"red"})"), ContainsSubstring("$.colour") && ContainsSubstring("unknown key"));
    CHECK_THAT(error_of(R"({"preset":"UMa","aperture_wavelengths":"big"})"), ContainsSubstring("$.aperture_wavelengths") && ContainsSubstring("number"));
    CHECK_THAT(error_of(R"({"preset":"UMa","tx_spread_az_deg":0})"), ContainsSubstring("$.tx_spread_az_deg"));
    CHECK_THAT(error_of(R"({"preset":"UMa","elevation_mean_deg":95})"), ContainsSubstring("$.elevation_mean_deg"));
    CHECK_THAT(error_of(R"({"preset":"UMa","scheme":"hybrid"})"), ContainsSubstring("$.scheme"));
    CHECK_THAT(error_of(R"({"preset":"UMa","spacing_wavelengths":0.1,"element_area_wavelengths_sq":0.05})"), ContainsSubstring("$.element_area_wavelengths_sq"));
    CHECK_THAT(error_of(R"({"preset":"UMa","aperture_wavelengths":0.1})"), ContainsSubstring("aperture"));
    CHECK_THAT(error_of(R"([1,2])"), ContainsSubstring("object"));
    CHECK_THAT(error_of(R"({"preset":)"), ContainsSubstring("invalid JSON"));
}

TEST_CASE("full parameter set without a preset", "[scenarios]")
{
    const char *doc = R"({"frequency_ghz":28,"azimuth_mean_deg":80,"elevation_mean_deg":30,
        "tx_spread_az_deg":20,"tx_spread_el_deg":2,"rx_spread_az_deg":40,"rx_spread_el_deg":6,
        "element_area_wavelengths_sq":0.01,"aperture_efficiency":0.5,"aperture_wavelengths":8})";
    const auto c = parse_scenario(doc);
    CHECK(c.scenario.name == "custom");
    CHECK(c.scenario.frequency_hz == 28e9);
    CHECK(c.tx.wavelength == speed_of_light / 28e9);
    CHECK(c.tx.element_area == 0.01);
    CHECK(degrees_exact(c.scenario.rx_azimuth_spread) == 40.0);

    std::string partial = R"({"frequency_ghz":28,"azimuth_mean_deg":80})";
    CHECK_THAT(error_of(partial), ContainsSubstring("required"));
}

TEST_CASE("per-axis and per-side apertures", "[scenarios]")
{
    const auto c = parse_scenario(R"({"preset":"RMa","aperture_wavelengths":10,"aperture_y_wavelengths":6,"rx_aperture_x_wavelengths":12})");
    CHECK(c.tx.len_x == 10.0);
    CHECK(c.tx.len_y == 6.0);
    CHECK(c.rx.len_x == 12.0);
    CHECK(c.rx.len_y == 6.0);
}

TEST_CASE("fine spacing caps the element area", "[scenarios]")
{
    const auto c = parse_scenario(R"({"preset":"UMi","spacing_wavelengths":0.0625})");
    CHECK(c.tx.element_area == 0.0625 * 0.0625);
    CHECK(c.scenario.element_area == 0.0625 * 0.0625);
    CHECK(builtin_preset("UMi").element_area == 1.0 / 64.0); // built-ins are never modified
}

TEST_CASE("serialization round-trips exactly", "[scenarios]")
{
    const char *docs[] = {
        R"({"preset":"UMa"})",
        R"({"preset":"UMi","aperture_wavelengths":7.3,"spacing_wavelengths":0.1666666,"scheme":"continuous","snr_db":-12.5})",
        R"({"preset":"RMa","tx_spread_az_deg":7.9000001,"rx_spread_el_deg":0.123456789,"frequency_ghz":2.4})",
        R"({"preset":"UMa","name":"my \"site\"","azimuth_mean_deg":-37.1,"elevation_mean_deg":0,"tx_aperture_y_wavelengths":3.3})",
        R"({"frequency_ghz":3.5,"azimuth_mean_deg":14.7,"elevation_mean_deg":89.9,"tx_spread_az_deg":1e-3,
            "tx_spread_el_deg":0.3,"rx_spread_az_deg":359,"rx_spread_el_deg":90,"element_area_wavelengths_sq":0.0001,
            "aperture_efficiency":0.999,"spacing_wavelengths":0.01,"aperture_wavelengths":0.5})",
    };
    for (const char *doc : docs)
    {
        const auto c = parse_scenario(doc);
        const auto text = serialize_scenario(c);
        INFO(text);
        CHECK(parse_scenario(text) == c);
        CHECK(serialize_scenario(parse_scenario(text)) == text);
    }
}
