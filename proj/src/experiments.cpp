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


#include "holomimo/experiments.hpp"

#include "holomimo/random.hpp"

#include "json.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace holomimo
{
    namespace
    {
        constexpr std::array<std::pair<SweepAxis, const char *>, 5> axis_names{{
            {SweepAxis::azimuth_spread, "azimuth_spread"},
            {SweepAxis::elevation_spread, "elevation_spread"},
            {SweepAxis::snr_db, "snr_db"},
            {SweepAxis::spacing, "spacing"},
            {SweepAxis::aperture, "aperture"},
        }};

        constexpr const char *csv_header = "series,axis,axis_value,capacity_bits,std_error,n_r,n_s,wall_time_s";

        std::string csv_field(const std::string &s)
        {
            if (s.find_first_of(",\"\r\n") == std::string::npos)
                return s;
            std::string out = "\"";
            for (char c : s)
            {
                if (c == '"')
                    out += '"';
                out += c;
            }
            return out + "\"";
        }

        std::vector<std::string> split_csv_line(std::string_view line, std::size_t line_no)
        {
            std::vector<std::string> fields;
            std::string cur;
            bool quoted = false;
            for (std::size_t i = 0; i < line.size(); ++i)
            {
                const char c = line[i];
                if (quoted)
                {
                    if (c == '"' && i + 1 < line.size() && line[i + 1] == '"')
                        cur += '"', ++i;
                    else if (c == '"')
                        quoted = false;
                    else
                        cur += c;
                }
                else if (c == '"' && cur.empty())
                    quoted = true;
                else if (c == ',')
                    fields.push_back(std::move(cur)), cur.clear();
                else
                    cur += c;
            }
            if (quoted)
                throw config_error("csv line " + std::to_string(line_no) + ": unterminated quote");
            fields.push_back(std::move(cur));
            return fields;
        }

        double parse_double(const std::string &s, std::size_t line_no)
        {
            double x = 0.0;
            const auto res = std::from_chars(s.data(), s.data() + s.size(), x);
            if (res.ec != std::errc() || res.ptr != s.data() + s.size())
                throw config_error("csv line " + std::to_string(line_no) + ": not a number: '" + s + "'");
            return x;
        }

        Index parse_index(const std::string &s, std::size_t line_no)
        {
            long long x = 0;
            const auto res = std::from_chars(s.data(), s.data() + s.size(), x);
            if (res.ec != std::errc() || res.ptr != s.data() + s.size() || x < 0)
                throw config_error("csv line " + std::to_string(line_no) + ": not a count: '" + s + "'");
            return static_cast<Index>(x);
        }

        std::string xml_escape(const std::string &s)
        {
            std::string out;
            for (char c : s)
            {
                switch (c)
                {
                case '&': out += "&amp;"; break;
                case '<': out += "&lt;"; break;
                case '>': out += "&gt;"; break;
                case '"': out += "&quot;"; break;
                case '\'': out += "&apos;"; break;
                default: out += c;
                }
            }
            return out;
        }

        std::string fixed(double x, int digits)
        {
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.*f", digits, x);
            return buf;
        }

        std::string significant(double x)
        {
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.10g", x);
            return buf;
        }

        std::string tick_label(double x)
        {
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.4g", x);
            return buf;
        }

        // Round step (1, 2, 5 x 10^k) giving about `target` ticks over span
        double nice_step(double span, int target)
        {
            const double raw = span / target;
            const double mag = std::pow(10.0, std::floor(std::log10(raw)));
            for (double m : {1.0, 2.0, 5.0, 10.0})
                if (raw <= m * mag)
                    return m * mag;
            return 10.0 * mag;
        }

        std::string wavelength_label(double len)
        {
            return format_double(len) + "λ";
        }

        // Scenario series at a given aperture, lambda/4 spacing, 30 dB
        ScenarioConfig scaled_default(std::string_view preset, double aperture)
        {
            return apply_axis(default_config(preset), SweepAxis::aperture, aperture);
        }

        void check_scale(double scale)
        {
            if (!(scale > 0.0) || !std::isfinite(scale))
                throw config_error("scale must be positive, got " + format_double(scale));
        }
    }

    std::string format_double(double x)
    {
        std::array<char, 32> buf{};
        const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x);
        return std::string(buf.data(), res.ptr);
    }

    std::string_view axis_name(SweepAxis axis)
    {
        for (const auto &[a, n] : axis_names)
            if (a == axis)
                return n;
        return "unknown";
    }

    SweepAxis parse_axis(std::string_view name)
    {
        for (const auto &[a, n] : axis_names)
            if (name == n)
                return a;
        std::string valid;
        for (const auto &[a, n] : axis_names)
            valid += (valid.empty() ? "" : ", ") + std::string(n);
        throw config_error("unknown sweep axis '" + std::string(name) + "' (valid: " + valid + ")");
    }

    std::string axis_label(SweepAxis axis)
    {
        switch (axis)
        {
        case SweepAxis::azimuth_spread: return "Azimuth angle spread (deg)";
        case SweepAxis::elevation_spread: return "Elevation angle spread (deg)";
        case SweepAxis::snr_db: return "SNR (dB)";
        case SweepAxis::spacing: return "Antenna spacing (wavelengths)";
        case SweepAxis::aperture: return "Aperture side (wavelengths)";
        }
        return "";
    }

    ScenarioConfig apply_axis(const ScenarioConfig &config, SweepAxis axis, double value)
    {
        ScenarioConfig c = config;
        switch (axis)
        {
        case SweepAxis::azimuth_spread:
            c.scenario.tx_azimuth_spread = c.scenario.rx_azimuth_spread = deg_to_rad(value);
            break;
        case SweepAxis::elevation_spread:
            c.scenario.tx_elevation_spread = c.scenario.rx_elevation_spread = deg_to_rad(value);
            break;
        case SweepAxis::snr_db:
            c.snr_db = value;
            break;
        case SweepAxis::spacing:
            c.scenario.element_area = std::min(c.scenario.element_area, value * value);
            for (auto *a : {&c.tx, &c.rx})
            {
                a->spacing = value;
                a->element_area = c.scenario.element_area;
            }
            break;
        case SweepAxis::aperture:
            for (auto *a : {&c.tx, &c.rx})
                a->len_x = a->len_y = value;
            break;
        }
        return c;
    }

    void SweepSpec::validate() const
    {
        if (values.empty())
            throw config_error("sweep: values list is empty");
        if (values.size() > 1)
        {
            const bool up = values[1] > values[0];
            for (std::size_t i = 1; i < values.size(); ++i)
                if (!(up ? values[i] > values[i - 1] : values[i] < values[i - 1]))
                    throw config_error("sweep: values must be strictly monotone (index " + std::to_string(i) + ")");
        }
        for (double v : values)
            if (!std::isfinite(v))
                throw config_error("sweep: values must be finite");
        if (series.empty())
            throw config_error("sweep: no series");
        if (trials < 2)
            throw config_error("sweep: trials must be at least 2, got " + std::to_string(trials));
        for (const auto &s : series)
            for (double v : values)
                apply_axis(s.config, axis, v).validate();
    }

    PointResult evaluate_point(const ScenarioConfig &config, Index trials, Seed seed)
    {
        config.validate();
        const auto rx_lattice = enumerate_lattice(config.rx);
        const auto tx_lattice = enumerate_lattice(config.tx);
        const auto rx = compute_spectrum(config.scenario.rx_distribution(), rx_lattice);
        const auto tx = compute_spectrum(config.scenario.tx_distribution(), tx_lattice);
        const double snr = db_to_linear(config.snr_db);

        PointResult out;
        out.estimate = config.scheme == ApertureScheme::discrete
                           ? capacity_discrete_aperture(rx, tx, config.arrays(), snr, trials, seed)
                           : capacity_continuous_aperture(rx, tx, config.arrays(), snr, trials, seed);
        out.n_r = rx_lattice.cardinality();
        out.n_s = tx_lattice.cardinality();
        out.upper_bound = capacity_upper_bound(out.estimate.budget, out.n_r);
        out.low_snr = capacity_low_snr(out.estimate.budget);
        if (!std::isfinite(out.estimate.mean_bits) || !std::isfinite(out.estimate.std_error))
            throw numeric_error("capacity estimate is not finite for scenario " + config.scenario.name);
        return out;
    }

    PointResult run_point(const ScenarioConfig &config, Index trials, Seed seed, std::ostream &report)
    {
        const auto r = evaluate_point(config, trials, seed);
        const auto &b = r.estimate.budget;
        report << "scenario      " << config.scenario.name << " (" << scheme_name(config.scheme) << " aperture)\n"
               << "arrays        tx " << format_double(config.tx.len_x) << "x" << format_double(config.tx.len_y)
               << ", rx " << format_double(config.rx.len_x) << "x" << format_double(config.rx.len_y)
               << " wavelengths, spacing " << format_double(config.tx.spacing) << "\n"
               << "snr_db        " << format_double(config.snr_db) << "\n"
               << "N_R, N_S      " << b.n_rx_elements << ", " << b.n_tx_elements << "\n"
               << "n_R, n_S      " << r.n_r << ", " << r.n_s << "\n"
               << "trials, seed  " << r.estimate.trials << ", " << seed << "\n"
               << "capacity      " << significant(r.estimate.mean_bits) << " +- " << significant(r.estimate.std_error) << " bit/s/Hz\n"
               << "upper bound   " << significant(r.upper_bound) << " bit/s/Hz\n"
               << "low-SNR limit " << significant(r.low_snr) << " bit/s/Hz\n";
        return r;
    }

    Seed sweep_point_seed(Seed master, std::size_t series, std::size_t value)
    {
        return derive_trial_seed(derive_trial_seed(master, series), value);
    }

    SweepResult run_sweep(const SweepSpec &spec, const ProgressFn &progress)
    {
        spec.validate();
        SweepResult result;
        const std::size_t total = spec.series.size() * spec.values.size();
        for (std::size_t s = 0; s < spec.series.size(); ++s)
            for (std::size_t v = 0; v < spec.values.size(); ++v)
            {
                const auto config = apply_axis(spec.series[s].config, spec.axis, spec.values[v]);
                const auto t0 = std::chrono::steady_clock::now();
                const auto point = evaluate_point(config, spec.trials, sweep_point_seed(spec.master_seed, s, v));
                const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;

                SweepRow row;
                row.series = spec.series[s].label;
                row.axis = spec.axis;
                row.axis_value = spec.values[v];
                row.capacity_bits = point.estimate.mean_bits;
                row.std_error = point.estimate.std_error;
                row.n_r = point.n_r;
                row.n_s = point.n_s;
                row.wall_time_s = spec.record_timing ? dt.count() : 0.0;
                result.rows.push_back(row);
                if (progress)
                    progress(result.rows.size(), total, row);
            }

        if (!spec.out_csv.empty())
            emit_csv(result, spec.out_csv);
        if (!spec.out_svg.empty())
            emit_svg(result, spec.out_svg, spec.title, axis_label(spec.axis));
        return result;
    }

    SweepSpec parse_sweep_spec(std::string_view text)
    {
        using json = nlohmann::json;
        json doc;
        try
        {
            doc = json::parse(text);
        }
        catch (const json::parse_error &e)
        {
            throw config_error(std::string("sweep spec: invalid JSON: ") + e.what());
        }
        if (!doc.is_object())
            throw config_error("sweep spec $: expected a JSON object");
        for (const auto &item : doc.items())
            if (item.key() != "axis" && item.key() != "values" && item.key() != "series" &&
                item.key() != "trials" && item.key() != "seed" && item.key() != "title")
                throw config_error("sweep spec $." + item.key() + ": unknown key");

        SweepSpec spec;
        if (!doc.contains("axis") || !doc["axis"].is_string())
            throw config_error("sweep spec $.axis: required string");
        spec.axis = parse_axis(doc["axis"].get<std::string>());

        if (!doc.contains("values") || !doc["values"].is_array())
            throw config_error("sweep spec $.values: required array of numbers");
        for (std::size_t i = 0; i < doc["values"].size(); ++i)
        {
            const auto &v = doc["values"][i];
            if (!v.is_number())
                throw config_error("sweep spec $.values[" + std::to_string(i) + "]: expected a number");
            spec.values.push_back(v.get<double>());
        }

        if (!doc.contains("series") || !doc["series"].is_array())
            throw config_error("sweep spec $.series: required array");
        for (std::size_t i = 0; i < doc["series"].size(); ++i)
        {
            const auto &s = doc["series"][i];
            const std::string path = "sweep spec $.series[" + std::to_string(i) + "]";
            if (!s.is_object())
                throw config_error(path + ": expected an object");
            for (const auto &item : s.items())
                if (item.key() != "label" && item.key() != "config")
                    throw config_error(path + "." + item.key() + ": unknown key");
            if (!s.contains("config") || !s["config"].is_object())
                throw config_error(path + ".config: required object");
            SweepSeries series;
            try
            {
                series.config = parse_scenario(s["config"].dump());
            }
            catch (const config_error &e)
            {
                throw config_error(path + ".config: " + e.what());
            }
            if (s.contains("label"))
            {
                if (!s["label"].is_string())
                    throw config_error(path + ".label: expected a string");
                series.label = s["label"].get<std::string>();
            }
            else
                series.label = series.config.scenario.name;
            spec.series.push_back(std::move(series));
        }

        if (doc.contains("trials"))
        {
            if (!doc["trials"].is_number_integer())
                throw config_error("sweep spec $.trials: expected an integer");
            spec.trials = doc["trials"].get<Index>();
        }
        if (doc.contains("seed"))
        {
            if (!doc["seed"].is_number_unsigned())
                throw config_error("sweep spec $.seed: expected a non-negative integer");
            spec.master_seed = doc["seed"].get<Seed>();
        }
        if (doc.contains("title"))
        {
            if (!doc["title"].is_string())
                throw config_error("sweep spec $.title: expected a string");
            spec.title = doc["title"].get<std::string>();
        }
        spec.validate();
        return spec;
    }

    SweepSpec fig4_spec(double scale, Index trials, Seed seed)
    {
        check_scale(scale);
        SweepSpec spec;
        spec.axis = SweepAxis::azimuth_spread;
        for (int a = 10; a <= 100; a += 10)
            spec.values.push_back(a);
        const auto base = scaled_default("UMa", 15.0 * scale);
        for (double el : {2.0, 5.0, 10.0, 20.0})
            spec.series.push_back({"elevation spread " + format_double(el) + " deg",
                                   apply_axis(base, SweepAxis::elevation_spread, el)});
        spec.trials = trials;
        spec.master_seed = seed;
        spec.title = "Capacity vs azimuth angle spread, " + wavelength_label(15.0 * scale) + " aperture, 30 dB";
        return spec;
    }

    SweepSpec fig5_spec(double scale, Index trials, Seed seed)
    {
        check_scale(scale);
        SweepSpec spec;
        spec.axis = SweepAxis::snr_db;
        for (int s = -10; s <= 40; s += 5)
            spec.values.push_back(s);
        for (double len : {15.0 * scale, 30.0 * scale})
            for (const auto &name : builtin_preset_names())
                spec.series.push_back({name + " " + wavelength_label(len), scaled_default(name, len)});
        spec.trials = trials;
        spec.master_seed = seed;
        spec.title = "Capacity vs SNR";
        return spec;
    }

    SweepSpec fig6_spec(double scale, Index trials, Seed seed)
    {
        check_scale(scale);
        SweepSpec spec;
        spec.axis = SweepAxis::spacing;
        spec.values = {1.0 / 2, 1.0 / 4, 1.0 / 6, 1.0 / 8, 1.0 / 12, 1.0 / 16};
        for (const auto &name : builtin_preset_names())
            spec.series.push_back({name, scaled_default(name, 15.0 * scale)});
        spec.trials = trials;
        spec.master_seed = seed;
        spec.title = "Capacity vs antenna spacing, " + wavelength_label(15.0 * scale) + " aperture, 30 dB";
        return spec;
    }

    std::string format_csv(const SweepResult &result)
    {
        std::string out = std::string(csv_header) + "\n";
        for (const auto &r : result.rows)
        {
            out += csv_field(r.series) + "," + std::string(axis_name(r.axis)) + "," + format_double(r.axis_value) + "," +
                   format_double(r.capacity_bits) + "," + format_double(r.std_error) + "," +
                   std::to_string(r.n_r) + "," + std::to_string(r.n_s) + "," + format_double(r.wall_time_s) + "\n";
        }
        return out;
    }

    SweepResult parse_csv(std::string_view text)
    {
        SweepResult result;
        std::size_t line_no = 0, pos = 0;
        bool header = true;
        while (pos < text.size())
        {
            std::size_t end = text.find('\n', pos);
            if (end == std::string_view::npos)
                end = text.size();
            std::string_view line = text.substr(pos, end - pos);
            pos = end + 1;
            ++line_no;
            if (!line.empty() && line.back() == '\r')
                line.remove_suffix(1);
            if (header)
            {
                if (line != csv_header)
                    throw config_error("csv line 1: unexpected header");
                header = false;
                continue;
            }
            if (line.empty())
                continue;
            const auto f = split_csv_line(line, line_no);
            if (f.size() != 8)
                throw config_error("csv line " + std::to_string(line_no) + ": expected 8 fields, got " + std::to_string(f.size()));
            SweepRow r;
            r.series = f[0];
            r.axis = parse_axis(f[1]);
            r.axis_value = parse_double(f[2], line_no);
            r.capacity_bits = parse_double(f[3], line_no);
            r.std_error = parse_double(f[4], line_no);
            r.n_r = parse_index(f[5], line_no);
            r.n_s = parse_index(f[6], line_no);
            r.wall_time_s = parse_double(f[7], line_no);
            result.rows.push_back(std::move(r));
        }
        if (header)
            throw config_error("csv: missing header");
        return result;
    }

    void write_text_file(const std::filesystem::path &path, const std::string &contents)
    {
        std::ofstream f(path, std::ios::binary | std::ios::trunc);
        if (!f)
            throw io_error("cannot open '" + path.string() + "' for writing");
        f.write(contents.data(), static_cast<std::streamsize>(contents.size()));
        f.close();
        if (!f)
            throw io_error("failed writing '" + path.string() + "'");
    }

    std::string read_text_file(const std::filesystem::path &path)
    {
        std::ifstream f(path, std::ios::binary);
        if (!f)
            throw io_error("cannot open '" + path.string() + "' for reading");
        std::ostringstream ss;
        ss << f.rdbuf();
        if (f.bad())
            throw io_error("failed reading '" + path.string() + "'");
        return ss.str();
    }

    void emit_csv(const SweepResult &result, const std::filesystem::path &path)
    {
        write_text_file(path, format_csv(result));
    }

    std::string format_svg(const SweepResult &result, const std::string &title, const std::string &x_label)
    {
        if (result.rows.empty())
            throw config_error("emit_svg: result has no rows");

        constexpr double width = 760, height = 500;
        constexpr double left = 80, right = 220, top = 50, bottom = 70;
        constexpr std::array<const char *, 8> palette{"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                                      "#9467bd", "#8c564b", "#e377c2", "#17becf"};

        // Series in order of first appearance
        std::vector<std::string> labels;
        for (const auto &r : result.rows)
            if (std::find(labels.begin(), labels.end(), r.series) == labels.end())
                labels.push_back(r.series);

        double x_min = INFINITY, x_max = -INFINITY, y_max = 0.0, y_min = 0.0;
        for (const auto &r : result.rows)
        {
            x_min = std::min(x_min, r.axis_value);
            x_max = std::max(x_max, r.axis_value);
            y_max = std::max(y_max, r.capacity_bits + r.std_error);
            y_min = std::min(y_min, r.capacity_bits - r.std_error);
        }
        if (x_max == x_min)
            x_min -= 0.5, x_max += 0.5;
        if (y_max == y_min)
            y_max = y_min + 1.0;
        const double y_step = nice_step(y_max - y_min, 6);
        y_max = std::ceil(y_max / y_step) * y_step;
        y_min = std::floor(y_min / y_step) * y_step;

        const double pw = width - left - right, ph = height - top - bottom;
        auto sx = [&](double x) { return left + (x - x_min) / (x_max - x_min) * pw; };
        auto sy = [&](double y) { return top + (y_max - y) / (y_max - y_min) * ph; };

        std::ostringstream o;
        o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
          << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
          << "\" viewBox=\"0 0 " << width << " " << height << "\" font-family=\"sans-serif\" font-size=\"12\">\n"
          << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
          << "<text x=\"" << left + pw / 2 << "\" y=\"28\" text-anchor=\"middle\" font-size=\"15\">" << xml_escape(title) << "</text>\n";

        // Axes, grid and ticks
        o << "<g stroke=\"#cccccc\" stroke-width=\"0.5\">\n";
        for (double y = y_min; y <= y_max + 1e-9 * y_step; y += y_step)
            o << "<line x1=\"" << fixed(left, 2) << "\" y1=\"" << fixed(sy(y), 2) << "\" x2=\"" << fixed(left + pw, 2)
              << "\" y2=\"" << fixed(sy(y), 2) << "\"/>\n";
        o << "</g>\n";
        o << "<g stroke=\"black\"><line x1=\"" << left << "\" y1=\"" << top + ph << "\" x2=\"" << left + pw << "\" y2=\"" << top + ph
          << "\"/><line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left << "\" y2=\"" << top + ph << "\"/></g>\n";
        o << "<g text-anchor=\"end\">\n";
        for (double y = y_min; y <= y_max + 1e-9 * y_step; y += y_step)
            o << "<text x=\"" << left - 6 << "\" y=\"" << fixed(sy(y) + 4, 2) << "\">" << tick_label(y) << "</text>\n";
        o << "</g>\n<g text-anchor=\"middle\">\n";
        std::vector<double> xs;
        for (const auto &r : result.rows)
            if (std::find(xs.begin(), xs.end(), r.axis_value) == xs.end())
                xs.push_back(r.axis_value);
        for (double x : xs)
            o << "<text x=\"" << fixed(sx(x), 2) << "\" y=\"" << top + ph + 18 << "\">" << tick_label(x) << "</text>\n";
        o << "</g>\n";
        o << "<text x=\"" << left + pw / 2 << "\" y=\"" << height - 20 << "\" text-anchor=\"middle\">" << xml_escape(x_label) << "</text>\n"
          << "<text transform=\"translate(22," << top + ph / 2 << ") rotate(-90)\" text-anchor=\"middle\">Capacity (bit/s/Hz)</text>\n";

        for (std::size_t s = 0; s < labels.size(); ++s)
        {
            const char *color = palette[s % palette.size()];
            std::vector<const SweepRow *> pts;
            for (const auto &r : result.rows)
                if (r.series == labels[s])
                    pts.push_back(&r);

            o << "<g class=\"series\" stroke=\"" << color << "\" fill=\"" << color << "\">\n";
            if (pts.size() >= 2)
            {
                o << "<polyline fill=\"none\" stroke-width=\"1.8\" points=\"";
                for (std::size_t i = 0; i < pts.size(); ++i)
                    o << (i ? " " : "") << fixed(sx(pts[i]->axis_value), 2) << "," << fixed(sy(pts[i]->capacity_bits), 2);
                o << "\"/>\n";
            }
            for (const auto *p : pts)
            {
                const double x = sx(p->axis_value);
                o << "<line x1=\"" << fixed(x, 2) << "\" y1=\"" << fixed(sy(p->capacity_bits - p->std_error), 2) << "\" x2=\""
                  << fixed(x, 2) << "\" y2=\"" << fixed(sy(p->capacity_bits + p->std_error), 2) << "\"/>\n";
                o << "<circle cx=\"" << fixed(x, 2) << "\" cy=\"" << fixed(sy(p->capacity_bits), 2) << "\" r=\"3\"/>\n";
            }
            o << "</g>\n";

            const double ly = top + 10 + 20 * static_cast<double>(s);
            o << "<line x1=\"" << left + pw + 15 << "\" y1=\"" << ly << "\" x2=\"" << left + pw + 40 << "\" y2=\"" << ly
              << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n"
              << "<text x=\"" << left + pw + 46 << "\" y=\"" << ly + 4 << "\">" << xml_escape(labels[s]) << "</text>\n";
        }
        o << "</svg>\n";
        return o.str();
    }

    void emit_svg(const SweepResult &result, const std::filesystem::path &path,
                  const std::string &title, const std::string &x_label)
    {
        write_text_file(path, format_svg(result, title, x_label));
    }
}
