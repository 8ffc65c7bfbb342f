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

#include "holomimo/angular_spectrum.hpp"
#include "holomimo/parallel.hpp"
#include "holomimo/quadrature.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace holomimo
{
    namespace
    {
        const double sqrt2 = std::sqrt(2.0);

        // Relative tolerances of the outer (azimuth) and inner (elevation) passes. Per-cell
        // variances span hundreds of decades, so there is no absolute floor.
        const QuadratureOptions outer_options{0.0, 1e-10, 20};
        const QuadratureOptions inner_options{0.0, 1e-11, 20};

        double wrap_offset(double phi, double mean)
        {
            double d = phi - mean;
            d -= 2.0 * pi * std::floor((d + pi) / (2.0 * pi));
            return d;
        }

        double elevation_density(const AngleDistribution &dist, double theta)
        {
            if (dist.isotropic)
                return std::sin(theta) / (2.0 * pi);
            const double s = dist.elevation_spread;
            return dist.q_l / (sqrt2 * s) * std::exp(-sqrt2 * std::abs(theta - dist.elevation_mean) / s);
        }

        double azimuth_density(const AngleDistribution &dist, double phi)
        {
            if (dist.isotropic)
                return 1.0;
            const double s = dist.azimuth_spread;
            const double d = wrap_offset(phi, dist.azimuth_mean);
            return dist.q_g / (std::sqrt(2.0 * pi) * s) * std::exp(-d * d / (2.0 * s * s));
        }

        void validate_spreads(double azimuth_spread, double elevation_spread)
        {
            if (!(azimuth_spread > 0.0) || !std::isfinite(azimuth_spread))
                throw domain_error("azimuth spread must be positive and finite");
            if (!(elevation_spread > 0.0) || !std::isfinite(elevation_spread))
                throw domain_error("elevation spread must be positive and finite");
        }
    }

    AngleDistribution AngleDistribution::make(double azimuth_mean, double azimuth_spread,
                                              double elevation_mean, double elevation_spread)
    {
        validate_spreads(azimuth_spread, elevation_spread);
        if (!(elevation_mean >= 0.0 && elevation_mean <= pi / 2))
            throw domain_error("elevation mean must lie in [0, pi/2]");
        if (!std::isfinite(azimuth_mean))
            throw domain_error("azimuth mean must be finite");

        AngleDistribution d;
        d.azimuth_mean = azimuth_mean;
        d.azimuth_spread = azimuth_spread;
        d.elevation_mean = elevation_mean;
        d.elevation_spread = elevation_spread;
        const auto q = compute_normalizers(d);
        d.q_l = q.q_l;
        d.q_g = q.q_g;
        return d;
    }

    AngleDistribution AngleDistribution::isotropic_hemisphere()
    {
        AngleDistribution d;
        d.isotropic = true;
        return d;
    }

    Normalizers compute_normalizers(const AngleDistribution &dist)
    {
        validate_spreads(dist.azimuth_spread, dist.elevation_spread);
        const double s = dist.elevation_spread;
        const double lower = sqrt2 * dist.elevation_mean / s;
        const double upper = sqrt2 * (pi / 2 - dist.elevation_mean) / s;
        // Mass kept on each side of theta0: (1 - exp(-x)) / 2
        const double tl_mass = -0.5 * std::expm1(-lower) - 0.5 * std::expm1(-upper);
        const double wg_mass = std::erf(pi / (sqrt2 * dist.azimuth_spread));
        return {1.0 / tl_mass, 1.0 / wg_mass};
    }

    double eval_pdf(const AngleDistribution &dist, double theta, double phi)
    {
        if (!(theta >= 0.0 && theta <= pi / 2))
            throw domain_error("elevation " + std::to_string(theta) + " outside [0, pi/2]");
        return elevation_density(dist, theta) * azimuth_density(dist, phi);
    }

    double CellDecomposition::edge_radius(Edge e, double psi) const
    {
        switch (e)
        {
        case Edge::origin:
            return 0.0;
        case Edge::left:
            return a == 0.0 ? 0.0 : a / std::cos(psi);
        case Edge::right:
            return b / std::cos(psi);
        case Edge::bottom:
            return c == 0.0 ? 0.0 : c / std::sin(psi);
        case Edge::top:
            return d / std::sin(psi);
        }
        return 0.0;
    }

    double CellDecomposition::azimuth(double psi) const
    {
        return std::atan2(sign_y * std::sin(psi), sign_x * std::cos(psi));
    }

    CellDecomposition decompose_cell(const WavenumberCell &cell)
    {
        CellDecomposition dec;
        // Cell edges sit on multiples of 1/len, so every cell lies in a single closed quadrant
        if (cell.kx_hi <= 0.0)
        {
            dec.sign_x = -1;
            dec.a = -cell.kx_hi;
            dec.b = -cell.kx_lo;
        }
        else
        {
            dec.a = cell.kx_lo;
            dec.b = cell.kx_hi;
        }
        if (cell.ky_hi <= 0.0)
        {
            dec.sign_y = -1;
            dec.c = -cell.ky_hi;
            dec.d = -cell.ky_lo;
        }
        else
        {
            dec.c = cell.ky_lo;
            dec.d = cell.ky_hi;
        }

        auto add = [&](double lo, double hi, Edge entry, Edge exit)
        {
            if (hi > lo)
                dec.regions.push_back({lo, hi, entry, exit});
        };

        const double psi_bd = std::atan2(dec.d, dec.b);
        if (dec.a == 0.0 && dec.c == 0.0)
        {
            add(0.0, psi_bd, Edge::origin, Edge::right);
            add(psi_bd, pi / 2, Edge::origin, Edge::top);
            return dec;
        }

        const double psi_bc = std::atan2(dec.c, dec.b);
        const double psi_ac = std::atan2(dec.c, dec.a);
        const double psi_ad = std::atan2(dec.d, dec.a);
        const double m1 = std::min(psi_ac, psi_bd);
        const double m2 = std::max(psi_ac, psi_bd);
        add(psi_bc, m1, Edge::bottom, Edge::right);
        if (psi_ac <= psi_bd)
            add(m1, m2, Edge::left, Edge::right);
        else
            add(m1, m2, Edge::bottom, Edge::top);
        add(m2, psi_ad, Edge::left, Edge::top);
        return dec;
    }

    double cell_variance(const AngleDistribution &dist, const WavenumberCell &cell)
    {
        if (!cell.overlaps_disk())
            return 0.0;

        const auto dec = decompose_cell(cell);
        const double ring = dist.isotropic ? 2.0 : std::sin(dist.elevation_mean);
        const double inner_breaks[1] = {dist.isotropic ? -1.0 : dist.elevation_mean};

        double total = 0.0;
        for (const auto &region : dec.regions)
        {
            // Angles where a radial bound crosses the rim or the elevation-mean ring
            std::vector<double> breaks;
            for (Edge e : {region.entry, region.exit})
                for (double s : {1.0, ring})
                {
                    if (s > 1.0)
                        continue;
                    switch (e)
                    {
                    case Edge::left:
                        if (dec.a > 0.0 && dec.a < s)
                            breaks.push_back(std::acos(dec.a / s));
                        break;
                    case Edge::right:
                        if (dec.b < s)
                            breaks.push_back(std::acos(dec.b / s));
                        break;
                    case Edge::bottom:
                        if (dec.c > 0.0 && dec.c < s)
                            breaks.push_back(std::asin(dec.c / s));
                        break;
                    case Edge::top:
                        if (dec.d < s)
                            breaks.push_back(std::asin(dec.d / s));
                        break;
                    case Edge::origin:
                        break;
                    }
                }
            if (!dist.isotropic)
            {
                // Seam of the truncated azimuth density at phi0 + pi
                const double seam = dist.azimuth_mean + pi;
                const double xr = dec.sign_x * std::cos(seam);
                const double yr = dec.sign_y * std::sin(seam);
                if (xr >= 0.0 && yr >= 0.0)
                    breaks.push_back(std::atan2(yr, xr));
            }

            auto radial = [&](double psi)
            {
                const double r_in = dec.edge_radius(region.entry, psi);
                if (!(r_in < 1.0))
                    return 0.0;
                const double r_out = std::min(1.0, dec.edge_radius(region.exit, psi));
                if (!(r_out > r_in))
                    return 0.0;
                const double u_lo = std::asin(r_in);
                const double u_hi = std::asin(r_out);
                const double az = azimuth_density(dist, dec.azimuth(psi));
                if (az == 0.0)
                    return 0.0;
                auto el = [&](double u) { return elevation_density(dist, u); };
                return az * integrate_piecewise(el, u_lo, u_hi, inner_breaks, inner_options);
            };
            total += integrate_piecewise(radial, region.psi_lo, region.psi_hi, breaks, outer_options);
        }
        return total;
    }

    double cell_variance_oracle(const AngleDistribution &dist, const WavenumberCell &cell, int grid_n)
    {
        if (grid_n < 64)
            throw config_error("cell_variance_oracle: grid_n must be at least 64");
        if (!cell.overlaps_disk())
            return 0.0;

        const double hx = (cell.kx_hi - cell.kx_lo) / grid_n;
        const double hy = (cell.ky_hi - cell.ky_lo) / grid_n;
        std::vector<double> rows(static_cast<std::size_t>(grid_n), 0.0);
        for (int iy = 0; iy < grid_n; ++iy)
        {
            const double ky = cell.ky_lo + (iy + 0.5) * hy;
            double row = 0.0;
            for (int ix = 0; ix < grid_n; ++ix)
            {
                const double kx = cell.kx_lo + (ix + 0.5) * hx;
                const double k2 = kx * kx + ky * ky;
                if (k2 >= 1.0 || k2 == 0.0)
                    continue;
                const double k = std::sqrt(k2);
                const double f = elevation_density(dist, std::asin(k)) * azimuth_density(dist, std::atan2(ky, kx));
                row += f / (k * std::sqrt(1.0 - k2));
            }
            rows[static_cast<std::size_t>(iy)] = row;
        }
        return compensated_sum(rows) * hx * hy;
    }

    AngularSpectrum compute_spectrum(const AngleDistribution &dist, const WavenumberLattice &lattice)
    {
        AngularSpectrum out;
        out.lattice_id = lattice.id();
        out.variances.resize(lattice.cardinality());
        parallel_for(lattice.cardinality(), [&](Index i)
                     { out.variances(i) = cell_variance(dist, lattice.cells[static_cast<std::size_t>(i)]); });

        out.raw_total = compensated_sum({out.variances.data(), static_cast<std::size_t>(out.variances.size())});
        if (!(out.raw_total >= 1e-12))
            throw numeric_error("degenerate angular spectrum: total mass on the propagating disk is " +
                                std::to_string(out.raw_total));
        out.variances /= out.raw_total;
        out.normalized = true;
        return out;
    }

    Index cells_for_fraction(const AngularSpectrum &spectrum, double fraction)
    {
        std::vector<double> v(spectrum.variances.data(), spectrum.variances.data() + spectrum.variances.size());
        std::sort(v.begin(), v.end(), std::greater<>());
        const double total = compensated_sum(v);
        double acc = 0.0;
        for (std::size_t i = 0; i < v.size(); ++i)
        {
            acc += v[i];
            if (acc >= fraction * total)
                return static_cast<Index>(i + 1);
        }
        return static_cast<Index>(v.size());
    }
}
