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

#include "holomimo/array_geometry.hpp"

#include <algorithm>

namespace holomimo
{
    namespace
    {
        // Guard against len/spacing landing a hair below an integer (e.g. 0.3/0.1)
        Index elements_along(double len, double spacing)
        {
            return static_cast<Index>(std::floor(len / spacing * (1.0 + 1e-12)));
        }

        double nearest_to_zero(double lo, double hi)
        {
            if (lo > 0.0)
                return lo;
            if (hi < 0.0)
                return hi;
            return 0.0;
        }
    }

    PlanarArrayConfig PlanarArrayConfig::square(double len, double spacing, double element_area,
                                                double aperture_efficiency, double wavelength)
    {
        PlanarArrayConfig c;
        c.len_x = len;
        c.len_y = len;
        c.spacing = spacing;
        c.element_area = element_area;
        c.aperture_efficiency = aperture_efficiency;
        c.wavelength = wavelength;
        return c;
    }

    void PlanarArrayConfig::validate() const
    {
        if (!(len_x > 0.0) || !(len_y > 0.0))
            throw config_error("array aperture must be positive (len_x = " + std::to_string(len_x) +
                               ", len_y = " + std::to_string(len_y) + ")");
        if (!(spacing > 0.0))
            throw config_error("array spacing must be positive");
        if (!(aperture_efficiency > 0.0 && aperture_efficiency < 1.0))
            throw config_error("aperture efficiency must lie in (0, 1), got " + std::to_string(aperture_efficiency));
        if (!(element_area > 0.0))
            throw config_error("element area must be positive");
        if (element_area > spacing * spacing * (1.0 + 1e-12))
            throw config_error("element area " + std::to_string(element_area) +
                               " exceeds spacing^2 = " + std::to_string(spacing * spacing));
        if (!(wavelength > 0.0))
            throw config_error("wavelength must be positive");
        if (n_x() < 1 || n_y() < 1)
            throw config_error("aperture smaller than one element spacing");
    }

    Index PlanarArrayConfig::n_x() const { return elements_along(len_x, spacing); }
    Index PlanarArrayConfig::n_y() const { return elements_along(len_y, spacing); }

    WavenumberCell WavenumberCell::from_index(int idx_x, int idx_y, double len_x, double len_y)
    {
        WavenumberCell c;
        c.idx_x = idx_x;
        c.idx_y = idx_y;
        c.kx_lo = idx_x / len_x;
        c.kx_hi = (idx_x + 1) / len_x;
        c.ky_lo = idx_y / len_y;
        c.ky_hi = (idx_y + 1) / len_y;
        return c;
    }

    double WavenumberCell::min_radius_sq() const
    {
        const double x = nearest_to_zero(kx_lo, kx_hi);
        const double y = nearest_to_zero(ky_lo, ky_hi);
        return x * x + y * y;
    }

    std::uint64_t WavenumberLattice::id() const
    {
        const double key[4] = {array.len_x, array.len_y, static_cast<double>(cells.size()), 0.0};
        return checksum(key, 4);
    }

    WavenumberLattice enumerate_lattice(const PlanarArrayConfig &array)
    {
        array.validate();

        WavenumberLattice lattice;
        lattice.array = array;

        // A cell with index |l| > ceil(len) lies entirely outside the unit disk
        const int max_x = static_cast<int>(std::ceil(array.len_x)) + 1;
        const int max_y = static_cast<int>(std::ceil(array.len_y)) + 1;
        for (int iy = -max_y; iy <= max_y; ++iy)
            for (int ix = -max_x; ix <= max_x; ++ix)
            {
                const auto cell = WavenumberCell::from_index(ix, iy, array.len_x, array.len_y);
                if (cell.overlaps_disk())
                    lattice.cells.push_back(cell);
            }
        return lattice;
    }

    Eigen::Matrix<double, Eigen::Dynamic, 3> element_positions(const PlanarArrayConfig &array)
    {
        const Index nx = array.n_x();
        const Index ny = array.n_y();
        Eigen::Matrix<double, Eigen::Dynamic, 3> pos(nx * ny, 3);
        for (Index iy = 0; iy < ny; ++iy)
            for (Index ix = 0; ix < nx; ++ix)
            {
                const Index i = iy * nx + ix;
                pos(i, 0) = (static_cast<double>(ix) - 0.5 * static_cast<double>(nx - 1)) * array.spacing;
                pos(i, 1) = (static_cast<double>(iy) - 0.5 * static_cast<double>(ny - 1)) * array.spacing;
                pos(i, 2) = 0.0;
            }
        return pos;
    }

    double cell_gamma(const WavenumberCell &cell)
    {
        const double arg = 1.0 - cell.kx_lo * cell.kx_lo - cell.ky_lo * cell.ky_lo;
        return arg > 0.0 ? std::sqrt(arg) : 0.0;
    }
}
