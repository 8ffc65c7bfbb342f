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

#ifndef HOLOMIMO_ARRAY_GEOMETRY_HPP
#define HOLOMIMO_ARRAY_GEOMETRY_HPP

#include "holomimo/common.hpp"

#include <vector>

namespace holomimo
{
    // A z-oriented planar array. All lengths are in wavelengths; areas in wavelengths squared.
    // The wavelength itself (meters) is only used when positions leave the library.
    struct PlanarArrayConfig
    {
        double len_x = 15.0;                  // Aperture along x
        double len_y = 15.0;                  // Aperture along y
        double spacing = 0.25;                // Element spacing, same in x and y
        double element_area = 1.0 / 64.0;     // Physical area of one element
        double aperture_efficiency = 0.6;     // Must lie in (0, 1)
        double wavelength = speed_of_light / 6.0e9; // Carrier wavelength in meters

        static PlanarArrayConfig square(double len, double spacing, double element_area,
                                        double aperture_efficiency, double wavelength);

        // Throws config_error naming the violated invariant
        void validate() const;

        Index n_x() const; // floor(len_x / spacing)
        Index n_y() const;
        Index n_elements() const { return n_x() * n_y(); }

        bool operator==(const PlanarArrayConfig &) const = default;
    };

    // One cell of the wavenumber lattice. Bounds are normalized by kappa = 2*pi/lambda,
    // i.e. the cell (idx_x, idx_y) covers [idx_x/len_x, (idx_x+1)/len_x] x [idx_y/len_y, (idx_y+1)/len_y].
    struct WavenumberCell
    {
        int idx_x = 0;
        int idx_y = 0;
        double kx_lo = 0.0, kx_hi = 0.0;
        double ky_lo = 0.0, ky_hi = 0.0;

        static WavenumberCell from_index(int idx_x, int idx_y, double len_x, double len_y);

        double area() const { return (kx_hi - kx_lo) * (ky_hi - ky_lo); }

        // Squared distance from the origin to the nearest point of the (closed) rectangle
        double min_radius_sq() const;

        // True if the cell and the open unit disk share a region of positive area
        bool overlaps_disk() const { return min_radius_sq() < 1.0; }
    };

    // All cells supporting propagating waves for one array. Ordered row-major by
    // (idx_y, idx_x) ascending; every consumer relies on this ordering.
    struct WavenumberLattice
    {
        std::vector<WavenumberCell> cells;
        PlanarArrayConfig array;

        Index cardinality() const { return static_cast<Index>(cells.size()); }

        // Fingerprint of the geometry that produced this lattice
        std::uint64_t id() const;
    };

    WavenumberLattice enumerate_lattice(const PlanarArrayConfig &array);

    // pi * len_x * len_y, the large-aperture estimate of the lattice cardinality
    inline double approx_cardinality(const PlanarArrayConfig &array) { return pi * array.len_x * array.len_y; }

    // Element coordinates in wavelengths, centered grid, element i = iy * n_x + ix. Columns: x, y, z.
    Eigen::Matrix<double, Eigen::Dynamic, 3> element_positions(const PlanarArrayConfig &array);

    // Normalized z-wavenumber sqrt(1 - kx^2 - ky^2) at the lower-left corner of the cell, clamped to 0
    double cell_gamma(const WavenumberCell &cell);

    template <typename Scalar>
    struct FourierBasis
    {
        CMatrix<Scalar> matrix;                                 // N x n, column j belongs to lattice cell j
        Eigen::Matrix<double, Eigen::Dynamic, 3> element_positions; // meters
    };

    // Column j, row i: exp(-j*2*pi*(lx*rx/Lx + ly*ry/Ly + gamma*rz)) / sqrt(N), with r in wavelengths.
    template <typename Scalar = double>
    FourierBasis<Scalar> build_fourier_basis(const PlanarArrayConfig &array, const WavenumberLattice &lattice)
    {
        array.validate();
        if (!(lattice.array == array))
            throw config_error("build_fourier_basis: lattice was enumerated for a different array");

        const auto pos = element_positions(array);
        const Index n_el = pos.rows();
        const Index n_cells = lattice.cardinality();
        const double scale = 1.0 / std::sqrt(static_cast<double>(n_el));

        FourierBasis<Scalar> out;
        out.matrix.resize(n_el, n_cells);
        for (Index j = 0; j < n_cells; ++j)
        {
            const auto &c = lattice.cells[static_cast<std::size_t>(j)];
            const double gamma = cell_gamma(c);
            for (Index i = 0; i < n_el; ++i)
            {
                const double cycles = c.idx_x * pos(i, 0) / array.len_x +
                                      c.idx_y * pos(i, 1) / array.len_y +
                                      gamma * pos(i, 2);
                const double phase = -2.0 * pi * cycles;
                out.matrix(i, j) = std::complex<Scalar>(static_cast<Scalar>(scale * std::cos(phase)),
                                                        static_cast<Scalar>(scale * std::sin(phase)));
            }
        }
        out.element_positions = pos * array.wavelength;
        return out;
    }
}

#endif
