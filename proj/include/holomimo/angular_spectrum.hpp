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

#ifndef HOLOMIMO_ANGULAR_SPECTRUM_HPP
#define HOLOMIMO_ANGULAR_SPECTRUM_HPP

#include "holomimo/array_geometry.hpp"

#include <vector>

namespace holomimo
{
    // Product of a Gaussian azimuth density truncated to [phi0 - pi, phi0 + pi] and a
    // Laplacian elevation density truncated to [0, pi/2]; or, when isotropic, the uniform
    // density over the upper hemisphere, sin(theta) / (2 pi). Densities are w.r.t. dtheta dphi.
    struct AngleDistribution
    {
        double azimuth_mean = pi / 2;     // phi0, rad
        double azimuth_spread = 0.5;      // sigma_g, rad
        double elevation_mean = pi / 4;   // theta0 in [0, pi/2], rad
        double elevation_spread = 0.1;    // sigma_l, rad
        double q_g = 1.0;                 // azimuth normalizer
        double q_l = 1.0;                 // elevation normalizer
        bool isotropic = false;

        // Validates the parameters and fills in q_g, q_l
        static AngleDistribution make(double azimuth_mean, double azimuth_spread,
                                      double elevation_mean, double elevation_spread);
        static AngleDistribution isotropic_hemisphere();
    };

    struct Normalizers
    {
        double q_l;
        double q_g;
    };

    // Closed forms: q_l = 1 / (1 - (exp(-sqrt2 theta0/sl) + exp(-sqrt2 (pi/2 - theta0)/sl)) / 2),
    // q_g = 1 / erf(pi / (sqrt2 sg)).
    Normalizers compute_normalizers(const AngleDistribution &dist);

    // Density at (theta, phi). phi is wrapped into [phi0 - pi, phi0 + pi); theta outside [0, pi/2] throws domain_error.
    double eval_pdf(const AngleDistribution &dist, double theta, double phi);

    // Edges of a first-quadrant rectangle [a, b] x [c, d] as seen from the origin
    enum class Edge
    {
        origin,
        left,   // x = a
        right,  // x = b
        bottom, // y = c
        top     // y = d
    };

    // Angular slice psi in [psi_lo, psi_hi] where a ray from the origin enters the cell
    // through `entry` and leaves through `exit`
    struct PolarRegion
    {
        double psi_lo;
        double psi_hi;
        Edge entry;
        Edge exit;
    };

    // A cell reflected into the first quadrant and split into polar regions with fixed
    // entry/exit edges: three regions in general, two when the cell touches an axis.
    struct CellDecomposition
    {
        double a = 0, b = 0, c = 0, d = 0; // reflected rectangle [a, b] x [c, d], a, c >= 0
        int sign_x = 1, sign_y = 1;        // reflection back to the cell's quadrant
        std::vector<PolarRegion> regions;

        double edge_radius(Edge e, double psi) const;
        double azimuth(double psi) const;  // original azimuth of first-quadrant angle psi
    };

    CellDecomposition decompose_cell(const WavenumberCell &cell);

    // Integral of the angle density over the part of the cell inside the unit disk, done in
    // polar coordinates with k_R = sin(theta). Exactly 0 for cells outside the disk.
    double cell_variance(const AngleDistribution &dist, const WavenumberCell &cell);

    // Independent check of cell_variance: midpoint rule on a grid_n x grid_n Cartesian grid over
    // the cell with integrand f(asin k, atan2(ky, kx)) / (k sqrt(1 - k^2)). Requires grid_n >= 64.
    double cell_variance_oracle(const AngleDistribution &dist, const WavenumberCell &cell, int grid_n);

    struct AngularSpectrum
    {
        Eigen::VectorXd variances;     // aligned with the lattice cell order
        std::uint64_t lattice_id = 0;  // WavenumberLattice::id() of the source lattice
        bool normalized = false;
        double raw_total = 0.0;        // sum of variances before normalization

        Index size() const { return variances.size(); }
        std::uint64_t checksum() const { return holomimo::checksum(variances.data(), static_cast<std::size_t>(variances.size())); }
    };

    // Per-cell variances in lattice order, rescaled to sum to one.
    // Throws numeric_error if the distribution puts (almost) no mass on the disk.
    AngularSpectrum compute_spectrum(const AngleDistribution &dist, const WavenumberLattice &lattice);

    // Smallest number of cells whose variances add up to at least `fraction` of the total
    Index cells_for_fraction(const AngularSpectrum &spectrum, double fraction);
}

#endif
