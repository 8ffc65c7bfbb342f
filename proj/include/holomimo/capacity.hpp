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

#ifndef HOLOMIMO_CAPACITY_HPP
#define HOLOMIMO_CAPACITY_HPP

#include "holomimo/angular_spectrum.hpp"

#include <vector>

namespace holomimo
{
    // SNR and gains are linear. The effective per-mode SNR is snr * G_t * G_r * N_S * N_R / n_S.
    struct LinkBudget
    {
        double snr = 1.0;
        double gain_tx = 1.0;
        double gain_rx = 1.0;
        Index n_tx_elements = 1; // N_S
        Index n_rx_elements = 1; // N_R
        Index n_tx_modes = 1;    // n_S, the transmit lattice cardinality

        void validate() const;
        double prefactor() const;
    };

    struct CapacityEstimate
    {
        double mean_bits = 0.0;        // ergodic capacity, bit/s/Hz
        double std_error = 0.0;        // Monte Carlo standard error of mean_bits
        Index trials = 0;
        Eigen::VectorXd eigen_summary; // trial-averaged eigenvalues of H_a H_a^H, descending, length min(n_R, n_S)
        LinkBudget budget;
        Index rx_active_modes = 0;     // modes kept after truncation (diagnostic)
        Index tx_active_modes = 0;
    };

    // Eigenvalues of a Hermitian matrix, descending. Tiny negative values from round-off are
    // clamped to zero; anything below -1e-10 * ||gram|| is reported as a numeric_error.
    template <typename Scalar>
    RVector<Scalar> hermitian_eigenvalues(const CMatrix<Scalar> &gram)
    {
        if (gram.rows() != gram.cols())
            throw config_error("hermitian_eigenvalues: matrix is not square");
        if (gram.size() == 0)
            return RVector<Scalar>();
        const Scalar scale = std::max<Scalar>(Scalar(1), gram.cwiseAbs().maxCoeff());
        const Scalar asym = (gram - gram.adjoint()).cwiseAbs().maxCoeff();
        if (!(asym <= Scalar(1e-10) * scale))
            throw config_error("hermitian_eigenvalues: matrix is not Hermitian (asymmetry " + std::to_string(asym) + ")");

        Eigen::SelfAdjointEigenSolver<CMatrix<Scalar>> solver(gram, Eigen::EigenvaluesOnly);
        if (solver.info() != Eigen::Success)
            throw numeric_error("hermitian_eigenvalues: eigensolver did not converge");

        const auto &ascending = solver.eigenvalues();
        const Index n = ascending.size();
        const Scalar norm = std::max(std::abs(ascending(0)), std::abs(ascending(n - 1)));
        RVector<Scalar> out(n);
        for (Index i = 0; i < n; ++i)
        {
            Scalar v = ascending(n - 1 - i);
            if (v < Scalar(0))
            {
                if (v < -Scalar(1e-10) * norm)
                    throw numeric_error("hermitian_eigenvalues: matrix has a negative eigenvalue " + std::to_string(v));
                v = Scalar(0);
            }
            out(i) = v;
        }
        return out;
    }

    // Indices (ascending) of the modes kept when the smallest variances, adding up to at most
    // `dropped_mass`, are discarded. Zero-variance modes are always discarded.
    std::vector<Index> active_modes(const AngularSpectrum &spectrum, double dropped_mass);

    // Mean over trials of sum_i log2(1 + prefactor * lambda_i(H_a H_a^H)). Trial t uses
    // derive_trial_seed(master_seed, t). Modes whose combined variance cannot change a trial's
    // capacity by more than truncation_bits are skipped.
    CapacityEstimate ergodic_capacity(const AngularSpectrum &rx, const AngularSpectrum &tx,
                                      const LinkBudget &budget, Index trials, Seed master_seed);

    inline constexpr double truncation_bits = 1e-10;

    // n_M log2(1 + prefactor / n_M), n_M = min(n_S, n_R): the isotropic (equal eigenvalue) bound
    double capacity_upper_bound(const LinkBudget &budget, Index n_rx_modes);

    // prefactor / ln 2, the rho -> 0 limit independent of the angle distribution
    double capacity_low_snr(const LinkBudget &budget);

    // Patch antenna gain 4 pi eta S / lambda^2 with S in wavelengths squared
    double antenna_gain(double element_area, double efficiency);

    struct ArrayPair
    {
        PlanarArrayConfig tx;
        PlanarArrayConfig rx;
    };

    // Fixed element area: gains from each array's element_area
    LinkBudget discrete_aperture_budget(const ArrayPair &arrays, double snr, Index n_tx_modes);
    // Element area L_x L_y / N per side, so N cancels out of the prefactor
    LinkBudget continuous_aperture_budget(const ArrayPair &arrays, double snr, Index n_tx_modes);

    CapacityEstimate capacity_discrete_aperture(const AngularSpectrum &rx, const AngularSpectrum &tx,
                                                const ArrayPair &arrays, double snr, Index trials, Seed seed);
    CapacityEstimate capacity_continuous_aperture(const AngularSpectrum &rx, const AngularSpectrum &tx,
                                                  const ArrayPair &arrays, double snr, Index trials, Seed seed);
}

#endif
