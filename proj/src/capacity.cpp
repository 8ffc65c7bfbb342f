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

#include "holomimo/capacity.hpp"
#include "holomimo/channel.hpp"
#include "holomimo/parallel.hpp"

#include <algorithm>
#include <numeric>

namespace holomimo
{
    namespace
    {
        const double ln2 = std::log(2.0);

        // Descending eigenvalues of the smaller Gram matrix of h (same nonzero spectrum as h h^H)
        Eigen::VectorXd gram_eigenvalues(const CMatrix<double> &h)
        {
            const bool tall = h.rows() >= h.cols();
            const Index m = tall ? h.cols() : h.rows();
            CMatrix<double> gram = CMatrix<double>::Zero(m, m);
            if (tall)
                gram.selfadjointView<Eigen::Lower>().rankUpdate(h.adjoint());
            else
                gram.selfadjointView<Eigen::Lower>().rankUpdate(h);

            Eigen::SelfAdjointEigenSolver<CMatrix<double>> solver(gram, Eigen::EigenvaluesOnly);
            if (solver.info() != Eigen::Success)
                throw numeric_error("ergodic_capacity: eigensolver did not converge");
            const auto &asc = solver.eigenvalues();
            const double norm = std::max(std::abs(asc(0)), std::abs(asc(m - 1)));
            Eigen::VectorXd out(m);
            for (Index i = 0; i < m; ++i)
            {
                double v = asc(m - 1 - i);
                if (v < 0.0)
                {
                    if (v < -1e-10 * norm)
                        throw numeric_error("ergodic_capacity: Gram matrix has a negative eigenvalue");
                    v = 0.0;
                }
                out(i) = v;
            }
            return out;
        }
    }

    void LinkBudget::validate() const
    {
        if (!(snr >= 0.0) || !std::isfinite(snr))
            throw config_error("link budget: SNR must be finite and non-negative");
        if (!(gain_tx > 0.0) || !(gain_rx > 0.0))
            throw config_error("link budget: antenna gains must be positive");
        if (n_tx_elements < 1 || n_rx_elements < 1 || n_tx_modes < 1)
            throw config_error("link budget: element and mode counts must be at least 1");
    }

    double LinkBudget::prefactor() const
    {
        return snr * gain_tx * gain_rx * static_cast<double>(n_tx_elements) * static_cast<double>(n_rx_elements) /
               static_cast<double>(n_tx_modes);
    }

    std::vector<Index> active_modes(const AngularSpectrum &spectrum, double dropped_mass)
    {
        const Index n = spectrum.size();
        std::vector<Index> order(static_cast<std::size_t>(n));
        std::iota(order.begin(), order.end(), Index{0});
        std::stable_sort(order.begin(), order.end(),
                         [&](Index a, Index b) { return spectrum.variances(a) < spectrum.variances(b); });

        std::vector<bool> keep(static_cast<std::size_t>(n), true);
        double dropped = 0.0;
        for (Index i : order)
        {
            const double v = spectrum.variances(i);
            if (v > 0.0 && dropped + v > dropped_mass)
                break;
            dropped += v;
            keep[static_cast<std::size_t>(i)] = false;
        }
        std::vector<Index> out;
        for (Index i = 0; i < n; ++i)
            if (keep[static_cast<std::size_t>(i)])
                out.push_back(i);
        return out;
    }

    CapacityEstimate ergodic_capacity(const AngularSpectrum &rx, const AngularSpectrum &tx,
                                      const LinkBudget &budget, Index trials, Seed master_seed)
    {
        budget.validate();
        if (trials < 2)
            throw config_error("ergodic_capacity: at least 2 trials are required");
        detail::require_normalized(rx, "receive");
        detail::require_normalized(tx, "transmit");

        const double p = budget.prefactor();
        const Index summary_len = std::min(rx.size(), tx.size());

        // Dropping modes of total variance m changes log det(I + p H H^H) by at most p m nats
        // in expectation; the budget is split evenly between the two sides.
        std::vector<Index> rx_rows, tx_cols;
        if (p > 0.0)
        {
            const double per_side = 0.5 * truncation_bits * ln2 / p;
            rx_rows = active_modes(rx, per_side);
            tx_cols = active_modes(tx, per_side);
        }

        std::vector<double> bits(static_cast<std::size_t>(trials), 0.0);
        std::vector<Eigen::VectorXd> eig(static_cast<std::size_t>(trials));
        parallel_for(trials, [&](Index t)
                     {
            auto &ev = eig[static_cast<std::size_t>(t)];
            ev = Eigen::VectorXd::Zero(summary_len);
            if (rx_rows.empty() || tx_cols.empty())
                return;
            const Seed seed = derive_trial_seed(master_seed, static_cast<std::uint64_t>(t));
            const auto h = sample_angular_block<double>(rx, tx, rx_rows, tx_cols, seed);
            const auto lambda = gram_eigenvalues(h);
            double c = 0.0;
            for (Index i = 0; i < lambda.size(); ++i)
                c += std::log1p(p * lambda(i));
            bits[static_cast<std::size_t>(t)] = c / ln2;
            ev.head(std::min(summary_len, lambda.size())) = lambda.head(std::min(summary_len, lambda.size())); });

        CapacityEstimate out;
        out.trials = trials;
        out.budget = budget;
        out.rx_active_modes = static_cast<Index>(rx_rows.size());
        out.tx_active_modes = static_cast<Index>(tx_cols.size());
        out.mean_bits = compensated_sum(bits) / static_cast<double>(trials);
        std::vector<double> sq(bits.size());
        for (std::size_t i = 0; i < bits.size(); ++i)
            sq[i] = (bits[i] - out.mean_bits) * (bits[i] - out.mean_bits);
        const double variance = compensated_sum(sq) / static_cast<double>(trials - 1);
        out.std_error = std::sqrt(variance / static_cast<double>(trials));

        out.eigen_summary = Eigen::VectorXd::Zero(summary_len);
        for (const auto &ev : eig)
            out.eigen_summary += ev;
        out.eigen_summary /= static_cast<double>(trials);
        return out;
    }

    double capacity_upper_bound(const LinkBudget &budget, Index n_rx_modes)
    {
        budget.validate();
        if (n_rx_modes < 1)
            throw config_error("capacity_upper_bound: n_rx_modes must be at least 1");
        const double n_m = static_cast<double>(std::min(budget.n_tx_modes, n_rx_modes));
        return n_m * std::log1p(budget.prefactor() / n_m) / ln2;
    }

    double capacity_low_snr(const LinkBudget &budget)
    {
        budget.validate();
        return budget.prefactor() / ln2;
    }

    double antenna_gain(double element_area, double efficiency)
    {
        if (!(element_area > 0.0))
            throw config_error("antenna_gain: element area must be positive");
        if (!(efficiency > 0.0 && efficiency <= 1.0))
            throw config_error("antenna_gain: efficiency must lie in (0, 1]");
        return 4.0 * pi * efficiency * element_area;
    }

    LinkBudget discrete_aperture_budget(const ArrayPair &arrays, double snr, Index n_tx_modes)
    {
        arrays.tx.validate();
        arrays.rx.validate();
        LinkBudget b;
        b.snr = snr;
        b.gain_tx = antenna_gain(arrays.tx.element_area, arrays.tx.aperture_efficiency);
        b.gain_rx = antenna_gain(arrays.rx.element_area, arrays.rx.aperture_efficiency);
        b.n_tx_elements = arrays.tx.n_elements();
        b.n_rx_elements = arrays.rx.n_elements();
        b.n_tx_modes = n_tx_modes;
        return b;
    }

    LinkBudget continuous_aperture_budget(const ArrayPair &arrays, double snr, Index n_tx_modes)
    {
        arrays.tx.validate();
        arrays.rx.validate();
        const auto per_element = [](const PlanarArrayConfig &a)
        { return a.len_x * a.len_y / static_cast<double>(a.n_elements()); };
        LinkBudget b;
        b.snr = snr;
        b.gain_tx = antenna_gain(per_element(arrays.tx), arrays.tx.aperture_efficiency);
        b.gain_rx = antenna_gain(per_element(arrays.rx), arrays.rx.aperture_efficiency);
        b.n_tx_elements = arrays.tx.n_elements();
        b.n_rx_elements = arrays.rx.n_elements();
        b.n_tx_modes = n_tx_modes;
        return b;
    }

    CapacityEstimate capacity_discrete_aperture(const AngularSpectrum &rx, const AngularSpectrum &tx,
                                                const ArrayPair &arrays, double snr, Index trials, Seed seed)
    {
        return ergodic_capacity(rx, tx, discrete_aperture_budget(arrays, snr, tx.size()), trials, seed);
    }

    CapacityEstimate capacity_continuous_aperture(const AngularSpectrum &rx, const AngularSpectrum &tx,
                                                  const ArrayPair &arrays, double snr, Index trials, Seed seed)
    {
        return ergodic_capacity(rx, tx, continuous_aperture_budget(arrays, snr, tx.size()), trials, seed);
    }
}
