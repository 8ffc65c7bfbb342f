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

#ifndef HOLOMIMO_CHANNEL_HPP
#define HOLOMIMO_CHANNEL_HPP

#include "holomimo/angular_spectrum.hpp"
#include "holomimo/random.hpp"

#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace holomimo
{
    template <typename Scalar>
    struct AngularChannel
    {
        CMatrix<Scalar> matrix; // n_R x n_S
        std::uint64_t rx_spectrum_ref = 0;
        std::uint64_t tx_spectrum_ref = 0;
        Seed seed = 0;
    };

    template <typename Scalar>
    struct SpatialChannel
    {
        CMatrix<Scalar> matrix; // N_R x N_S
        std::uint64_t rx_spectrum_ref = 0;
        std::uint64_t tx_spectrum_ref = 0;
        Seed seed = 0;
    };

    namespace detail
    {
        inline void require_normalized(const AngularSpectrum &s, const char *side)
        {
            if (!s.normalized)
                throw config_error(std::string("angular channel: ") + side + " spectrum is not normalized");
            if (s.size() < 1)
                throw config_error(std::string("angular channel: ") + side + " spectrum is empty");
        }
    }

    // Rows `rx_rows` and columns `tx_cols` of diag(sigma_R) W diag(sigma_S), where W is the
    // CN(0, I) field of `seed` and sigma = sqrt(variance). Indices refer to full lattice order.
    template <typename Scalar = double>
    CMatrix<Scalar> sample_angular_block(const AngularSpectrum &rx, const AngularSpectrum &tx,
                                         std::span<const Index> rx_rows, std::span<const Index> tx_cols, Seed seed)
    {
        const ComplexNormalField field(seed);
        CMatrix<Scalar> h(static_cast<Index>(rx_rows.size()), static_cast<Index>(tx_cols.size()));
        std::vector<double> tx_sigma(tx_cols.size());
        for (std::size_t j = 0; j < tx_cols.size(); ++j)
            tx_sigma[j] = std::sqrt(tx.variances(tx_cols[j]));
        for (std::size_t j = 0; j < tx_cols.size(); ++j)
            for (std::size_t i = 0; i < rx_rows.size(); ++i)
            {
                const double scale = std::sqrt(rx.variances(rx_rows[i])) * tx_sigma[j];
                const auto w = field(static_cast<std::uint64_t>(rx_rows[i]), static_cast<std::uint64_t>(tx_cols[j]));
                h(static_cast<Index>(i), static_cast<Index>(j)) =
                    std::complex<Scalar>(static_cast<Scalar>(scale * w.real()), static_cast<Scalar>(scale * w.imag()));
            }
        return h;
    }

    // H_a = diag(sigma_R) W diag(sigma_S); the same seed always gives the same matrix
    template <typename Scalar = double>
    AngularChannel<Scalar> sample_angular_channel(const AngularSpectrum &rx, const AngularSpectrum &tx, Seed seed)
    {
        detail::require_normalized(rx, "receive");
        detail::require_normalized(tx, "transmit");
        std::vector<Index> rows(static_cast<std::size_t>(rx.size()));
        std::vector<Index> cols(static_cast<std::size_t>(tx.size()));
        for (std::size_t i = 0; i < rows.size(); ++i)
            rows[i] = static_cast<Index>(i);
        for (std::size_t j = 0; j < cols.size(); ++j)
            cols[j] = static_cast<Index>(j);

        AngularChannel<Scalar> out;
        out.matrix = sample_angular_block<Scalar>(rx, tx, rows, cols, seed);
        out.rx_spectrum_ref = rx.checksum();
        out.tx_spectrum_ref = tx.checksum();
        out.seed = seed;
        return out;
    }

    // H = sqrt(N_R N_S) Phi_r H_a Phi_s^H
    template <typename Scalar>
    SpatialChannel<Scalar> synthesize_spatial(const AngularChannel<Scalar> &angular,
                                              const FourierBasis<Scalar> &rx_basis,
                                              const FourierBasis<Scalar> &tx_basis)
    {
        if (rx_basis.matrix.cols() != angular.matrix.rows() || tx_basis.matrix.cols() != angular.matrix.cols())
            throw config_error("synthesize_spatial: basis columns (" + std::to_string(rx_basis.matrix.cols()) + ", " +
                               std::to_string(tx_basis.matrix.cols()) + ") do not match H_a dimensions (" +
                               std::to_string(angular.matrix.rows()) + ", " + std::to_string(angular.matrix.cols()) + ")");
        const Scalar scale = std::sqrt(static_cast<Scalar>(rx_basis.matrix.rows()) *
                                       static_cast<Scalar>(tx_basis.matrix.rows()));
        SpatialChannel<Scalar> out;
        out.matrix.noalias() = (rx_basis.matrix * angular.matrix) * tx_basis.matrix.adjoint();
        out.matrix *= scale;
        out.rx_spectrum_ref = angular.rx_spectrum_ref;
        out.tx_spectrum_ref = angular.tx_spectrum_ref;
        out.seed = angular.seed;
        return out;
    }

    // Binary realization container: "HMIO", u16 version, u32 rows, u32 cols, then row-major
    // (re, im) little-endian f64 pairs
    inline constexpr std::uint16_t hmio_version = 1;

    void write_hmio(const std::filesystem::path &path, const CMatrix<double> &matrix);
    CMatrix<double> read_hmio(const std::filesystem::path &path);

    // JSON sidecar next to an exported realization: configuration, seed, spectrum checksums
    void write_hmio_sidecar(const std::filesystem::path &path, const std::string &config_json, Seed seed,
                            const AngularSpectrum &rx, const AngularSpectrum &tx, const std::string &kind);
}

#endif
