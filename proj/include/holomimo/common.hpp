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

#ifndef HOLOMIMO_COMMON_HPP
#define HOLOMIMO_COMMON_HPP

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>

namespace holomimo
{
    // Dense types, templated on the real scalar (float or double)
    template <typename Scalar>
    using CMatrix = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic>;
    template <typename Scalar>
    using CVector = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, 1>;
    template <typename Scalar>
    using RVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

    using Index = Eigen::Index;
    using Seed = std::uint64_t;

    inline constexpr double pi = std::numbers::pi;
    inline constexpr double speed_of_light = 299792458.0; // m/s

    // Invalid configuration, contract violation or failed parse. CLI exit code 2.
    class config_error : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    // Argument outside the mathematical domain of a function (e.g. elevation > pi/2).
    class domain_error : public config_error
    {
    public:
        using config_error::config_error;
    };

    // Numerical failure: degenerate spectrum, eigensolver trouble. CLI exit code 3.
    class numeric_error : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    // File system errors; the message always carries the offending path. CLI exit code 4.
    class io_error : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    inline constexpr double deg_to_rad(double deg) { return deg * (pi / 180.0); }
    inline constexpr double rad_to_deg(double rad) { return rad / (pi / 180.0); }

    // Degree value d with deg_to_rad(d) == rad bit-exactly, preferring the shortest
    // decimal representation. Used wherever angles are written back to files.
    double degrees_exact(double rad);

    inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
    inline double linear_to_db(double x) { return 10.0 * std::log10(x); }

    // Neumaier-compensated sum; the result depends only on the order of `values`
    inline double compensated_sum(std::span<const double> values)
    {
        double sum = 0.0, comp = 0.0;
        for (double v : values)
        {
            const double t = sum + v;
            comp += std::abs(sum) >= std::abs(v) ? (sum - t) + v : (v - t) + sum;
            sum = t;
        }
        return sum + comp;
    }

    // FNV-1a over the little-endian bytes of a double sequence
    std::uint64_t checksum(const double *data, std::size_t n);
}

#endif
