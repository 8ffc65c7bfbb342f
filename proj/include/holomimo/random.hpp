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

#ifndef HOLOMIMO_RANDOM_HPP
#define HOLOMIMO_RANDOM_HPP

#include "holomimo/common.hpp"

namespace holomimo
{
    // SplitMix64 finalizer; a bijection on 64-bit words
    constexpr std::uint64_t splitmix64(std::uint64_t x)
    {
        std::uint64_t z = x + 0x9E3779B97F4A7C15ULL;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Seed of stream `index` under `master`. Injective in `index` for a fixed master.
    constexpr Seed derive_trial_seed(Seed master, std::uint64_t index)
    {
        return splitmix64(splitmix64(master) ^ splitmix64(index + 0x632BE59BD9B4E019ULL));
    }

    // Counter-based field of i.i.d. CN(0, 1) variates addressed by (row, col). Entry values do
    // not depend on which other entries are drawn, so any submatrix can be sampled on its own.
    class ComplexNormalField
    {
    public:
        explicit ComplexNormalField(Seed seed) : seed_(seed) {}

        std::complex<double> operator()(std::uint64_t row, std::uint64_t col) const
        {
            const std::uint64_t h1 = splitmix64(seed_ ^ splitmix64((row << 32) ^ col));
            const std::uint64_t h2 = splitmix64(h1);
            const double u1 = (static_cast<double>(h1 >> 11) + 0.5) * 0x1.0p-53; // (0, 1)
            const double u2 = static_cast<double>(h2 >> 11) * 0x1.0p-53;         // [0, 1)
            // |z|^2 ~ Exp(1): unit total variance, 1/2 per component
            const double r = std::sqrt(-std::log(u1));
            const double angle = 2.0 * pi * u2;
            return {r * std::cos(angle), r * std::sin(angle)};
        }

        Seed seed() const { return seed_; }

    private:
        Seed seed_;
    };
}

#endif
