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

#include "holomimo/common.hpp"

#include <array>
#include <bit>
#include <charconv>
#include <cstring>

namespace holomimo
{
    double degrees_exact(double rad)
    {
        const double guess = rad_to_deg(rad);
        double best = guess;
        std::size_t best_len = std::string::npos;
        double candidate = guess;
        for (int k = 0; k < 4; ++k)
            candidate = std::nextafter(candidate, -INFINITY);
        for (int k = 0; k < 9; ++k, candidate = std::nextafter(candidate, INFINITY))
        {
            if (deg_to_rad(candidate) != rad)
                continue;
            std::array<char, 32> buf{};
            const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), candidate);
            const auto len = static_cast<std::size_t>(res.ptr - buf.data());
            if (len < best_len)
            {
                best = candidate;
                best_len = len;
            }
        }
        return best;
    }

    std::uint64_t checksum(const double *data, std::size_t n)
    {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (std::size_t i = 0; i < n; ++i)
        {
            std::uint64_t bits = std::bit_cast<std::uint64_t>(data[i]);
            for (int b = 0; b < 8; ++b)
            {
                h ^= (bits >> (8 * b)) & 0xffU;
                h *= 0x100000001b3ULL;
            }
        }
        return h;
    }
}
