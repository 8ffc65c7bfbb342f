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

#include "holomimo/channel.hpp"

#include "json.hpp"

#include <array>
#include <bit>
#include <cstring>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace holomimo
{
    namespace
    {
        template <typename T>
        void put_le(std::ostream &os, T value)
        {
            using U = std::conditional_t<sizeof(T) == 8, std::uint64_t, std::conditional_t<sizeof(T) == 4, std::uint32_t, std::uint16_t>>;
            const U bits = std::bit_cast<U>(value);
            std::array<char, sizeof(T)> buf{};
            for (std::size_t b = 0; b < sizeof(T); ++b)
                buf[b] = static_cast<char>((bits >> (8 * b)) & 0xffU);
            os.write(buf.data(), sizeof(T));
        }

        template <typename T>
        T get_le(std::istream &is, const std::filesystem::path &path)
        {
            using U = std::conditional_t<sizeof(T) == 8, std::uint64_t, std::conditional_t<sizeof(T) == 4, std::uint32_t, std::uint16_t>>;
            std::array<unsigned char, sizeof(T)> buf{};
            if (!is.read(reinterpret_cast<char *>(buf.data()), sizeof(T)))
                throw io_error("truncated HMIO file: " + path.string());
            U bits = 0;
            for (std::size_t b = 0; b < sizeof(T); ++b)
                bits |= static_cast<U>(static_cast<U>(buf[b]) << (8 * b));
            return std::bit_cast<T>(bits);
        }

        std::string hex64(std::uint64_t v)
        {
            std::ostringstream os;
            os << std::hex << std::setw(16) << std::setfill('0') << v;
            return os.str();
        }
    }

    void write_hmio(const std::filesystem::path &path, const CMatrix<double> &matrix)
    {
        std::ofstream os(path, std::ios::binary);
        if (!os)
            throw io_error("cannot open for writing: " + path.string());
        os.write("HMIO", 4);
        put_le<std::uint16_t>(os, hmio_version);
        put_le<std::uint32_t>(os, static_cast<std::uint32_t>(matrix.rows()));
        put_le<std::uint32_t>(os, static_cast<std::uint32_t>(matrix.cols()));
        for (Index i = 0; i < matrix.rows(); ++i)
            for (Index j = 0; j < matrix.cols(); ++j)
            {
                put_le<double>(os, matrix(i, j).real());
                put_le<double>(os, matrix(i, j).imag());
            }
        if (!os)
            throw io_error("write failed: " + path.string());
    }

    CMatrix<double> read_hmio(const std::filesystem::path &path)
    {
        std::ifstream is(path, std::ios::binary);
        if (!is)
            throw io_error("cannot open for reading: " + path.string());
        char magic[4];
        if (!is.read(magic, 4) || std::memcmp(magic, "HMIO", 4) != 0)
            throw io_error("not an HMIO file: " + path.string());
        const auto version = get_le<std::uint16_t>(is, path);
        if (version != hmio_version)
            throw io_error("unsupported HMIO version " + std::to_string(version) + ": " + path.string());
        const auto rows = get_le<std::uint32_t>(is, path);
        const auto cols = get_le<std::uint32_t>(is, path);
        CMatrix<double> m(rows, cols);
        for (Index i = 0; i < m.rows(); ++i)
            for (Index j = 0; j < m.cols(); ++j)
            {
                const double re = get_le<double>(is, path);
                const double im = get_le<double>(is, path);
                m(i, j) = {re, im};
            }
        return m;
    }

    void write_hmio_sidecar(const std::filesystem::path &path, const std::string &config_json, Seed seed,
                            const AngularSpectrum &rx, const AngularSpectrum &tx, const std::string &kind)
    {
        nlohmann::ordered_json j;
        j["format"] = "HMIO";
        j["version"] = hmio_version;
        j["kind"] = kind;
        j["seed"] = seed;
        j["config"] = nlohmann::ordered_json::parse(config_json);
        j["rx_spectrum"] = {{"cells", rx.size()}, {"fnv1a64", hex64(rx.checksum())}};
        j["tx_spectrum"] = {{"cells", tx.size()}, {"fnv1a64", hex64(tx.checksum())}};
        std::ofstream os(path);
        if (!os)
            throw io_error("cannot open for writing: " + path.string());
        os << j.dump(2) << '\n';
        if (!os)
            throw io_error("write failed: " + path.string());
    }
}
