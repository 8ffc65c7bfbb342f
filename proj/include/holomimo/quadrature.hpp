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

#ifndef HOLOMIMO_QUADRATURE_HPP
#define HOLOMIMO_QUADRATURE_HPP

#include <algorithm>
#include <array>
#include <cmath>

namespace holomimo
{
    struct QuadratureOptions
    {
        double abs_tol = 1e-16;
        double rel_tol = 1e-10; // relative to the first whole-interval estimate
        int max_depth = 20;
    };

    namespace detail
    {
        // Gauss-Kronrod 7/15 abscissae and weights on [-1, 1]
        inline constexpr std::array<double, 8> gk15_nodes = {
            0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
            0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
            0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
            0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
        inline constexpr std::array<double, 8> gk15_weights = {
            0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
            0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
            0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
            0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
        inline constexpr std::array<double, 4> g7_weights = {
            0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
            0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

        struct GKResult
        {
            double value;
            double error;
        };

        template <typename F>
        GKResult gauss_kronrod15(const F &f, double a, double b)
        {
            const double center = 0.5 * (a + b);
            const double half = 0.5 * (b - a);
            const double fc = f(center);
            double kronrod = fc * gk15_weights[7];
            double gauss = fc * g7_weights[3];
            for (int j = 0; j < 7; ++j)
            {
                const double dx = half * gk15_nodes[static_cast<std::size_t>(j)];
                const double sum = f(center - dx) + f(center + dx);
                kronrod += gk15_weights[static_cast<std::size_t>(j)] * sum;
                if (j % 2 == 1)
                    gauss += g7_weights[static_cast<std::size_t>(j / 2)] * sum;
            }
            return {kronrod * half, std::abs((kronrod - gauss) * half)};
        }

        template <typename F>
        double adaptive_step(const F &f, double a, double b, GKResult whole, double tol, int depth, int max_depth)
        {
            if (whole.error <= tol || depth >= max_depth)
                return whole.value;
            const double mid = 0.5 * (a + b);
            if (!(mid > a && mid < b))
                return whole.value;
            const auto left = gauss_kronrod15(f, a, mid);
            const auto right = gauss_kronrod15(f, mid, b);
            return adaptive_step(f, a, mid, left, 0.5 * tol, depth + 1, max_depth) +
                   adaptive_step(f, mid, b, right, 0.5 * tol, depth + 1, max_depth);
        }
    }

    // Recursive-bisection Gauss-Kronrod quadrature of f over [a, b]
    template <typename F>
    double integrate_adaptive(const F &f, double a, double b, const QuadratureOptions &opt = {})
    {
        if (!(b > a))
            return 0.0;
        const auto whole = detail::gauss_kronrod15(f, a, b);
        const double tol = std::max(opt.abs_tol, opt.rel_tol * std::abs(whole.value));
        return detail::adaptive_step(f, a, b, whole, tol, 0, opt.max_depth);
    }

    // Same, with interior breakpoints where f has kinks. Breakpoints outside (a, b) are ignored.
    template <typename F, typename Range>
    double integrate_piecewise(const F &f, double a, double b, const Range &breaks, const QuadratureOptions &opt = {})
    {
        if (!(b > a))
            return 0.0;
        double pts[16];
        int n = 0;
        pts[n++] = a;
        for (double p : breaks)
            if (p > a && p < b && n < 15)
                pts[n++] = p;
        pts[n++] = b;
        std::sort(pts, pts + n);
        double total = 0.0;
        for (int i = 0; i + 1 < n; ++i)
            total += integrate_adaptive(f, pts[i], pts[i + 1], opt);
        return total;
    }
}

#endif
