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

#ifndef HOLOMIMO_PARALLEL_HPP
#define HOLOMIMO_PARALLEL_HPP

#include "holomimo/common.hpp"

#include <functional>

namespace holomimo
{
    // Worker count: hardware concurrency, or HOLOMIMO_THREADS when set to a positive integer
    unsigned worker_count();

    // Runs fn(i) for i in [0, n) across worker_count() threads. Results must be written
    // to index-addressed storage; the first exception thrown by any task is rethrown.
    void parallel_for(Index n, const std::function<void(Index)> &fn);
}

#endif
