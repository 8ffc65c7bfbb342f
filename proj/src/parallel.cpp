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

#include "holomimo/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace holomimo
{
    unsigned worker_count()
    {
        unsigned n = std::max(1u, std::thread::hardware_concurrency());
        if (const char *env = std::getenv("HOLOMIMO_THREADS"))
        {
            const long cap = std::strtol(env, nullptr, 10);
            if (cap >= 1)
                n = static_cast<unsigned>(std::min(cap, 1024L)); // may exceed the core count
        }
        return n;
    }

    void parallel_for(Index n, const std::function<void(Index)> &fn)
    {
        if (n <= 0)
            return;
        const unsigned workers = static_cast<unsigned>(std::min<Index>(worker_count(), n));
        if (workers <= 1)
        {
            for (Index i = 0; i < n; ++i)
                fn(i);
            return;
        }

        std::atomic<Index> next{0};
        std::exception_ptr failure;
        std::mutex failure_lock;
        auto work = [&]
        {
            for (Index i = next++; i < n; i = next++)
            {
                try
                {
                    fn(i);
                }
                catch (...)
                {
                    std::lock_guard lock(failure_lock);
                    if (!failure)
                        failure = std::current_exception();
                    next = n;
                }
            }
        };

        std::vector<std::jthread> pool;
        pool.reserve(workers - 1);
        for (unsigned w = 1; w < workers; ++w)
            pool.emplace_back(work);
        work();
        pool.clear();
        if (failure)
            std::rethrow_exception(failure);
    }
}
