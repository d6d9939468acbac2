// Copyright 2026 The metricdim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef METRICDIM_DETAIL_PARALLEL_HPP
#define METRICDIM_DETAIL_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace metricdim::detail
{

// Calls body(i) for i in [0, count) on up to `threads` workers. body must only
// write to slot i of any shared output. The first exception is rethrown.
template <typename Body>
void parallel_for(std::size_t count, unsigned threads, Body && body)
{
    threads = std::max(1u, threads);
    if (threads == 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i)
            body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto work = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < count;) {
            try {
                body(i);
            }
            catch (...) {
                std::lock_guard lock(error_mutex);
                if (! error)
                    error = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < std::min<std::size_t>(threads, count); ++t)
        pool.emplace_back(work);
    for (auto & t : pool)
        t.join();
    if (error)
        std::rethrow_exception(error);
}

} // namespace metricdim::detail

#endif
