// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file parallel.cpp
//---------------------------------------------------------------------------//
#include "fraclap/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace fraclap
{
std::size_t worker_count()
{
    if (char const* env = std::getenv("FRACLAP_THREADS"))
    {
        try
        {
            long const value = std::stol(env);
            if (value > 0)
                return static_cast<std::size_t>(value);
        }
        catch (std::exception const&)
        {
            // Unparseable values fall back to the hardware default.
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(std::size_t count, std::function<void(std::size_t)> const& body)
{
    std::size_t const workers = std::min(worker_count(), count);
    if (workers <= 1)
    {
        for (std::size_t i = 0; i < count; ++i)
            body(i);
        return;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&]() {
        for (std::size_t i = next++; i < count; i = next++)
        {
            try
            {
                body(i);
            }
            catch (...)
            {
                std::lock_guard lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
                next = count;
            }
        }
    };

    std::vector<std::thread> threads;
    threads.reserve(workers - 1);
    for (std::size_t t = 1; t < workers; ++t)
        threads.emplace_back(work);
    work();
    for (auto& t : threads)
        t.join();
    if (failure)
        std::rethrow_exception(failure);
}

}  // namespace fraclap
