#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace mullineux {

/// Worker threads for sharded enumerations: hardware concurrency, capped by
/// the MULLINEUX_THREADS environment variable when it holds a positive value.
int worker_count();

/// Keeps the items satisfying pred, preserving input order. The predicate
/// runs on up to worker_count() threads; the first exception is rethrown.
template <class T, class Pred>
std::vector<T> parallel_filter(const std::vector<T>& items, Pred pred)
{
    const std::size_t n = items.size();
    std::vector<char> keep(n, 0);
    const std::size_t workers =
        std::min<std::size_t>(static_cast<std::size_t>(worker_count()), std::max<std::size_t>(1, n / 64));
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i)
            keep[i] = pred(items[i]) ? 1 : 0;
    } else {
        std::vector<std::exception_ptr> errors(workers);
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                try {
                    for (std::size_t i = w; i < n; i += workers)
                        keep[i] = pred(items[i]) ? 1 : 0;
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
        for (auto& th : pool)
            th.join();
        for (auto& err : errors)
            if (err)
                std::rethrow_exception(err);
    }
    std::vector<T> out;
    for (std::size_t i = 0; i < n; ++i)
        if (keep[i])
            out.push_back(items[i]);
    return out;
}

} // namespace mullineux
