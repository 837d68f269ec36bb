#pragma once

#include <cstddef>
#include <vector>

namespace hexspan {

enum class Execution { serial, parallel };

// Evaluates fn(0..n-1) into a vector indexed by position, so the result is
// identical for both policies regardless of scheduling.
template <typename T, typename Fn>
std::vector<T> indexed_map(std::size_t n, Execution exec, Fn&& fn)
{
    std::vector<T> out(n);
    const auto count = static_cast<long long>(n);
    if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
        for (long long idx = 0; idx < count; ++idx)
            out[static_cast<std::size_t>(idx)] = fn(static_cast<std::size_t>(idx));
    } else {
        for (long long idx = 0; idx < count; ++idx)
            out[static_cast<std::size_t>(idx)] = fn(static_cast<std::size_t>(idx));
    }
    return out;
}

} // namespace hexspan
