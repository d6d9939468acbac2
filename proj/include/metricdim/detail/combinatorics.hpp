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

#ifndef METRICDIM_DETAIL_COMBINATORICS_HPP
#define METRICDIM_DETAIL_COMBINATORICS_HPP

#include <cstdint>
#include <limits>
#include <span>

namespace metricdim::detail
{

inline constexpr std::uint64_t saturated = std::numeric_limits<std::uint64_t>::max();

// C(n, k), saturating at 2^64 - 1.
constexpr std::uint64_t binomial(std::uint64_t n, std::uint64_t k)
{
    if (k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    unsigned __int128 r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > saturated)
            return saturated;
    }
    return static_cast<std::uint64_t>(r);
}

constexpr std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b)
{
    return a > saturated - b ? saturated : a + b;
}

// Zero-based position of a sorted k-subset of {0..n-1} in lexicographic order.
template <typename T>
std::uint64_t lex_rank(std::span<const T> subset, std::uint64_t n)
{
    const std::uint64_t k = subset.size();
    std::uint64_t rank = 0;
    std::uint64_t next = 0;
    for (std::uint64_t i = 0; i < k; ++i) {
        for (std::uint64_t j = next; j < static_cast<std::uint64_t>(subset[i]); ++j)
            rank = saturating_add(rank, binomial(n - 1 - j, k - 1 - i));
        next = static_cast<std::uint64_t>(subset[i]) + 1;
    }
    return rank;
}

} // namespace metricdim::detail

#endif
