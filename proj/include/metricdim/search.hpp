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

#ifndef METRICDIM_SEARCH_HPP
#define METRICDIM_SEARCH_HPP

#include <metricdim/detail/combinatorics.hpp>
#include <metricdim/graph.hpp>
#include <metricdim/resolvability.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace metricdim
{

struct SearchOptions
{
    // Largest subset size to try; 0 means the vertex count.
    std::size_t cap = 0;
    // Start at the variant's trivial lower bound so that every smaller size is
    // refuted. When false, start_size (if set) is honoured instead.
    bool certify = true;
    std::optional<std::size_t> start_size;
    // Accept only independent sets as witnesses. Refutation still covers all
    // subsets.
    bool require_independent = false;
    // Abort before a size whose subset count would push the running total of
    // subset tests past this budget.
    std::uint64_t budget = 100'000'000;
    unsigned threads = 1;
    // Reject subsets early when they fail to separate a recently seen
    // colliding pair. Never changes the result.
    bool prune = true;
};

enum class SearchStatus { Found, NotFoundUpToCap, NoneExists, BudgetExceeded };

inline constexpr std::string_view to_string(SearchStatus s)
{
    switch (s) {
        case SearchStatus::Found: return "found";
        case SearchStatus::NotFoundUpToCap: return "not_found_up_to_cap";
        case SearchStatus::NoneExists: return "none_exists";
        case SearchStatus::BudgetExceeded: return "budget_exceeded";
    }
    return "?";
}

struct SizeRecord
{
    std::size_t size = 0;
    // "enumerated" or "lower_bound" (size excluded without enumeration).
    std::string basis;
    std::uint64_t subsets = 0;
    bool exhaustive = false;
    bool resolving_found = false;
    bool independent_found = false;
};

struct DimensionResult
{
    Variant variant = Variant::VertexMetric;
    SearchStatus status = SearchStatus::NotFoundUpToCap;
    std::optional<std::size_t> value;
    std::vector<VertexId> witness;
    bool certified = false;
    bool require_independent = false;
    std::size_t lower_bound = 1;
    std::size_t start_size = 1;
    std::size_t cap = 0;
    // Size of the smallest resolving set met during the search, independent or
    // not.
    std::optional<std::size_t> smallest_resolving_size;
    std::vector<SizeRecord> trail;
    std::uint64_t subsets_examined = 0;
    double elapsed_ms = 0.0;
    std::string message;
};

// Smallest size that can possibly resolve: 2 for mixed (a landmark and its
// incident edges share code 0), 3 for multiset on non-paths, 1 otherwise.
inline std::size_t trivial_lower_bound(const LabeledGraph & g, Variant variant)
{
    switch (variant) {
        case Variant::MixedMetric: return 2;
        case Variant::Multiset: return is_path_graph(g) ? 1 : 3;
        default: return 1;
    }
}

namespace detail
{
    // Packs a code into one 64-bit key so that equal keys mean equal codes.
    // Ordered codes use positional base (diameter + 1); multiset codes use
    // base (k + 1) indexed by distance, i.e. a histogram of distances.
    class KeyEncoding
    {
    public:
        static std::optional<KeyEncoding> make(Variant variant, int max_distance, std::size_t k)
        {
            KeyEncoding enc;
            enc.multiset_ = variant == Variant::Multiset;
            const unsigned __int128 limit = std::numeric_limits<std::uint64_t>::max();
            if (enc.multiset_) {
                unsigned __int128 w = 1;
                for (int d = 0; d <= max_distance; ++d) {
                    if (w * k > limit)
                        return std::nullopt;
                    enc.weights_.push_back(static_cast<std::uint64_t>(w));
                    w *= (k + 1);
                }
            }
            else {
                unsigned __int128 w = 1;
                const unsigned base = static_cast<unsigned>(max_distance) + 1;
                for (std::size_t pos = 0; pos < k; ++pos) {
                    if (w * base - 1 > limit)
                        return std::nullopt;
                    enc.weights_.push_back(static_cast<std::uint64_t>(w));
                    w *= base;
                }
            }
            return enc;
        }

        std::uint64_t weight(std::size_t position, int distance) const
        {
            return multiset_ ? weights_[static_cast<std::size_t>(distance)]
                             : weights_[position] * static_cast<std::uint64_t>(distance);
        }

    private:
        bool multiset_ = false;
        std::vector<std::uint64_t> weights_;
    };

    struct BlockOutcome
    {
        std::optional<std::vector<VertexId>> first_resolving;
        std::optional<std::vector<VertexId>> first_independent;
    };

    class SubsetSearcher
    {
    public:
        SubsetSearcher(const LabeledGraph & g, const DistanceMatrix & dm, Variant variant) :
            g_(g), variant_(variant), elements_(compared_elements(g, variant))
        {
            const auto n = g.order();
            const auto count = elements_.size();
            columns_.resize(n * count);
            for (VertexId l = 0; l < n; ++l)
                for (std::size_t e = 0; e < count; ++e) {
                    int d = element_distance(g, dm, l, elements_[e]);
                    columns_[l * count + e] = d;
                    max_distance_ = std::max(max_distance_, d);
                }
        }

        int max_distance() const { return max_distance_; }

        // Scans all k-subsets whose smallest member is `first`, in lexicographic
        // order. Stops at the first resolving subset (or first independent
        // resolving subset when independence is required).
        BlockOutcome scan_block(VertexId first, std::size_t k, const std::optional<KeyEncoding> & enc,
                                bool require_independent, bool prune) const
        {
            Worker w(*this, k, enc, require_independent, prune);
            w.subset[0] = first;
            if (enc)
                w.seed_keys(first);
            w.descend(1);
            return std::move(w.outcome);
        }

    private:
        struct Worker
        {
            const SubsetSearcher & s;
            std::size_t k;
            const std::optional<KeyEncoding> & enc;
            bool require_independent;
            bool prune;
            std::vector<VertexId> subset;
            // keys[d] holds element keys for subset[0..d]
            std::vector<std::vector<std::uint64_t>> keys;
            std::vector<std::uint64_t> scratch;
            std::vector<std::pair<std::uint32_t, std::uint32_t>> pair_cache;
            BlockOutcome outcome;
            bool done = false;

            Worker(const SubsetSearcher & searcher, std::size_t size, const std::optional<KeyEncoding> & encoding,
                   bool need_independent, bool use_prune) :
                s(searcher), k(size), enc(encoding), require_independent(need_independent), prune(use_prune),
                subset(size)
            {
                if (enc)
                    keys.assign(k, std::vector<std::uint64_t>(s.elements_.size()));
            }

            void seed_keys(VertexId v)
            {
                const auto count = s.elements_.size();
                const int * col = s.columns_.data() + static_cast<std::size_t>(v) * count;
                for (std::size_t e = 0; e < count; ++e)
                    keys[0][e] = enc->weight(0, col[e]);
            }

            void extend_keys(std::size_t depth, VertexId v)
            {
                const auto count = s.elements_.size();
                const int * col = s.columns_.data() + static_cast<std::size_t>(v) * count;
                const auto & prev = keys[depth - 1];
                auto & cur = keys[depth];
                for (std::size_t e = 0; e < count; ++e)
                    cur[e] = prev[e] + enc->weight(depth, col[e]);
            }

            void descend(std::size_t depth)
            {
                if (done)
                    return;
                if (depth == k) {
                    leaf();
                    return;
                }
                const auto n = s.g_.order();
                for (VertexId v = subset[depth - 1] + 1; v + (k - depth) <= n && ! done; ++v) {
                    subset[depth] = v;
                    if (enc)
                        extend_keys(depth, v);
                    descend(depth + 1);
                }
            }

            void leaf()
            {
                if (! resolves())
                    return;
                if (! outcome.first_resolving)
                    outcome.first_resolving = subset;
                if (! require_independent) {
                    done = true;
                    return;
                }
                if (is_independent(s.g_, subset)) {
                    outcome.first_independent = subset;
                    done = true;
                }
            }

            bool resolves()
            {
                if (! enc)
                    return is_resolving(s.g_, s.dm_for_fallback(), subset, s.variant_).resolving;
                const auto & key = keys[k - 1];
                if (prune)
                    for (std::size_t i = 0; i < pair_cache.size(); ++i) {
                        auto [x, y] = pair_cache[i];
                        if (key[x] == key[y]) {
                            if (i > 0)
                                std::swap(pair_cache[i], pair_cache[i - 1]);
                            return false;
                        }
                    }
                scratch.assign(key.begin(), key.end());
                std::sort(scratch.begin(), scratch.end());
                auto dup = std::adjacent_find(scratch.begin(), scratch.end());
                if (dup == scratch.end())
                    return true;
                if (prune)
                    remember_collision(key, *dup);
                return false;
            }

            void remember_collision(const std::vector<std::uint64_t> & key, std::uint64_t value)
            {
                std::uint32_t first = 0;
                bool have_first = false;
                for (std::uint32_t e = 0; e < key.size(); ++e)
                    if (key[e] == value) {
                        if (! have_first) {
                            first = e;
                            have_first = true;
                        }
                        else {
                            if (pair_cache.size() >= 32)
                                pair_cache.pop_back();
                            pair_cache.insert(pair_cache.begin(), {first, e});
                            return;
                        }
                    }
            }
        };

        const DistanceMatrix & dm_for_fallback() const { return *fallback_dm_; }

    public:
        void set_fallback(const DistanceMatrix & dm) { fallback_dm_ = &dm; }

    private:
        const LabeledGraph & g_;
        Variant variant_;
        std::vector<Element> elements_;
        std::vector<int> columns_;
        int max_distance_ = 0;
        const DistanceMatrix * fallback_dm_ = nullptr;
    };
}

// Minimum resolving set size under a variant by exhaustive search over
// k-subsets in lexicographic order, k = lower bound .. cap. The witness is the
// lexicographically smallest resolving subset of the reported size; the
// result does not depend on the thread count.
inline DimensionResult min_dimension(const LabeledGraph & g, const DistanceMatrix & dm, Variant variant,
                                     const SearchOptions & options = {})
{
    const auto started = std::chrono::steady_clock::now();
    const std::size_t n = g.order();
    if (n < 2)
        throw GraphError("dimension search needs at least two vertices");
    if (dm.order() != n)
        throw GraphError("distance matrix does not match graph");

    DimensionResult result;
    result.variant = variant;
    result.require_independent = options.require_independent;
    result.lower_bound = trivial_lower_bound(g, variant);
    result.cap = options.cap == 0 ? n : std::min(options.cap, n);
    result.start_size = result.lower_bound;
    if (! options.certify && options.start_size)
        result.start_size = std::max<std::size_t>(1, *options.start_size);

    for (std::size_t k = 1; k < result.start_size && k <= result.cap; ++k)
        result.trail.push_back({k, k < result.lower_bound ? "lower_bound" : "skipped", 0, false, false, false});

    detail::SubsetSearcher searcher(g, dm, variant);
    searcher.set_fallback(dm);
    const unsigned threads = std::max(1u, options.threads);

    bool all_below_refuted = result.start_size <= result.lower_bound;
    auto finish = [&](SearchStatus status, std::string message) {
        result.status = status;
        result.message = std::move(message);
        result.elapsed_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
        return result;
    };

    for (std::size_t k = std::max<std::size_t>(1, result.start_size); k <= result.cap; ++k) {
        const auto total = detail::binomial(n, k);
        if (detail::saturating_add(result.subsets_examined, total) > options.budget)
            return finish(SearchStatus::BudgetExceeded,
                          "size " + std::to_string(k) + " needs " + std::to_string(total) +
                              " subset tests; budget of " + std::to_string(options.budget) + " would be exceeded after " +
                              std::to_string(result.subsets_examined) + " tests");

        auto enc = detail::KeyEncoding::make(variant, searcher.max_distance(), k);
        const VertexId blocks = static_cast<VertexId>(n - k + 1);
        std::vector<detail::BlockOutcome> outcomes(blocks);
        std::atomic<VertexId> next{0};
        std::atomic<VertexId> stop_after{blocks};

        auto work = [&] {
            for (;;) {
                VertexId b = next.fetch_add(1);
                if (b >= blocks || b > stop_after.load())
                    return;
                outcomes[b] = searcher.scan_block(b, k, enc, options.require_independent, options.prune);
                bool hit = options.require_independent ? outcomes[b].first_independent.has_value()
                                                       : outcomes[b].first_resolving.has_value();
                if (hit) {
                    VertexId cur = stop_after.load();
                    while (b < cur && ! stop_after.compare_exchange_weak(cur, b)) {
                    }
                }
            }
        };
        if (threads == 1 || blocks == 1)
            work();
        else {
            std::vector<std::thread> pool;
            for (unsigned t = 0; t < std::min<unsigned>(threads, blocks); ++t)
                pool.emplace_back(work);
            for (auto & t : pool)
                t.join();
        }

        SizeRecord record{k, "enumerated", 0, false, false, false};
        const std::vector<VertexId> * witness = nullptr;
        const std::vector<VertexId> * first_any = nullptr;
        const VertexId last_block = std::min<VertexId>(stop_after.load(), blocks - 1);
        for (VertexId b = 0; b <= last_block; ++b) {
            if (! first_any && outcomes[b].first_resolving)
                first_any = &*outcomes[b].first_resolving;
            const auto & target = options.require_independent ? outcomes[b].first_independent : outcomes[b].first_resolving;
            if (target) {
                witness = &*target;
                break;
            }
        }
        record.resolving_found = first_any != nullptr;
        record.independent_found = witness != nullptr && is_independent(g, *witness);
        record.exhaustive = witness == nullptr;
        record.subsets = witness ? detail::lex_rank<VertexId>(*witness, n) + 1 : total;
        result.subsets_examined = detail::saturating_add(result.subsets_examined, record.subsets);
        result.trail.push_back(record);

        if (first_any && ! result.smallest_resolving_size)
            result.smallest_resolving_size = k;

        if (witness) {
            result.value = k;
            result.witness = *witness;
            result.certified = all_below_refuted && result.smallest_resolving_size == k;
            return finish(SearchStatus::Found, "");
        }
    }

    // resolving sets are closed under supersets, so a refuted full vertex set
    // rules out every size
    if (! result.trail.empty() && result.trail.back().size == n && result.trail.back().basis == "enumerated")
        return finish(SearchStatus::NoneExists, "no subset of the vertex set resolves the graph");
    return finish(SearchStatus::NotFoundUpToCap, "no resolving set of size <= " + std::to_string(result.cap));
}

inline DimensionResult min_dimension(const LabeledGraph & g, Variant variant, const SearchOptions & options = {})
{
    return min_dimension(g, all_pairs_distances(g), variant, options);
}

} // namespace metricdim

#endif
