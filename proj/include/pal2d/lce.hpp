#pragma once

#include <atomic>
#include <cstdint>
#include <vector>

#include "pal2d/grid.hpp"

namespace pal2d {

struct SequenceCollection {
    std::vector<std::vector<Symbol>> sequences;
    std::size_t total_length() const {
        std::size_t t = 0;
        for (const auto& s : sequences) t += s.size();
        return t;
    }
};

struct SeqPos {
    int seq = 0;
    int off = 0;
};

// Range-minimum over a fixed int32 array: per-block minima plus a sparse
// table over blocks; queries scan at most two blocks.
class BlockRmq {
public:
    BlockRmq() = default;
    void build(const std::vector<std::int32_t>& a);
    std::int32_t min_in(int l, int r) const;  // inclusive, l <= r

private:
    static constexpr int kBlock = 64;
    const std::vector<std::int32_t>* a_ = nullptr;
    std::vector<std::vector<std::int32_t>> table_;  // table_[t][b] = min over blocks b..b+2^t-1
};

// Generalized longest-common-extension index over a collection of integer
// sequences. Concatenates with unique separators, builds a suffix array by
// prefix doubling, the LCP array by Kasai, and answers lcp queries with one
// range-minimum lookup. Queries are exact and O(1); build is O(L log L).
class LceIndex {
public:
    explicit LceIndex(const SequenceCollection& c);
    explicit LceIndex(std::vector<std::vector<Symbol>> sequences);

    LceIndex(const LceIndex&) = delete;
    LceIndex& operator=(const LceIndex&) = delete;

    int num_sequences() const { return static_cast<int>(lengths_.size()); }
    int seq_length(int s) const { return lengths_[s]; }

    // Longest common prefix of the suffixes at a and b. off == len denotes
    // the empty suffix. Bumps the query counter by exactly 1.
    int lcp(SeqPos a, SeqPos b) const;

    struct KangarooResult {
        int matched = 0;                     // prefix length matched with <= budget mismatches
        std::vector<int> mismatch_offsets;   // first min(budget+1, all) mismatches, increasing
    };

    // Skips past mismatches with repeated lcp calls; stops after budget+1
    // mismatches or at limit. Issues at most budget+1 lcp calls.
    KangarooResult kangaroo(SeqPos a, SeqPos b, int limit, long long budget) const;

    std::uint64_t query_count() const;

    // Total lcp calls issued by the calling thread across all indexes; used
    // for per-center instrumentation.
    static std::uint64_t thread_query_count();

private:
    void build(const std::vector<std::vector<Symbol>>& seqs);
    int global_pos(SeqPos p) const;

    std::vector<int> start_;
    std::vector<int> lengths_;
    std::vector<std::int32_t> rank_;
    std::vector<std::int32_t> lcp_;
    BlockRmq rmq_;

    struct alignas(64) CountSlot {
        std::atomic<std::uint64_t> v{0};
    };
    static constexpr int kCountSlots = 64;
    mutable std::vector<CountSlot> counts_{kCountSlots};
};

}  // namespace pal2d
