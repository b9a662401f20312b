#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace polyspace {

/// Samples are cut into fixed-size blocks; block b always draws from random
/// substream b. Shards are contiguous runs of blocks handed to workers, so
/// the shard count changes scheduling but never which numbers are drawn.
struct ShardLayout
{
    static constexpr std::int64_t kDefaultBlockSize = 4096;

    std::int64_t samples = 0;
    std::int64_t block_size = kDefaultBlockSize;
    int shards = 1;
    int threads = 1;

    std::int64_t blocks() const noexcept { return (samples + block_size - 1) / block_size; }
};

/// POLYSPACE_THREADS if set and positive, otherwise the hardware concurrency.
int default_thread_count();

/// Runs fn(block, first_sample, count) for every block and returns the
/// results indexed by block.
template <class Partial, class BlockFn>
std::vector<Partial> run_blocks(const ShardLayout& layout, BlockFn&& fn)
{
    const std::int64_t blocks = layout.blocks();
    std::vector<Partial> partials(static_cast<std::size_t>(blocks));
    const int shards = std::max(1, layout.shards);

    auto run_shard = [&](int shard) {
        const std::int64_t begin = blocks * shard / shards;
        const std::int64_t end = blocks * (shard + 1) / shards;
        for (std::int64_t b = begin; b < end; ++b) {
            const std::int64_t first = b * layout.block_size;
            const std::int64_t count = std::min(layout.block_size, layout.samples - first);
            partials[static_cast<std::size_t>(b)] = fn(b, first, count);
        }
    };

    const int workers = std::clamp(layout.threads, 1, shards);
    if (workers == 1) {
        for (int s = 0; s < shards; ++s) run_shard(s);
        return partials;
    }

    std::atomic<int> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (int s = next++; s < shards; s = next++) {
                try {
                    run_shard(s);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
    return partials;
}

} // namespace polyspace
