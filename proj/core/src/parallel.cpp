#include "gve/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace gve {

int worker_count() {
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw < 1) hw = 1;
    if (const char* env = std::getenv("GEK_THREADS")) {
        int cap = std::atoi(env);
        if (cap >= 1 && cap < hw) hw = cap;
    }
    return hw;
}

void parallel_chunks(int total, int chunk_count,
                     const std::function<void(int, int, int)>& fn) {
    if (total <= 0) return;
    if (chunk_count > total) chunk_count = total;
    if (chunk_count < 1) chunk_count = 1;

    auto run_chunk = [&](int c) {
        // even split, first (total % chunk_count) chunks get one extra
        int base = total / chunk_count;
        int extra = total % chunk_count;
        int begin = c * base + std::min(c, extra);
        int end = begin + base + (c < extra ? 1 : 0);
        fn(c, begin, end);
    };

    int threads = std::min(worker_count(), chunk_count);
    if (threads <= 1) {
        for (int c = 0; c < chunk_count; ++c) run_chunk(c);
        return;
    }

    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
            for (;;) {
                int c = next.fetch_add(1);
                if (c >= chunk_count) break;
                run_chunk(c);
            }
        });
    }
    for (auto& th : pool) th.join();
}

void parallel_for(int total, const std::function<void(int)>& fn) {
    int chunks = std::min(total, 64);
    parallel_chunks(total, chunks, [&](int, int begin, int end) {
        for (int i = begin; i < end; ++i) fn(i);
    });
}

}  // namespace gve
