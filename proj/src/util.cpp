#include "weakclose/util.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace weakclose {

int thread_budget() {
    static const int budget = [] {
        int hw = static_cast<int>(std::thread::hardware_concurrency());
        if (hw <= 0) hw = 1;
        if (const char* env = std::getenv("WEAKCLOSE_THREADS")) {
            char* end = nullptr;
            long v = std::strtol(env, &end, 10);
            if (end != env && v >= 1) hw = static_cast<int>(std::min<long>(v, 64));
        }
        return std::max(1, hw);
    }();
    return budget;
}

void parallel_for(int n, const std::function<void(int)>& fn) {
    int workers = std::min(thread_budget(), n);
    if (workers <= 1 || n < 256) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (int i = w; i < n; i += workers) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

} // namespace weakclose
