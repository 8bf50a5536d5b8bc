#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

namespace fintop {

/// Worker count: FINTOP_THREADS if set, otherwise hardware concurrency.
inline unsigned default_threads() {
    if (const char* env = std::getenv("FINTOP_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0)
            return static_cast<unsigned>(v);
    }
    return std::max(1U, std::thread::hardware_concurrency());
}

/// Runs body(i) for i in [0, count) on up to `threads` workers. Results must
/// be written to index-addressed storage so output order never depends on
/// scheduling. The first exception thrown by any worker is rethrown.
template <class Body>
void parallel_for(std::size_t count, unsigned threads, Body&& body) {
    threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
    if (threads == 1) {
        for (std::size_t i = 0; i < count; ++i)
            body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count)
                return;
            try {
                body(i);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
                next.store(count);
            }
        }
    };
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back(worker);
    pool.clear();
    if (failure)
        std::rethrow_exception(failure);
}

/// Concurrent-read, exclusive-write cache. Values are deterministic functions
/// of their keys, so a lost race only duplicates work.
template <class Key, class Value, class Hash = std::hash<Key>>
class Memo {
public:
    std::optional<Value> find(const Key& k) const {
        std::shared_lock lock(mutex_);
        if (auto it = map_.find(k); it != map_.end())
            return it->second;
        return std::nullopt;
    }

    void insert(const Key& k, const Value& v) {
        std::unique_lock lock(mutex_);
        map_.emplace(k, v);
    }

    template <class Update>
    Value update(const Key& k, Update&& f) {
        std::unique_lock lock(mutex_);
        Value& v = map_[k];
        f(v);
        return v;
    }

    std::size_t size() const {
        std::shared_lock lock(mutex_);
        return map_.size();
    }

    void clear() {
        std::unique_lock lock(mutex_);
        map_.clear();
    }

private:
    mutable std::shared_mutex mutex_;
    std::unordered_map<Key, Value, Hash> map_;
};

} // namespace fintop
