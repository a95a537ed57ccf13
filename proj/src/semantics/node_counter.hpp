#pragma once

#include <atomic>
#include <cstdint>

#include "afsolve/error.hpp"
#include "afsolve/semantics.hpp"

namespace afsolve::detail {

// Shared node budget for one top-level call. Safe to tick from several threads.
class NodeCounter {
public:
    explicit NodeCounter(const SearchOptions& options) : budget_(options.node_budget), stop_(&options.should_stop) {}

    void tick() {
        const auto n = count_.fetch_add(1, std::memory_order_relaxed) + 1;
        if (n > budget_) throw BudgetExceeded("search node budget of " + std::to_string(budget_) + " exhausted");
        if ((n & 255) == 1 && *stop_ && (*stop_)()) throw SearchCancelled("search cancelled");
    }

    std::uint64_t count() const noexcept { return count_.load(std::memory_order_relaxed); }

private:
    std::atomic<std::uint64_t> count_{0};
    std::uint64_t budget_;
    const std::function<bool()>* stop_;
};

}  // namespace afsolve::detail
