#include "collatz/engine.hpp"

#include <algorithm>
#include <stdexcept>

namespace collatz {

namespace {

// Shared trajectory loop; on_step observes each produced value's width.
template <typename OnStep>
TraceStats run_impl(const BitNum& start, std::uint64_t max_steps, OnStep&& on_step) {
    if (max_steps == 0)
        throw std::invalid_argument("run: max_steps must be at least 1");

    TraceStats stats;
    stats.start_bit_length = start.bit_length();
    stats.max_bit_length = stats.start_bit_length;
    if (start.is_one()) {
        stats.reached_one = true;
        return stats;
    }

    BitNum x = start;
    for (std::uint64_t taken = 0; taken < max_steps; ++taken) {
        auto [next, kind] = step(x);
        x = std::move(next);
        if (kind == StepKind::halve)
            ++stats.halvings;
        else
            ++stats.odd_steps;
        stats.max_bit_length = std::max(stats.max_bit_length, x.bit_length());
        on_step(x.bit_length(), kind);
        if (x.is_one()) {
            stats.reached_one = true;
            break;
        }
    }
    stats.stopping_time = stats.halvings + stats.odd_steps;
    return stats;
}

}  // namespace

std::uint64_t default_max_steps(std::size_t start_bit_length) {
    return 100000ULL * static_cast<std::uint64_t>(start_bit_length);
}

std::pair<BitNum, std::uint64_t> normalize_to_odd(const BitNum& x) {
    BitNum v = x;
    std::uint64_t halvings = 0;
    while (v.is_even()) {
        v = halve(v);
        ++halvings;
    }
    return {std::move(v), halvings};
}

std::pair<BitNum, StepKind> step(const BitNum& x) {
    if (x.is_one())
        throw std::domain_error("step: value is already 1");
    if (x.is_even())
        return {halve(x), StepKind::halve};
    return {triple_plus_one(x), StepKind::triple};
}

TraceStats run_to_one(const BitNum& start, std::uint64_t max_steps) {
    return run_impl(start, max_steps, [](std::size_t, StepKind) {});
}

std::vector<TraceEvent> trace(const BitNum& start, std::uint64_t max_steps) {
    std::vector<TraceEvent> events;
    run_impl(start, max_steps, [&events](std::size_t bits, StepKind kind) {
        events.push_back({bits, kind});
    });
    return events;
}

TraceStats aggregate_trace(std::size_t start_bit_length,
                           std::span<const TraceEvent> events) {
    TraceStats stats;
    stats.start_bit_length = start_bit_length;
    stats.max_bit_length = start_bit_length;
    for (const TraceEvent& e : events) {
        if (e.kind == StepKind::halve)
            ++stats.halvings;
        else
            ++stats.odd_steps;
        stats.max_bit_length = std::max(stats.max_bit_length, e.bit_length);
    }
    stats.stopping_time = stats.halvings + stats.odd_steps;
    stats.reached_one =
        events.empty() ? start_bit_length == 1 : events.back().bit_length == 1;
    return stats;
}

}  // namespace collatz
