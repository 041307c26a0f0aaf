#pragma once

#include "collatz/bitnum.hpp"

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace collatz {

enum class StepKind { halve, triple };

// Aggregate statistics of one trajectory run. stopping_time counts every
// step of both kinds; max_bit_length covers every value the run produced,
// including each 3x+1 result before its following halving.
struct TraceStats {
    std::size_t start_bit_length = 0;
    std::uint64_t halvings = 0;
    std::uint64_t odd_steps = 0;
    std::uint64_t stopping_time = 0;
    std::size_t max_bit_length = 0;
    bool reached_one = false;

    friend bool operator==(const TraceStats&, const TraceStats&) = default;
};

// One step of a trajectory: what was applied and how wide the result was.
struct TraceEvent {
    std::size_t bit_length = 0;
    StepKind kind = StepKind::halve;

    friend bool operator==(const TraceEvent&, const TraceEvent&) = default;
};

// 100000 steps per start bit: observed stopping times stay within ~15 steps
// per bit, so exhausting this bound flags a conjecture-violation candidate
// rather than a slow trajectory.
std::uint64_t default_max_steps(std::size_t start_bit_length);

// Strips factors of two; returns the odd core and how many halvings it took.
std::pair<BitNum, std::uint64_t> normalize_to_odd(const BitNum& x);

// One Collatz step. x must be > 1: even halves, odd becomes 3x+1.
std::pair<BitNum, StepKind> step(const BitNum& x);

// Runs until the value hits 1 or max_steps is exhausted. On exhaustion the
// partial statistics come back with reached_one == false; no exception.
TraceStats run_to_one(const BitNum& start, std::uint64_t max_steps);

// Same run, but records every step.
std::vector<TraceEvent> trace(const BitNum& start, std::uint64_t max_steps);

// Folds a recorded trace back into the statistics run_to_one would report.
TraceStats aggregate_trace(std::size_t start_bit_length,
                           std::span<const TraceEvent> events);

}  // namespace collatz
