#pragma once

#include "collatz/bitnum.hpp"
#include "collatz/engine.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace collatz {

enum class GeneratorKind { all_ones, all_ones_with_zeros, decimal, lsb_bits };

// Recipe for one batch input. all_ones uses size_bits; all_ones_with_zeros
// uses size_bits and zeros; decimal and lsb_bits parse the literal.
struct GeneratorSpec {
    GeneratorKind kind = GeneratorKind::all_ones;
    std::size_t size_bits = 0;
    std::size_t zeros = 0;
    std::string literal;
};

// One row of batch output; field names match the CSV columns.
struct ExperimentRecord {
    std::uint64_t integer_size = 0;
    std::uint64_t zeros = 0;
    std::uint64_t expanded_size = 0;
    std::uint64_t halvings = 0;
    std::uint64_t odd_steps = 0;
    std::uint64_t stopping_time = 0;

    friend bool operator==(const ExperimentRecord&, const ExperimentRecord&) = default;
};

// A trajectory exhausted its step bound. That is a conjecture-violation
// candidate, so the batch aborts instead of writing a partial row.
class BoundExceededError : public std::runtime_error {
public:
    BoundExceededError(std::size_t spec_index, const std::string& description,
                       TraceStats partial);

    std::size_t spec_index() const { return spec_index_; }
    const TraceStats& partial_stats() const { return partial_; }

private:
    std::size_t spec_index_;
    TraceStats partial_;
};

// The n-bit number whose bits are all ones, i.e. 2^n - 1.
BitNum gen_all_ones(std::size_t n_bits);

// All-ones n-bit number with the zero_count bits just above the lowest bit
// cleared: bit 0 and the top n-zero_count-1 bits stay ones. Requires
// n_bits >= 3 and 1 <= zero_count <= n_bits - 2 so the value stays odd with
// a set top bit.
BitNum gen_all_ones_with_zeros(std::size_t n_bits, std::size_t zero_count);

BitNum make_input(const GeneratorSpec& spec);

// Human-readable one-liner for error messages and logs.
std::string describe(const GeneratorSpec& spec);

// Runs every spec to completion and returns records in spec order,
// regardless of how many worker threads execute them. jobs == 0 picks one
// worker per hardware thread. The first error (bound exhaustion or a bad
// spec) aborts the batch and is rethrown with the spec identified.
std::vector<ExperimentRecord> run_batch(std::span<const GeneratorSpec> specs,
                                        std::uint64_t max_steps,
                                        unsigned jobs = 0);

extern const char* const csv_header;

void write_csv(std::ostream& out, std::span<const ExperimentRecord> records);
void write_csv_file(const std::filesystem::path& path,
                    std::span<const ExperimentRecord> records);

// Strict reader for the exact schema write_csv emits; errors carry 1-based
// line numbers. Rows violating stopping_time == halvings + odd_steps or
// expanded_size >= integer_size are rejected here, not downstream.
std::vector<ExperimentRecord> read_csv(std::istream& in);
std::vector<ExperimentRecord> read_csv_file(const std::filesystem::path& path);

std::span<const std::string_view> csv_columns();

// Value of the named column; throws std::invalid_argument for unknown names.
std::uint64_t field_value(const ExperimentRecord& record, std::string_view column);

}  // namespace collatz
