#include "collatz/experiments.hpp"

#include <atomic>
#include <array>
#include <charconv>
#include <exception>
#include <fstream>
#include <ostream>
#include <thread>

namespace collatz {

namespace {

constexpr std::array<std::string_view, 6> columns = {
    "integer_size", "zeros",     "expanded_size",
    "halvings",     "odd_steps", "stopping_time",
};

std::uint64_t parse_field(std::string_view field, std::size_t line_no,
                          std::string_view column) {
    const std::string where =
        "line " + std::to_string(line_no) + ": field " + std::string(column);
    if (field.empty())
        throw std::invalid_argument(where + " is empty");
    std::uint64_t value = 0;
    const auto [ptr, ec] =
        std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size())
        throw std::invalid_argument(where + " is not an unsigned integer: \"" +
                                    std::string(field) + "\"");
    return value;
}

ExperimentRecord run_one(const GeneratorSpec& spec, std::size_t index,
                         std::uint64_t max_steps) {
    BitNum input = [&] {
        try {
            return make_input(spec);
        } catch (const std::exception& e) {
            throw std::invalid_argument("spec " + std::to_string(index) + " (" +
                                        describe(spec) + "): " + e.what());
        }
    }();

    const TraceStats stats = run_to_one(input, max_steps);
    if (!stats.reached_one)
        throw BoundExceededError(index, describe(spec), stats);

    ExperimentRecord record;
    record.integer_size = stats.start_bit_length;
    record.zeros = spec.kind == GeneratorKind::all_ones_with_zeros ? spec.zeros : 0;
    record.expanded_size = stats.max_bit_length;
    record.halvings = stats.halvings;
    record.odd_steps = stats.odd_steps;
    record.stopping_time = stats.stopping_time;
    return record;
}

}  // namespace

BoundExceededError::BoundExceededError(std::size_t spec_index,
                                       const std::string& description,
                                       TraceStats partial)
    : std::runtime_error("spec " + std::to_string(spec_index) + " (" + description +
                         "): step bound exhausted after " +
                         std::to_string(partial.stopping_time) +
                         " steps without reaching 1"),
      spec_index_(spec_index),
      partial_(partial) {}

BitNum gen_all_ones(std::size_t n_bits) {
    if (n_bits == 0)
        throw std::invalid_argument("gen_all_ones: size must be at least 1");
    return BitNum::from_lsb_text(std::string(n_bits, '1'));
}

BitNum gen_all_ones_with_zeros(std::size_t n_bits, std::size_t zero_count) {
    if (n_bits < 3)
        throw std::invalid_argument("gen_all_ones_with_zeros: size must be at least 3");
    if (zero_count < 1 || zero_count > n_bits - 2)
        throw std::invalid_argument(
            "gen_all_ones_with_zeros: zero count must be in [1, size - 2], got " +
            std::to_string(zero_count) + " for size " + std::to_string(n_bits));
    std::string bits(n_bits, '1');
    for (std::size_t i = 1; i <= zero_count; ++i)
        bits[i] = '0';
    return BitNum::from_lsb_text(bits);
}

BitNum make_input(const GeneratorSpec& spec) {
    switch (spec.kind) {
        case GeneratorKind::all_ones:
            return gen_all_ones(spec.size_bits);
        case GeneratorKind::all_ones_with_zeros:
            return gen_all_ones_with_zeros(spec.size_bits, spec.zeros);
        case GeneratorKind::decimal:
            return BitNum::from_decimal(spec.literal);
        case GeneratorKind::lsb_bits:
            return BitNum::from_lsb_text(spec.literal);
    }
    throw std::invalid_argument("make_input: unknown generator kind");
}

std::string describe(const GeneratorSpec& spec) {
    const auto shortened = [](const std::string& s) {
        return s.size() <= 32 ? s : s.substr(0, 32) + "...";
    };
    switch (spec.kind) {
        case GeneratorKind::all_ones:
            return "all-ones size=" + std::to_string(spec.size_bits);
        case GeneratorKind::all_ones_with_zeros:
            return "all-ones size=" + std::to_string(spec.size_bits) +
                   " zeros=" + std::to_string(spec.zeros);
        case GeneratorKind::decimal:
            return "decimal \"" + shortened(spec.literal) + "\"";
        case GeneratorKind::lsb_bits:
            return "bits \"" + shortened(spec.literal) + "\"";
    }
    return "unknown";
}

std::vector<ExperimentRecord> run_batch(std::span<const GeneratorSpec> specs,
                                        std::uint64_t max_steps, unsigned jobs) {
    if (max_steps == 0)
        throw std::invalid_argument("run_batch: max_steps must be at least 1");

    std::vector<ExperimentRecord> records(specs.size());
    std::vector<std::exception_ptr> failures(specs.size());
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};

    const auto worker = [&] {
        while (!failed.load(std::memory_order_relaxed)) {
            const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= specs.size())
                return;
            try {
                records[i] = run_one(specs[i], i, max_steps);
            } catch (...) {
                failures[i] = std::current_exception();
                failed.store(true, std::memory_order_relaxed);
            }
        }
    };

    std::size_t n_jobs =
        jobs != 0 ? jobs : std::max(1u, std::thread::hardware_concurrency());
    n_jobs = std::min(n_jobs, std::max<std::size_t>(specs.size(), 1));

    if (n_jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(n_jobs);
        for (std::size_t i = 0; i < n_jobs; ++i)
            pool.emplace_back(worker);
        for (std::thread& t : pool)
            t.join();
    }

    for (const std::exception_ptr& failure : failures) {
        if (failure)
            std::rethrow_exception(failure);
    }
    return records;
}

const char* const csv_header =
    "integer_size,zeros,expanded_size,halvings,odd_steps,stopping_time";

void write_csv(std::ostream& out, std::span<const ExperimentRecord> records) {
    out << csv_header << '\n';
    for (const ExperimentRecord& r : records) {
        out << r.integer_size << ',' << r.zeros << ',' << r.expanded_size << ','
            << r.halvings << ',' << r.odd_steps << ',' << r.stopping_time << '\n';
    }
    if (!out)
        throw std::runtime_error("write_csv: stream failure");
}

void write_csv_file(const std::filesystem::path& path,
                    std::span<const ExperimentRecord> records) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot open for writing: " + path.string());
    write_csv(out, records);
    out.flush();
    if (!out)
        throw std::runtime_error("write failed: " + path.string());
}

std::vector<ExperimentRecord> read_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line))
        throw std::invalid_argument("line 1: missing header");
    if (!line.empty() && line.back() == '\r')
        line.pop_back();
    if (line != csv_header)
        throw std::invalid_argument("line 1: header must be exactly \"" +
                                    std::string(csv_header) + "\", got \"" + line +
                                    "\"");

    std::vector<ExperimentRecord> records;
    for (std::size_t line_no = 2; std::getline(in, line); ++line_no) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        const std::string where = "line " + std::to_string(line_no);

        std::array<std::string_view, 6> fields;
        std::string_view rest = line;
        for (std::size_t f = 0; f < fields.size(); ++f) {
            const std::size_t comma = rest.find(',');
            if (f + 1 < fields.size()) {
                if (comma == std::string_view::npos)
                    throw std::invalid_argument(where + ": expected 6 fields, got " +
                                                std::to_string(f + 1));
                fields[f] = rest.substr(0, comma);
                rest.remove_prefix(comma + 1);
            } else {
                if (comma != std::string_view::npos)
                    throw std::invalid_argument(where + ": expected 6 fields, got more");
                fields[f] = rest;
            }
        }

        ExperimentRecord r;
        r.integer_size = parse_field(fields[0], line_no, columns[0]);
        r.zeros = parse_field(fields[1], line_no, columns[1]);
        r.expanded_size = parse_field(fields[2], line_no, columns[2]);
        r.halvings = parse_field(fields[3], line_no, columns[3]);
        r.odd_steps = parse_field(fields[4], line_no, columns[4]);
        r.stopping_time = parse_field(fields[5], line_no, columns[5]);

        if (r.stopping_time != r.halvings + r.odd_steps)
            throw std::invalid_argument(
                where + ": stopping_time (" + std::to_string(r.stopping_time) +
                ") != halvings (" + std::to_string(r.halvings) + ") + odd_steps (" +
                std::to_string(r.odd_steps) + ")");
        if (r.expanded_size < r.integer_size)
            throw std::invalid_argument(
                where + ": expanded_size (" + std::to_string(r.expanded_size) +
                ") < integer_size (" + std::to_string(r.integer_size) + ")");
        records.push_back(r);
    }
    return records;
}

std::vector<ExperimentRecord> read_csv_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open for reading: " + path.string());
    return read_csv(in);
}

std::span<const std::string_view> csv_columns() {
    return columns;
}

std::uint64_t field_value(const ExperimentRecord& record, std::string_view column) {
    if (column == "integer_size")
        return record.integer_size;
    if (column == "zeros")
        return record.zeros;
    if (column == "expanded_size")
        return record.expanded_size;
    if (column == "halvings")
        return record.halvings;
    if (column == "odd_steps")
        return record.odd_steps;
    if (column == "stopping_time")
        return record.stopping_time;
    throw std::invalid_argument("unknown column: \"" + std::string(column) + "\"");
}

}  // namespace collatz
