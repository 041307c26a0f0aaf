#include "collatz/bitnum.hpp"
#include "collatz/engine.hpp"
#include "collatz/experiments.hpp"
#include "collatz/regress.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace collatz;

// 0 success; 2 usage or invalid input; 3 step bound exhausted; 4 file I/O.
constexpr int exit_ok = 0;
constexpr int exit_usage = 2;
constexpr int exit_bound = 3;
constexpr int exit_io = 4;

// Largest accepted --all-ones size; far beyond practical run times but keeps
// size arithmetic comfortably inside 64 bits.
constexpr std::uint64_t max_size_bits = 50'000'000;

struct SizeRange {
    std::uint64_t low = 0;
    std::uint64_t high = 0;
    std::uint64_t step = 1;
};

std::uint64_t parse_u64(std::string_view text, const std::string& what) {
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size())
        throw std::invalid_argument(what + " is not an unsigned integer: \"" +
                                    std::string(text) + "\"");
    return value;
}

// Inclusive LOW..HIGH with optional :STEP, e.g. "5..100" or "100..3000:100".
SizeRange parse_range(const std::string& text) {
    const auto bad = [&text](const std::string& why) {
        throw std::invalid_argument("range \"" + text + "\": " + why);
    };
    const std::size_t dots = text.find("..");
    if (dots == std::string::npos)
        bad("expected LOW..HIGH or LOW..HIGH:STEP");

    SizeRange range;
    range.low = parse_u64(text.substr(0, dots), "LOW");
    std::string rest = text.substr(dots + 2);
    const std::size_t colon = rest.find(':');
    if (colon != std::string::npos) {
        range.step = parse_u64(rest.substr(colon + 1), "STEP");
        rest = rest.substr(0, colon);
    }
    range.high = parse_u64(rest, "HIGH");

    if (range.low < 1)
        bad("LOW must be at least 1");
    if (range.high < range.low)
        bad("HIGH must not be below LOW");
    if (range.step < 1)
        bad("STEP must be at least 1");
    if (range.high > max_size_bits)
        bad("HIGH must be at most " + std::to_string(max_size_bits));
    return range;
}

std::string stats_plain(const TraceStats& s) {
    std::string out;
    out += "start_bit_length  " + std::to_string(s.start_bit_length) + "\n";
    out += "halvings          " + std::to_string(s.halvings) + "\n";
    out += "odd_steps         " + std::to_string(s.odd_steps) + "\n";
    out += "stopping_time     " + std::to_string(s.stopping_time) + "\n";
    out += "max_bit_length    " + std::to_string(s.max_bit_length) + "\n";
    out += std::string("reached_one       ") + (s.reached_one ? "true" : "false") + "\n";
    return out;
}

std::string stats_json(const TraceStats& s) {
    const nlohmann::ordered_json j{
        {"start_bit_length", s.start_bit_length},
        {"halvings", s.halvings},
        {"odd_steps", s.odd_steps},
        {"stopping_time", s.stopping_time},
        {"max_bit_length", s.max_bit_length},
        {"reached_one", s.reached_one},
    };
    return j.dump(2) + "\n";
}

std::string stats_csv(const TraceStats& s) {
    std::string out =
        "start_bit_length,halvings,odd_steps,stopping_time,max_bit_length,reached_one\n";
    out += std::to_string(s.start_bit_length) + ',' + std::to_string(s.halvings) +
           ',' + std::to_string(s.odd_steps) + ',' + std::to_string(s.stopping_time) +
           ',' + std::to_string(s.max_bit_length) + ',' + (s.reached_one ? "1" : "0") +
           "\n";
    return out;
}

bool known_column(std::string_view name) {
    const auto cols = csv_columns();
    return std::find(cols.begin(), cols.end(), name) != cols.end();
}

std::string column_list() {
    std::string out;
    for (const std::string_view col : csv_columns()) {
        if (!out.empty())
            out += ", ";
        out += col;
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Collatz trajectory runner for arbitrarily large integers"};
    app.require_subcommand(1);

    // ---- verify: one input, full trajectory report ----
    auto* verify = app.add_subcommand(
        "verify", "Run a single value to 1 and report trajectory statistics");
    std::string v_decimal, v_bits;
    std::uint64_t v_all_ones = 0, v_zeros = 0, v_max_steps = 0;
    std::string v_format = "plain";
    auto* v_opt_decimal =
        verify->add_option("--decimal", v_decimal, "Input as a base-10 literal");
    auto* v_opt_bits = verify->add_option(
        "--bits", v_bits, "Input as a bit string, least significant bit first");
    auto* v_opt_all_ones = verify->add_option(
        "--all-ones", v_all_ones, "Input is the N-bit all-ones number 2^N - 1");
    verify
        ->add_option("--zeros", v_zeros,
                     "Clear this many bits just above the lowest bit of the "
                     "all-ones input")
        ->needs(v_opt_all_ones);
    auto* v_opt_max = verify->add_option(
        "--max-steps", v_max_steps,
        "Step bound (default: 100000 per input bit)");
    verify->add_option("--format", v_format, "Report format: plain, json or csv")
        ->check(CLI::IsMember({"plain", "json", "csv"}));

    // ---- batch: a family of inputs, one CSV row each ----
    auto* batch = app.add_subcommand(
        "batch", "Run a family of all-ones inputs and write one CSV row per input");
    std::string b_range, b_out;
    std::uint64_t b_zeros = 0, b_max_steps = 0;
    unsigned b_jobs = 0;
    std::string b_format = "plain";
    batch
        ->add_option("--all-ones", b_range,
                     "Input sizes as an inclusive range LOW..HIGH[:STEP]")
        ->required();
    auto* b_opt_zeros = batch->add_option(
        "--zeros", b_zeros,
        "Clear this many bits just above the lowest bit of every input");
    auto* b_opt_max = batch->add_option(
        "--max-steps", b_max_steps,
        "Step bound per trajectory (default: 100000 per bit of the largest input)");
    batch->add_option("--out", b_out, "CSV output path")->required();
    batch->add_option("--jobs", b_jobs,
                      "Worker threads (default: one per hardware thread)");
    batch->add_option("--format", b_format, "Summary format: plain or json")
        ->check(CLI::IsMember({"plain", "json"}));

    // ---- regress: least-squares fit over batch output ----
    auto* regress = app.add_subcommand(
        "regress", "Fit a least-squares line to two columns of a batch CSV");
    std::string r_in, r_x = "integer_size", r_y = "expanded_size";
    std::string r_format = "plain";
    regress->add_option("--in", r_in, "CSV input path (batch schema)")->required();
    regress->add_option("--x", r_x, "Predictor column");
    regress->add_option("--y", r_y, "Response column");
    regress->add_option("--format", r_format, "Report format: plain or json")
        ->check(CLI::IsMember({"plain", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (*verify) {
            const int provided = (v_opt_decimal->count() ? 1 : 0) +
                                 (v_opt_bits->count() ? 1 : 0) +
                                 (v_opt_all_ones->count() ? 1 : 0);
            if (provided != 1)
                throw std::invalid_argument(
                    "verify: provide exactly one of --decimal, --bits, --all-ones");
            if (v_opt_max->count() && v_max_steps == 0)
                throw std::invalid_argument("--max-steps must be at least 1");
            if (v_opt_all_ones->count() && v_all_ones > max_size_bits)
                throw std::invalid_argument("--all-ones size must be at most " +
                                            std::to_string(max_size_bits));

            GeneratorSpec spec;
            if (v_opt_decimal->count()) {
                spec = {GeneratorKind::decimal, 0, 0, v_decimal};
            } else if (v_opt_bits->count()) {
                spec = {GeneratorKind::lsb_bits, 0, 0, v_bits};
            } else if (verify->count("--zeros")) {
                spec = {GeneratorKind::all_ones_with_zeros, v_all_ones, v_zeros, ""};
            } else {
                spec = {GeneratorKind::all_ones, v_all_ones, 0, ""};
            }
            const BitNum input = make_input(spec);

            const std::uint64_t bound = v_opt_max->count()
                                            ? v_max_steps
                                            : default_max_steps(input.bit_length());
            const TraceStats stats = run_to_one(input, bound);

            if (v_format == "json")
                std::cout << stats_json(stats);
            else if (v_format == "csv")
                std::cout << stats_csv(stats);
            else
                std::cout << stats_plain(stats);

            if (!stats.reached_one) {
                std::cerr << "bound exceeded: no convergence within "
                          << std::to_string(bound)
                          << " steps (conjecture-violation candidate)\n";
                return exit_bound;
            }
            return exit_ok;
        }

        if (*batch) {
            const SizeRange range = parse_range(b_range);
            if (b_opt_zeros->count() && b_zeros == 0)
                throw std::invalid_argument("--zeros must be at least 1");
            if (b_opt_max->count() && b_max_steps == 0)
                throw std::invalid_argument("--max-steps must be at least 1");

            std::vector<GeneratorSpec> specs;
            for (std::uint64_t n = range.low; n <= range.high; n += range.step) {
                GeneratorSpec spec;
                spec.kind = b_opt_zeros->count() ? GeneratorKind::all_ones_with_zeros
                                                 : GeneratorKind::all_ones;
                spec.size_bits = n;
                spec.zeros = b_opt_zeros->count() ? b_zeros : 0;
                specs.push_back(std::move(spec));
            }

            const std::uint64_t bound =
                b_opt_max->count() ? b_max_steps : default_max_steps(range.high);
            const std::vector<ExperimentRecord> records =
                run_batch(specs, bound, b_jobs);
            write_csv_file(b_out, records);

            double max_ratio = 0;
            for (const ExperimentRecord& r : records)
                max_ratio = std::max(max_ratio,
                                     static_cast<double>(r.expanded_size) /
                                         static_cast<double>(r.integer_size));
            if (b_format == "json") {
                const nlohmann::ordered_json j{
                    {"records", records.size()},
                    {"max_expansion_ratio", max_ratio},
                    {"out", b_out},
                };
                std::cout << j.dump(2) << "\n";
            } else {
                char ratio[64];
                std::snprintf(ratio, sizeof ratio, "%.6f", max_ratio);
                std::cout << "records              " << records.size() << "\n"
                          << "max_expansion_ratio  " << ratio << "\n"
                          << "out                  " << b_out << "\n";
            }
            return exit_ok;
        }

        if (*regress) {
            if (!known_column(r_x))
                throw std::invalid_argument("unknown --x column \"" + r_x +
                                            "\"; available: " + column_list());
            if (!known_column(r_y))
                throw std::invalid_argument("unknown --y column \"" + r_y +
                                            "\"; available: " + column_list());

            const std::vector<ExperimentRecord> records = read_csv_file(r_in);
            std::vector<DataPoint> points;
            points.reserve(records.size());
            for (const ExperimentRecord& r : records)
                points.push_back({static_cast<double>(field_value(r, r_x)),
                                  static_cast<double>(field_value(r, r_y))});

            const RegressionFit fit = fit_ols(points);
            if (r_format == "json")
                std::cout << to_json(fit) << "\n";
            else
                std::cout << to_text(fit);
            return exit_ok;
        }
    } catch (const BoundExceededError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_bound;
    } catch (const std::logic_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_io;
    }

    std::cerr << app.help();
    return exit_usage;
}
