#ifndef LANGFORD_EXPERIMENT_HPP
#define LANGFORD_EXPERIMENT_HPP

#include <langford/engine.hpp>
#include <langford/variant.hpp>

#include <chrono>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace langford {

/// One (instance, variant) run as it appears in the results CSV.
struct RunRecord
{
    Instance instance;
    VariantConfig variant;
    std::uint64_t solutions = 0;
    std::uint64_t nodes = 0;
    std::uint64_t failures = 0;
    double time_ms = 0.0;
    bool timed_out = false;

    /// Solved in under five search nodes.
    auto trivial() const -> bool { return nodes < 5; }
};

class CsvError : public std::runtime_error {
public:
    CsvError(std::size_t line, const std::string & what);
    auto line() const -> std::size_t { return _line; }

private:
    std::size_t _line;
};

auto run_variant(const Instance & instance, const VariantConfig & variant, const SearchLimits & limits,
    const SolutionCallback & on_solution = {}) -> RunRecord;

auto csv_header() -> std::string;
auto to_csv_row(const RunRecord & r) -> std::string;
auto write_csv(std::ostream & out, const std::vector<RunRecord> & records) -> void;
/// Throws CsvError naming the offending line.
auto read_csv(std::istream & in) -> std::vector<RunRecord>;

/// The six variants a sweep runs when none are given.
auto default_variants() -> std::vector<VariantConfig>;

/// Sorts by (k, n, position of the variant in `variant_order`); variants not
/// in the list go last, ordered by label.
auto sort_records(std::vector<RunRecord> & records, const std::vector<VariantConfig> & variant_order) -> void;

struct SweepOptions
{
    int k_first = 2;
    int k_last = 4;
    int n_first = 2;
    int n_last = 10;
    std::vector<VariantConfig> variants = default_variants();
    SearchLimits limits{std::nullopt, std::chrono::seconds(60)};
    unsigned jobs = 1;
};

/// Runs every grid cell not already present in `existing` and returns the
/// union, sorted. Runs are independent and spread over `jobs` threads.
auto run_sweep(const SweepOptions & options, const std::vector<RunRecord> & existing = {},
    const std::function<void(const RunRecord &)> & on_record = {}) -> std::vector<RunRecord>;

} // namespace langford

#endif
