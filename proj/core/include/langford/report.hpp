#ifndef LANGFORD_REPORT_HPP
#define LANGFORD_REPORT_HPP

#include <langford/experiment.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace langford {

/// Node-count table: instances as rows, variants as columns (in order of first
/// appearance). Trivial instances are dropped; Sum and Mean cover the rows that
/// remain. Timed-out cells are empty and do not contribute to the footer.
struct NodeTable
{
    struct Row
    {
        Instance instance;
        std::vector<std::optional<std::uint64_t>> nodes;
    };

    std::vector<std::string> columns;
    std::vector<Row> rows;
    std::vector<std::uint64_t> sum;
    std::vector<std::uint64_t> mean;
    std::size_t trivial_instances = 0;
};

/// An instance is trivial when a base model (direct or positional) finished it
/// in under five nodes; if the records hold no base-model run for it, any
/// finished run counts.
auto build_node_table(const std::vector<RunRecord> & records) -> NodeTable;

/// Markdown rendering with the row minimum (ties included) in bold.
auto render_markdown(const NodeTable & table) -> std::string;

/// "1234567" -> "1,234,567".
auto group_thousands(std::uint64_t v) -> std::string;

} // namespace langford

#endif
