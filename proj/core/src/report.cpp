#include <langford/report.hpp>

#include <algorithm>
#include <map>
#include <sstream>

namespace langford {

auto group_thousands(std::uint64_t v) -> std::string
{
    auto digits = std::to_string(v);
    std::string out;
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (i != 0 && (digits.size() - i) % 3 == 0)
            out.push_back(',');
        out.push_back(digits[i]);
    }
    return out;
}

auto build_node_table(const std::vector<RunRecord> & records) -> NodeTable
{
    NodeTable table;
    std::vector<VariantConfig> variants;
    for (const auto & r : records)
        if (std::find(variants.begin(), variants.end(), r.variant) == variants.end()) {
            variants.push_back(r.variant);
            table.columns.push_back(r.variant.label());
        }

    std::map<Instance, std::vector<const RunRecord *>> by_instance;
    for (const auto & r : records)
        by_instance[r.instance].push_back(&r);

    for (const auto & [instance, runs] : by_instance) {
        auto is_base = [](const RunRecord * r) { return r->variant.model != ModelKind::Channelled; };
        bool any_base = std::any_of(runs.begin(), runs.end(), is_base);
        bool trivial = std::any_of(runs.begin(), runs.end(), [&](const RunRecord * r) {
            return (! any_base || is_base(r)) && ! r->timed_out && r->trivial();
        });
        if (trivial) {
            ++table.trivial_instances;
            continue;
        }

        NodeTable::Row row{instance, std::vector<std::optional<std::uint64_t>>(variants.size())};
        for (const auto * r : runs)
            if (! r->timed_out) {
                auto col = std::find(variants.begin(), variants.end(), r->variant) - variants.begin();
                row.nodes[static_cast<std::size_t>(col)] = r->nodes;
            }
        table.rows.push_back(std::move(row));
    }

    table.sum.assign(variants.size(), 0);
    table.mean.assign(variants.size(), 0);
    for (std::size_t c = 0; c < variants.size(); ++c) {
        std::uint64_t cells = 0;
        for (const auto & row : table.rows)
            if (row.nodes[c]) {
                table.sum[c] += *row.nodes[c];
                ++cells;
            }
        if (cells != 0)
            table.mean[c] = (table.sum[c] + cells / 2) / cells;
    }
    return table;
}

namespace {
    auto render_row(std::ostringstream & out, const std::string & label, const std::vector<std::optional<std::uint64_t>> & cells)
    {
        std::optional<std::uint64_t> best;
        for (const auto & c : cells)
            if (c && (! best || *c < *best))
                best = c;
        out << "| " << label;
        for (const auto & c : cells) {
            out << " | ";
            if (! c)
                out << "t/o";
            else if (*c == *best)
                out << "**" << group_thousands(*c) << "**";
            else
                out << group_thousands(*c);
        }
        out << " |\n";
    }

    auto as_cells(const std::vector<std::uint64_t> & v) -> std::vector<std::optional<std::uint64_t>>
    {
        return {v.begin(), v.end()};
    }
}

auto render_markdown(const NodeTable & table) -> std::string
{
    std::ostringstream out;
    out << "# Search nodes\n\n"
        << "A node is one committed branch (assignment or refutation); the root is not counted.\n"
        << "Instances a base model solves in under 5 nodes are omitted (" << table.trivial_instances << " here).\n"
        << "Mean and Sum cover the rows shown; `t/o` marks a run that hit its limit.\n\n";

    out << "| Instance";
    for (const auto & c : table.columns)
        out << " | " << c;
    out << " |\n|---";
    for (std::size_t c = 0; c < table.columns.size(); ++c)
        out << "|---:";
    out << "|\n";

    for (const auto & row : table.rows)
        render_row(out, row.instance.label(), row.nodes);
    if (! table.rows.empty()) {
        render_row(out, "Mean", as_cells(table.mean));
        render_row(out, "Sum", as_cells(table.sum));
    }
    return out.str();
}

} // namespace langford
