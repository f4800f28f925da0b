#include <langford/experiment.hpp>
#include <langford/models.hpp>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdio>
#include <istream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

namespace langford {

CsvError::CsvError(std::size_t line, const std::string & what) :
    std::runtime_error("line " + std::to_string(line) + ": " + what),
    _line(line)
{
}

auto run_variant(const Instance & instance, const VariantConfig & variant, const SearchLimits & limits,
    const SolutionCallback & on_solution) -> RunRecord
{
    auto model = build_model(instance, variant);
    auto stats = search(model, variant.heuristic, limits, on_solution);
    return RunRecord{instance, variant, stats.solutions, stats.nodes, stats.failures, stats.elapsed_ms, stats.timed_out};
}

auto csv_header() -> std::string
{
    return "k,n,model,branch,sym,cons,heuristic,solutions,nodes,failures,time_ms,timed_out";
}

auto to_csv_row(const RunRecord & r) -> std::string
{
    char time[64];
    std::snprintf(time, sizeof(time), "%.3f", r.time_ms);
    std::ostringstream s;
    s << r.instance.k << ',' << r.instance.n << ',' << to_string(r.variant.model) << ','
      << (r.variant.branch ? to_string(*r.variant.branch) : "") << ',' << to_string(r.variant.sym) << ','
      << (r.variant.cons ? to_string(*r.variant.cons) : "") << ',' << to_string(r.variant.heuristic) << ','
      << r.solutions << ',' << r.nodes << ',' << r.failures << ',' << time << ','
      << (r.timed_out ? "true" : "false");
    return s.str();
}

auto write_csv(std::ostream & out, const std::vector<RunRecord> & records) -> void
{
    out << csv_header() << '\n';
    for (const auto & r : records)
        out << to_csv_row(r) << '\n';
}

namespace {
    auto split(const std::string & line) -> std::vector<std::string>
    {
        std::vector<std::string> fields;
        std::string current;
        for (char c : line) {
            if (c == ',') {
                fields.push_back(std::move(current));
                current.clear();
            }
            else if (c != '\r')
                current.push_back(c);
        }
        fields.push_back(std::move(current));
        return fields;
    }

    template <typename T>
    auto parse_number(const std::string & text, std::size_t line, const char * field) -> T
    {
        T value{};
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec != std::errc{} || ptr != text.data() + text.size())
            throw CsvError(line, std::string("bad ") + field + " '" + text + "'");
        return value;
    }

    auto parse_double(const std::string & text, std::size_t line) -> double
    {
        std::istringstream s(text);
        double value = 0;
        if (! (s >> value) || ! s.eof())
            throw CsvError(line, "bad time_ms '" + text + "'");
        return value;
    }
}

auto read_csv(std::istream & in) -> std::vector<RunRecord>
{
    std::vector<RunRecord> records;
    std::string line;
    std::size_t line_no = 0;

    if (! std::getline(in, line))
        throw CsvError(1, "empty file");
    ++line_no;
    if (! line.empty() && line.back() == '\r')
        line.pop_back();
    if (line != csv_header())
        throw CsvError(line_no, "expected header '" + csv_header() + "'");

    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line == "\r")
            continue;
        auto f = split(line);
        if (f.size() != 12)
            throw CsvError(line_no, "expected 12 fields, found " + std::to_string(f.size()));
        try {
            RunRecord r;
            r.instance = Instance::make(parse_number<int>(f[0], line_no, "k"), parse_number<int>(f[1], line_no, "n"));
            r.variant.model = parse_model_kind(f[2]);
            if (! f[3].empty())
                r.variant.branch = parse_viewpoint(f[3]);
            r.variant.sym = parse_symmetry(f[4]);
            if (! f[5].empty())
                r.variant.cons = parse_cons_set(f[5]);
            r.variant.heuristic = parse_heuristic(f[6]);
            r.variant.validate();
            r.solutions = parse_number<std::uint64_t>(f[7], line_no, "solutions");
            r.nodes = parse_number<std::uint64_t>(f[8], line_no, "nodes");
            r.failures = parse_number<std::uint64_t>(f[9], line_no, "failures");
            r.time_ms = parse_double(f[10], line_no);
            if (f[11] == "true")
                r.timed_out = true;
            else if (f[11] == "false")
                r.timed_out = false;
            else
                throw CsvError(line_no, "bad timed_out '" + f[11] + "'");
            records.push_back(r);
        }
        catch (const InvalidVariant & e) {
            throw CsvError(line_no, e.what());
        }
    }
    return records;
}

auto default_variants() -> std::vector<VariantConfig>
{
    return {
        VariantConfig::parse("positional sym:P domoverwdeg"),
        VariantConfig::parse("channelled branch:D sym:D cons:Both static"),
        VariantConfig::parse("channelled branch:D sym:D cons:P static"),
        VariantConfig::parse("channelled branch:D sym:P cons:Both static"),
        VariantConfig::parse("channelled branch:D sym:P cons:P static"),
        VariantConfig::parse("channelled branch:D sym:D cons:Both sdf"),
    };
}

auto sort_records(std::vector<RunRecord> & records, const std::vector<VariantConfig> & variant_order) -> void
{
    auto rank = [&](const VariantConfig & v) {
        auto it = std::find(variant_order.begin(), variant_order.end(), v);
        return static_cast<std::size_t>(it - variant_order.begin());
    };
    std::stable_sort(records.begin(), records.end(), [&](const RunRecord & a, const RunRecord & b) {
        if (a.instance != b.instance)
            return a.instance < b.instance;
        auto ra = rank(a.variant), rb = rank(b.variant);
        if (ra != rb)
            return ra < rb;
        return a.variant.label() < b.variant.label();
    });
}

auto run_sweep(const SweepOptions & options, const std::vector<RunRecord> & existing,
    const std::function<void(const RunRecord &)> & on_record) -> std::vector<RunRecord>
{
    for (const auto & v : options.variants) {
        v.validate();
        if (! v.implied)
            throw InvalidVariant("the results CSV cannot record disabled implied constraints");
    }

    struct Task
    {
        Instance instance;
        VariantConfig variant;
    };
    std::vector<Task> tasks;
    for (int k = options.k_first; k <= options.k_last; ++k)
        for (int n = options.n_first; n <= options.n_last; ++n) {
            auto inst = Instance::make(k, n);
            for (const auto & v : options.variants) {
                bool done = std::any_of(existing.begin(), existing.end(),
                    [&](const RunRecord & r) { return r.instance == inst && r.variant == v; });
                bool queued = std::any_of(tasks.begin(), tasks.end(),
                    [&](const Task & t) { return t.instance == inst && t.variant == v; });
                if (! done && ! queued)
                    tasks.push_back({inst, v});
            }
        }

    std::vector<RunRecord> fresh(tasks.size());
    std::atomic<std::size_t> next{0};
    std::mutex report_mutex;
    auto worker = [&]() {
        for (auto i = next++; i < tasks.size(); i = next++) {
            fresh[i] = run_variant(tasks[i].instance, tasks[i].variant, options.limits);
            if (on_record) {
                std::lock_guard lock(report_mutex);
                on_record(fresh[i]);
            }
        }
    };

    auto jobs = std::max(1U, std::min<unsigned>(options.jobs, static_cast<unsigned>(std::max<std::size_t>(1, tasks.size()))));
    if (jobs == 1)
        worker();
    else {
        std::vector<std::jthread> pool;
        for (unsigned j = 0; j < jobs; ++j)
            pool.emplace_back(worker);
    }

    std::vector<RunRecord> all = existing;
    all.insert(all.end(), fresh.begin(), fresh.end());
    sort_records(all, options.variants);
    return all;
}

} // namespace langford
