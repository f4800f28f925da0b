#include <langford/experiment.hpp>
#include <langford/models.hpp>
#include <langford/oracle.hpp>
#include <langford/report.hpp>
#include <langford/satgen.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace langford;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_timeout = 2;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Range
{
    int first;
    int last;
};

// "7" or "2..9"
auto parse_range(const std::string & text, const char * what) -> Range
{
    auto dots = text.find("..");
    try {
        std::size_t used = 0;
        if (dots == std::string::npos) {
            int v = std::stoi(text, &used);
            if (used != text.size())
                throw std::invalid_argument(text);
            return {v, v};
        }
        auto a = text.substr(0, dots), b = text.substr(dots + 2);
        int first = std::stoi(a, &used);
        if (used != a.size())
            throw std::invalid_argument(text);
        int last = std::stoi(b, &used);
        if (used != b.size())
            throw std::invalid_argument(text);
        if (first > last)
            throw UsageError(std::string(what) + " range '" + text + "' is empty");
        return {first, last};
    }
    catch (const std::logic_error &) {
        throw UsageError(std::string("bad ") + what + " '" + text + "', expected N or A..B");
    }
}

auto seconds_to_ms(double s) -> std::chrono::milliseconds
{
    if (s < 0)
        throw UsageError("timeout must not be negative");
    return std::chrono::milliseconds(static_cast<std::int64_t>(s * 1000.0 + 0.5));
}

struct ModelFlags
{
    int k = 0;
    int n = 0;
    std::string model;
    std::string branch;
    std::string sym = "none";
    std::string cons;
    std::string heuristic = "static";

    auto add_to(CLI::App & app) -> void
    {
        app.add_option("--k", k, "copies of each number")->required();
        app.add_option("--n", n, "largest number")->required();
        app.add_option("--model", model, "direct, positional or channelled")->required();
        app.add_option("--branch", branch, "d or p (channelled only, default d)");
        app.add_option("--sym", sym, "d, p or none")->capture_default_str();
        app.add_option("--cons", cons, "both, d or p (channelled only, default both)");
        app.add_option("--heuristic", heuristic, "static, sdf, wdeg or domoverwdeg")->capture_default_str();
    }

    auto instance() const -> Instance
    {
        try {
            return Instance::make(k, n);
        }
        catch (const InvalidVariant & e) {
            throw UsageError(e.what());
        }
    }

    auto variant() const -> VariantConfig
    {
        try {
            VariantConfig v;
            v.model = parse_model_kind(model);
            v.sym = parse_symmetry(sym);
            v.heuristic = parse_heuristic(heuristic);
            if (! branch.empty())
                v.branch = parse_viewpoint(branch);
            if (! cons.empty())
                v.cons = parse_cons_set(cons);
            if (v.model == ModelKind::Channelled) {
                if (! v.branch)
                    v.branch = Viewpoint::D;
                if (! v.cons)
                    v.cons = ConsSet::Both;
            }
            v.validate();
            return v;
        }
        catch (const InvalidVariant & e) {
            throw UsageError(e.what());
        }
    }
};

auto print_sequence(std::ostream & out, const std::vector<int> & seq) -> void
{
    for (std::size_t i = 0; i < seq.size(); ++i)
        out << (i == 0 ? "" : " ") << seq[i];
    out << '\n';
}

auto append_row(const std::filesystem::path & path, const RunRecord & record) -> void
{
    bool fresh = ! std::filesystem::exists(path) || std::filesystem::file_size(path) == 0;
    if (! fresh) {
        std::ifstream in(path);
        std::string header;
        std::getline(in, header);
        if (! header.empty() && header.back() == '\r')
            header.pop_back();
        if (header != csv_header())
            throw std::runtime_error(path.string() + ": not a results CSV (unexpected header)");
    }
    std::ofstream out(path, std::ios::app);
    if (! out)
        throw std::runtime_error("cannot write " + path.string());
    if (fresh)
        out << csv_header() << '\n';
    out << to_csv_row(record) << '\n';
    if (! out)
        throw std::runtime_error("cannot write " + path.string());
}

struct SolveCommand
{
    ModelFlags flags;
    std::optional<double> timeout;
    std::optional<std::uint64_t> node_limit;
    bool print_solutions = false;
    std::string out;

    auto add_to(CLI::App & app) -> void
    {
        flags.add_to(app);
        app.add_option("--timeout", timeout, "time limit in seconds");
        app.add_option("--node-limit", node_limit, "stop after this many search nodes");
        app.add_flag("--print-solutions", print_solutions, "print each solution as a sequence");
        app.add_option("--out", out, "append the result row to this CSV file");
    }

    auto run() const -> int
    {
        auto inst = flags.instance();
        auto variant = flags.variant();
        SearchLimits limits;
        limits.node_limit = node_limit;
        if (timeout)
            limits.time_limit = seconds_to_ms(*timeout);

        auto model = build_model(inst, variant);
        auto on_solution = [&](const Solution & s) {
            if (print_solutions)
                print_sequence(std::cout, model.sequence_of(s.values));
        };
        auto stats = search(model, variant.heuristic, limits, on_solution);
        RunRecord record{inst, variant, stats.solutions, stats.nodes, stats.failures, stats.elapsed_ms, stats.timed_out};

        std::cout << csv_header() << '\n' << to_csv_row(record) << '\n';
        if (! out.empty())
            append_row(out, record);
        return record.timed_out ? exit_timeout : exit_ok;
    }
};

struct SweepCommand
{
    std::string out = "results.csv";
    unsigned jobs = 1;
    bool skip_existing = false;
    bool full = false;
    bool long_timeout = false;
    std::optional<double> timeout;
    std::string k_range;
    std::string n_range;
    std::vector<std::string> variants;
    bool quiet = false;

    auto add_to(CLI::App & app) -> void
    {
        app.add_option("--out", out, "results CSV")->capture_default_str();
        app.add_option("--jobs", jobs, "runs in parallel")->capture_default_str()->check(CLI::PositiveNumber);
        app.add_flag("--skip-existing", skip_existing, "keep rows already in --out and run only the missing cells");
        auto * f = app.add_flag("--full", full, "k 2..6, n 2..17");
        app.add_flag("--long-timeout", long_timeout, "four hours per run");
        app.add_option("--timeout", timeout, "time limit per run in seconds (default 60)")->excludes("--long-timeout");
        app.add_option("--k-range", k_range, "k values, N or A..B (default 2..4)")->excludes(f);
        app.add_option("--n-range", n_range, "n values, N or A..B (default 2..10)")->excludes(f);
        app.add_option("--variant", variants, "variant label, e.g. \"channelled branch:D sym:P cons:Both static\"; repeatable");
        app.add_flag("--quiet", quiet, "no progress lines");
    }

    auto run() const -> int
    {
        SweepOptions options;
        options.jobs = jobs;
        if (full) {
            options.k_first = 2, options.k_last = 6;
            options.n_first = 2, options.n_last = 17;
        }
        if (! k_range.empty()) {
            auto r = parse_range(k_range, "k");
            options.k_first = r.first, options.k_last = r.last;
        }
        if (! n_range.empty()) {
            auto r = parse_range(n_range, "n");
            options.n_first = r.first, options.n_last = r.last;
        }
        if (long_timeout)
            options.limits.time_limit = std::chrono::hours(4);
        else if (timeout)
            options.limits.time_limit = seconds_to_ms(*timeout);
        if (! variants.empty()) {
            options.variants.clear();
            for (const auto & v : variants)
                try {
                    options.variants.push_back(VariantConfig::parse(v));
                }
                catch (const InvalidVariant & e) {
                    throw UsageError(e.what());
                }
        }
        try {
            for (int k = options.k_first; k <= options.k_last; ++k)
                for (int n = options.n_first; n <= options.n_last; ++n)
                    Instance::make(k, n);
            for (const auto & v : options.variants) {
                v.validate();
                if (! v.implied)
                    throw InvalidVariant("the results CSV cannot record disabled implied constraints");
            }
        }
        catch (const InvalidVariant & e) {
            throw UsageError(e.what());
        }

        std::vector<RunRecord> existing;
        if (skip_existing && std::filesystem::exists(out)) {
            std::ifstream in(out);
            existing = read_csv(in);
        }
        {
            std::ofstream probe(out, std::ios::app);
            if (! probe)
                throw std::runtime_error("cannot write " + out);
        }

        auto progress = [&](const RunRecord & r) {
            if (! quiet)
                std::cerr << r.instance.label() << "  " << r.variant.label() << "  nodes=" << r.nodes
                          << (r.timed_out ? " (timeout)" : "") << '\n';
        };
        auto records = run_sweep(options, existing, progress);

        auto tmp = out + ".tmp";
        {
            std::ofstream file(tmp);
            if (! file)
                throw std::runtime_error("cannot write " + tmp);
            write_csv(file, records);
            if (! file)
                throw std::runtime_error("cannot write " + tmp);
        }
        std::filesystem::rename(tmp, out);
        if (! quiet)
            std::cerr << records.size() << " rows in " << out << '\n';
        return exit_ok;
    }
};

struct ReportCommand
{
    std::string csv;
    std::string out;

    auto add_to(CLI::App & app) -> void
    {
        app.add_option("csv", csv, "results CSV")->required();
        app.add_option("--out", out, "write the markdown here instead of stdout");
    }

    auto run() const -> int
    {
        std::ifstream in(csv);
        if (! in)
            throw std::runtime_error("cannot read " + csv);
        auto table = build_node_table(read_csv(in));
        auto text = render_markdown(table);
        if (out.empty()) {
            std::cout << text;
            return exit_ok;
        }
        std::ofstream file(out);
        file << text;
        if (! file)
            throw std::runtime_error("cannot write " + out);
        return exit_ok;
    }
};

struct OracleCommand
{
    std::string k;
    std::string n;
    std::string sym = "none";
    bool list = false;

    auto add_to(CLI::App & app) -> void
    {
        app.add_option("--k", k, "N or A..B")->required();
        app.add_option("--n", n, "N or A..B")->required();
        app.add_option("--sym", sym, "none or first-less-last")->capture_default_str();
        app.add_flag("--list", list, "print every arrangement (single instance only)");
    }

    auto run() const -> int
    {
        auto kr = parse_range(k, "k");
        auto nr = parse_range(n, "n");
        oracle::Symmetry symmetry;
        try {
            symmetry = oracle::parse_symmetry(sym);
        }
        catch (const std::invalid_argument & e) {
            throw UsageError(e.what());
        }

        if (kr.first == kr.last && nr.first == nr.last) {
            if (list) {
                auto all = oracle::enumerate_bruteforce(kr.first, nr.first, symmetry);
                for (const auto & a : all)
                    print_sequence(std::cout, a.cells);
                std::cout << all.size() << '\n';
            }
            else
                std::cout << oracle::count(kr.first, nr.first, symmetry) << '\n';
            return exit_ok;
        }
        if (list)
            throw UsageError("--list needs a single instance");
        oracle::write_count_csv(std::cout, oracle::count_table(kr.first, kr.last, nr.first, nr.last, symmetry));
        return exit_ok;
    }
};

struct ExportCommand
{
    ModelFlags flags;
    std::string out;

    auto add_to(CLI::App & app) -> void
    {
        flags.add_to(app);
        app.add_option("--out", out, "destination .cnf file")->required();
    }

    auto run() const -> int
    {
        auto model = build_model(flags.instance(), flags.variant());
        auto cnf = sat::encode(model);
        sat::write_dimacs(cnf, std::filesystem::path(out));
        std::cout << out << ": " << cnf.num_vars << " variables, " << cnf.clauses.size() << " clauses\n";
        return exit_ok;
    }
};

} // namespace

auto main(int argc, char ** argv) -> int
{
    CLI::App app{"Langford L(k,n) experiments: constraint models, brute-force counts and SAT export"};
    app.require_subcommand(1);

    SolveCommand solve;
    SweepCommand sweep;
    ReportCommand report;
    OracleCommand oracle_cmd;
    ExportCommand export_cmd;

    auto * solve_app = app.add_subcommand("solve", "enumerate every solution of one instance with one variant");
    auto * sweep_app = app.add_subcommand("sweep", "run a grid of instances and variants into a CSV");
    auto * report_app = app.add_subcommand("report", "render a node-count table from a results CSV");
    auto * oracle_app = app.add_subcommand("oracle", "brute-force solution counts");
    auto * export_app = app.add_subcommand("export-dimacs", "write the CNF encoding of one model");

    solve.add_to(*solve_app);
    sweep.add_to(*sweep_app);
    report.add_to(*report_app);
    oracle_cmd.add_to(*oracle_app);
    export_cmd.add_to(*export_app);
    // key=value lines under a [solve], [sweep], ... section; flags on the
    // command line take precedence.
    app.set_config("--config", "", "read subcommand options from an ini-style key=value file");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp & e) {
        return app.exit(e);
    }
    catch (const CLI::CallForAllHelp & e) {
        return app.exit(e);
    }
    catch (const CLI::ParseError & e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (*solve_app)
            return solve.run();
        if (*sweep_app)
            return sweep.run();
        if (*report_app)
            return report.run();
        if (*oracle_app)
            return oracle_cmd.run();
        return export_cmd.run();
    }
    catch (const UsageError & e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return exit_usage;
    }
    catch (const std::exception & e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
}
