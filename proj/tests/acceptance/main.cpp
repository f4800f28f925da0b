#include <langford/experiment.hpp>
#include <langford/models.hpp>
#include <langford/oracle.hpp>
#include <langford/satgen.hpp>

#include "fuzz.hpp"
#include "langford_sets.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace langford;
using namespace langford::testing;

namespace {

struct Outcome
{
    bool pass = true;
    std::string detail;

    auto fail(const std::string & why) -> void
    {
        if (pass)
            detail = why;
        pass = false;
    }
};

auto heuristics() -> std::vector<HeuristicKind>
{
    return {HeuristicKind::Static, HeuristicKind::SDF, HeuristicKind::Wdeg, HeuristicKind::DomOverWdeg};
}

auto name(const Instance & inst) -> std::string
{
    return "L(" + std::to_string(inst.k) + "," + std::to_string(inst.n) + ")";
}

// Variants that propagate only the Direct constraints need millions of nodes
// under static ordering once k = 3 and n >= 8; solution sets do not depend on
// the heuristic.
auto tractable(VariantConfig v, const Instance & inst) -> VariantConfig
{
    if (inst.k >= 3 && (v.model == ModelKind::Direct || v.cons == ConsSet::D))
        v.heuristic = HeuristicKind::SDF;
    return v;
}

auto ground_truth_counts() -> Outcome
{
    Outcome o;
    const std::vector<std::size_t> expected{1, 1, 0, 0, 26, 150};
    auto start = std::chrono::steady_clock::now();
    int runs = 0;
    for (int n = 3; n <= 8; ++n) {
        auto want = expected[static_cast<std::size_t>(n - 3)];
        auto inst = Instance::make(2, n);
        if (oracle::count(2, n, oracle::Symmetry::FirstLessLast) != want)
            o.fail("library oracle disagrees at " + name(inst));
        for (auto sym : {Symmetry::D, Symmetry::P}) {
            if (naive_arrangements(2, n, sym).size() != want)
                o.fail("naive oracle disagrees at " + name(inst) + " sym:" + to_string(sym));
            for (auto h : heuristics())
                for (const auto & v : variants_with(sym, h)) {
                    auto e = enumerate(inst, v);
                    ++runs;
                    if (e.sequences.size() != want)
                        o.fail(v.label() + " counts " + std::to_string(e.sequences.size()) + " at " + name(inst));
                }
        }
    }
    auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs >= 60.0)
        o.fail("took " + std::to_string(secs) + " s");
    if (o.pass)
        o.detail = std::to_string(runs) + " runs, counts 1 1 0 0 26 150, " + std::to_string(secs) + " s";
    return o;
}

auto cross_variant_agreement() -> Outcome
{
    Outcome o;
    auto start = std::chrono::steady_clock::now();
    int instances = 0;
    for (int k = 2; k <= 3; ++k)
        for (int n = 1; n <= 8; ++n) {
            auto inst = Instance::make(k, n);
            ++instances;
            for (auto sym : {Symmetry::None, Symmetry::D, Symmetry::P}) {
                auto want = naive_arrangements(k, n, sym);
                for (const auto & v : variants_with(sym)) {
                    auto e = enumerate(inst, tractable(v, inst));
                    if (e.stats.timed_out || e.as_set() != want || e.sequences.size() != want.size())
                        o.fail(tractable(v, inst).label() + " differs at " + name(inst));
                }
            }
        }
    auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs >= 300.0)
        o.fail("took " + std::to_string(secs) + " s");
    if (o.pass)
        o.detail = std::to_string(instances) + " instances x 3 sym groups identical, " + std::to_string(secs) + " s";
    return o;
}

auto reflection_partition() -> Outcome
{
    Outcome o;
    for (int n : {3, 4, 7}) {
        auto inst = Instance::make(2, n);
        std::vector<SequenceSet> all;
        for (const auto & v : variants_with(Symmetry::None))
            all.push_back(enumerate(inst, v).as_set());
        for (const auto & v : variants_with(Symmetry::D)) {
            auto kept = enumerate(inst, v).as_set();
            SequenceSet joined = kept;
            for (const auto & s : kept) {
                if (s != reversed(s) && kept.count(reversed(s)) != 0)
                    o.fail(v.label() + " keeps both reflections at " + name(inst));
                joined.insert(reversed(s));
            }
            for (const auto & a : all)
                if (joined != a)
                    o.fail(v.label() + " plus reversals differs from a sym:None variant at " + name(inst));
        }
    }
    if (o.pass)
        o.detail = "n = 3, 4, 7 over every sym:None x sym:D variant pair";
    return o;
}

auto implied_redundancy() -> Outcome
{
    Outcome o;
    int instances = 0, pruned = 0;
    for (int n = 1; n <= 7; ++n)
        for (auto sym : {Symmetry::None, Symmetry::D}) {
            auto inst = Instance::make(2, n);
            VariantConfig on;
            on.model = ModelKind::Direct;
            on.sym = sym;
            auto off = on;
            off.implied = false;
            auto a = enumerate(inst, on);
            auto b = enumerate(inst, off);
            ++instances;
            if (a.as_set() != b.as_set())
                o.fail("solution sets differ at " + name(inst) + " sym:" + to_string(sym));
            if (a.stats.nodes <= b.stats.nodes)
                ++pruned;
        }
    if (pruned * 5 < instances * 4)
        o.fail("nodes(on) <= nodes(off) on only " + std::to_string(pruned) + "/" + std::to_string(instances));
    if (o.pass)
        o.detail = "identical sets, nodes(on) <= nodes(off) on " + std::to_string(pruned) + "/" + std::to_string(instances);
    return o;
}

auto propagator_soundness() -> Outcome
{
    Outcome o;
    int cases = 0;
    for (auto kind : all_kinds()) {
        auto r = fuzz(kind, 1000, 20240611U + static_cast<std::uint32_t>(kind));
        cases += r.cases;
        if (r.cases != 1000)
            o.fail(to_string(kind) + " ran " + std::to_string(r.cases) + " cases");
        if (r.violations() != 0)
            o.fail(to_string(kind) + ": " + std::to_string(r.violations()) + " violations, first: " + r.first_violation);
    }
    if (o.pass)
        o.detail = std::to_string(cases) + " cases, 0 violations";
    return o;
}

auto branching_trend() -> Outcome
{
    Outcome o;
    std::uint64_t totals[2] = {0, 0};
    int i = 0;
    for (auto branch : {Viewpoint::D, Viewpoint::P}) {
        auto v = VariantConfig::parse("channelled sym:D cons:Both static");
        v.branch = branch;
        for (int n = 10; n <= 12; ++n) {
            auto r = run_variant(Instance::make(3, n), v, {});
            if (r.timed_out)
                o.fail(v.label() + " timed out at n = " + std::to_string(n));
            totals[i] += r.nodes;
        }
        ++i;
    }
    std::ostringstream s;
    s << "branch:D nodes = " << totals[0] << ", branch:P nodes = " << totals[1] << " (k = 3, n = 10..12)";
    if (! (totals[0] < totals[1]))
        o.fail(s.str());
    o.detail = s.str();
    return o;
}

auto sat_cross_check() -> Outcome
{
    Outcome o;
    auto start = std::chrono::steady_clock::now();
    const std::vector<std::pair<int, int>> sizes{{2, 3}, {2, 4}, {2, 7}, {3, 9}};
    const std::vector<const char *> labels{"positional sym:P", "positional", "channelled branch:D sym:P cons:Both",
        "channelled branch:D sym:D cons:Both"};
    int checks = 0;
    for (auto [k, n] : sizes)
        for (const auto * label : labels) {
            auto inst = Instance::make(k, n);
            auto v = VariantConfig::parse(label);
            auto engine = enumerate(inst, v);
            auto model = build_model(inst, v);
            auto cnf = sat::encode(model);
            auto all = sat::allsat_tiny(cnf);
            SequenceSet decoded;
            for (const auto & bits : all.models)
                decoded.insert(model.sequence_of(sat::decode(cnf, bits)));
            ++checks;
            if (all.truncated || all.models.size() != engine.sequences.size() || decoded != engine.as_set())
                o.fail(std::string(label) + " at " + name(inst) + ": SAT " + std::to_string(all.models.size()) + " vs engine "
                    + std::to_string(engine.sequences.size()));
        }
    auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs >= 300.0)
        o.fail("took " + std::to_string(secs) + " s");
    if (o.pass)
        o.detail = std::to_string(checks) + " encodings agree, " + std::to_string(secs) + " s";
    return o;
}

auto without_time(const std::vector<RunRecord> & records) -> std::string
{
    std::ostringstream out;
    write_csv(out, records);
    std::istringstream in(out.str());
    std::string line, kept;
    std::size_t drop = std::string::npos;
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::stringstream fields(line);
        for (std::string c; std::getline(fields, c, ',');)
            cells.push_back(c);
        if (! line.empty() && line.back() == ',')
            cells.emplace_back();
        if (drop == std::string::npos)
            for (std::size_t i = 0; i < cells.size(); ++i)
                if (cells[i] == "time_ms")
                    drop = i;
        for (std::size_t i = 0; i < cells.size(); ++i)
            if (i != drop)
                kept += cells[i] + (i + 1 == cells.size() ? "" : ",");
        kept += '\n';
    }
    return kept;
}

auto sweep_determinism() -> Outcome
{
    Outcome o;
    SweepOptions options;
    auto first = without_time(run_sweep(options));
    auto second = without_time(run_sweep(options));
    if (first.find("time_ms") != std::string::npos)
        o.fail("time_ms column not removed");
    if (first != second)
        o.fail("sweeps differ");
    if (o.pass)
        o.detail = std::to_string(std::count(first.begin(), first.end(), '\n') - 1) + " rows identical modulo time_ms";
    return o;
}

} // namespace

int main(int argc, char ** argv)
{
    struct Criterion
    {
        const char * title;
        Outcome (*run)();
    };
    const Criterion criteria[] = {
        {"solution counts for k=2, n=3..8", ground_truth_counts},
        {"cross-variant agreement for k in {2,3}, n <= 8", cross_variant_agreement},
        {"reflection partition", reflection_partition},
        {"implied occurrence constraints are redundant", implied_redundancy},
        {"propagator soundness", propagator_soundness},
        {"branching on seq beats branching on pos", branching_trend},
        {"AllSAT counts match the engine", sat_cross_check},
        {"sweep determinism", sweep_determinism},
    };

    // Criterion numbers on the command line select a subset.
    std::vector<int> selected;
    for (int i = 1; i < argc; ++i)
        selected.push_back(std::atoi(argv[i]));

    int failed = 0, index = 0;
    for (const auto & c : criteria) {
        ++index;
        if (! selected.empty() && std::find(selected.begin(), selected.end(), index) == selected.end())
            continue;
        Outcome o;
        try {
            o = c.run();
        }
        catch (const std::exception & e) {
            o.fail(std::string("exception: ") + e.what());
        }
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << index << ": " << c.title << " - " << o.detail
                  << std::endl;
        failed += o.pass ? 0 : 1;
    }
    return failed == 0 ? 0 : 1;
}
