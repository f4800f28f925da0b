#include "langford_sets.hpp"

#include <langford/models.hpp>

#include <algorithm>

namespace langford::testing {

namespace {
    auto fill(int k, int n, Sequence & cells, std::vector<char> & used, SequenceSet & out) -> void
    {
        auto free = std::find(cells.begin(), cells.end(), 0);
        if (free == cells.end()) {
            out.insert(cells);
            return;
        }
        auto start = static_cast<int>(free - cells.begin());
        for (int m = 1; m <= n; ++m) {
            if (used[static_cast<std::size_t>(m)])
                continue;
            int last = start + (k - 1) * (m + 1);
            if (last >= static_cast<int>(cells.size()))
                continue;
            bool fits = true;
            for (int p = start; p <= last; p += m + 1)
                fits = fits && cells[static_cast<std::size_t>(p)] == 0;
            if (! fits)
                continue;
            for (int p = start; p <= last; p += m + 1)
                cells[static_cast<std::size_t>(p)] = m;
            used[static_cast<std::size_t>(m)] = 1;
            fill(k, n, cells, used, out);
            used[static_cast<std::size_t>(m)] = 0;
            for (int p = start; p <= last; p += m + 1)
                cells[static_cast<std::size_t>(p)] = 0;
        }
    }

    auto ones_rule(const Sequence & s) -> bool
    {
        auto first = std::find(s.begin(), s.end(), 1) - s.begin() + 1;
        auto last = s.rend() - std::find(s.rbegin(), s.rend(), 1);
        return first + last <= static_cast<long>(s.size());
    }
}

auto naive_arrangements(int k, int n) -> SequenceSet
{
    Sequence cells(static_cast<std::size_t>(k * n), 0);
    std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
    SequenceSet out;
    fill(k, n, cells, used, out);
    return out;
}

auto naive_arrangements(int k, int n, Symmetry sym) -> SequenceSet
{
    auto all = naive_arrangements(k, n);
    SequenceSet out;
    for (const auto & s : all)
        if (sym == Symmetry::None || (sym == Symmetry::D && s.front() < s.back()) || (sym == Symmetry::P && ones_rule(s)))
            out.insert(s);
    return out;
}

auto reversed(const Sequence & s) -> Sequence
{
    return {s.rbegin(), s.rend()};
}

auto enumerate(const Instance & instance, const VariantConfig & variant, const SearchLimits & limits) -> Enumeration
{
    auto model = build_model(instance, variant);
    Enumeration e;
    e.stats = search(model, variant.heuristic, limits,
        [&](const Solution & s) { e.sequences.push_back(model.sequence_of(s.values)); });
    return e;
}

auto variants_with(Symmetry sym, HeuristicKind heuristic) -> std::vector<VariantConfig>
{
    std::vector<VariantConfig> out;
    auto base = [&](ModelKind m) {
        VariantConfig v;
        v.model = m;
        v.sym = sym;
        v.heuristic = heuristic;
        out.push_back(v);
    };
    if (sym != Symmetry::P)
        base(ModelKind::Direct);
    if (sym != Symmetry::D)
        base(ModelKind::Positional);
    for (auto branch : {Viewpoint::D, Viewpoint::P})
        for (auto cons : {ConsSet::Both, ConsSet::D, ConsSet::P}) {
            VariantConfig v;
            v.model = ModelKind::Channelled;
            v.branch = branch;
            v.sym = sym;
            v.cons = cons;
            v.heuristic = heuristic;
            out.push_back(v);
        }
    return out;
}

} // namespace langford::testing
