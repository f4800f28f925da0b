#ifndef LANGFORD_TESTS_LANGFORD_SETS_HPP
#define LANGFORD_TESTS_LANGFORD_SETS_HPP

#include <langford/engine.hpp>
#include <langford/variant.hpp>

#include <set>
#include <vector>

namespace langford::testing {

using Sequence = std::vector<int>;
using SequenceSet = std::set<Sequence>;

/// Every L(k, n) arrangement, found by filling the leftmost empty cell with
/// the first copy of some unused number. Shares no code with the library.
auto naive_arrangements(int k, int n) -> SequenceSet;

/// naive_arrangements() reduced by a symmetry rule: None keeps all, D keeps
/// first < last, P keeps those whose 1s satisfy first + last position <= kn.
auto naive_arrangements(int k, int n, Symmetry sym) -> SequenceSet;

auto reversed(const Sequence & s) -> Sequence;

struct Enumeration
{
    std::vector<Sequence> sequences;
    SearchStats stats;

    auto as_set() const -> SequenceSet { return {sequences.begin(), sequences.end()}; }
};

/// Runs the engine on a freshly built model and projects every solution onto
/// its sequence.
auto enumerate(const Instance & instance, const VariantConfig & variant, const SearchLimits & limits = {}) -> Enumeration;

/// Every valid variant with the given sym choice and heuristic: the base
/// model that supports it plus channelled x branch x cons.
auto variants_with(Symmetry sym, HeuristicKind heuristic = HeuristicKind::Static) -> std::vector<VariantConfig>;

} // namespace langford::testing

#endif
