#ifndef LANGFORD_ENGINE_HPP
#define LANGFORD_ENGINE_HPP

#include <langford/ids.hpp>
#include <langford/model.hpp>
#include <langford/store.hpp>
#include <langford/variant.hpp>

#include <chrono>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <variant>
#include <vector>

namespace langford {

/// Counters for one run. A node is one committed branch (left or right);
/// the root is not a node. A failure is one wipeout after a commit.
struct SearchStats
{
    std::uint64_t nodes = 0;
    std::uint64_t failures = 0;
    std::uint64_t solutions = 0;
    double elapsed_ms = 0.0;
    bool timed_out = false;
};

auto operator<<(std::ostream &, const SearchStats &) -> std::ostream &;

/// Value of every model variable, indexed by VarId.
struct Solution
{
    std::vector<int> values;

    friend auto operator==(const Solution &, const Solution &) -> bool = default;
};

struct SearchLimits
{
    /// Maximum number of branch commits. Zero means no search at all.
    std::optional<std::uint64_t> node_limit;
    std::optional<std::chrono::milliseconds> time_limit;
};

struct Fixpoint
{
};

struct Failure
{
    PropagatorId culprit;
};

using PropagationResult = std::variant<Fixpoint, Failure>;

inline auto is_failure(const PropagationResult & r) -> bool { return std::holds_alternative<Failure>(r); }

/// FIFO of propagators with set semantics.
class PropagationQueue {
public:
    explicit PropagationQueue(std::size_t num_propagators);

    auto push(PropagatorId p) -> void;
    auto push_all() -> void;
    auto push_watchers(const Model & model, VarId v, std::optional<PropagatorId> except = std::nullopt) -> void;
    auto pop() -> PropagatorId;
    auto empty() const -> bool { return _head == _items.size(); }
    auto clear() -> void;

private:
    std::vector<PropagatorId> _items;
    std::size_t _head = 0;
    std::vector<char> _queued;
};

/// Runs propagators until none can remove a value. Variables the store reports
/// as changed are scheduled first. On failure the culprit's weight goes up by
/// one, the queue is cleared and the store is left for the caller to unwind.
auto propagate_to_fixpoint(Store & store, Model & model, PropagationQueue & queue) -> PropagationResult;

/// Two-way branch on the minimum value: left assigns, right removes.
struct Branch
{
    VarId var;
    int value;
};

/// Precondition: var is unassigned.
auto make_branch(const Store & store, VarId var) -> Branch;
[[nodiscard]] auto commit_left(Store & store, const Branch & b) -> bool;
[[nodiscard]] auto commit_right(Store & store, const Branch & b) -> bool;

using SolutionCallback = std::function<void(const Solution &)>;

/// Depth-first enumeration of every solution. Weights are reset before the
/// run, so identical inputs give identical output. Throws MalformedModel.
auto search(Model & model, HeuristicKind heuristic, const SearchLimits & limits,
    const SolutionCallback & on_solution) -> SearchStats;

struct SolveResult
{
    std::vector<Solution> solutions;
    SearchStats stats;
};

auto solve_all(Model & model, HeuristicKind heuristic, const SearchLimits & limits = {}) -> SolveResult;

} // namespace langford

#endif
