#include <langford/engine.hpp>
#include <langford/heuristics.hpp>

#include <ostream>

namespace langford {

auto operator<<(std::ostream & s, const SearchStats & st) -> std::ostream &
{
    return s << "nodes=" << st.nodes << " failures=" << st.failures << " solutions=" << st.solutions
             << " elapsed_ms=" << st.elapsed_ms << " timed_out=" << (st.timed_out ? "true" : "false");
}

PropagationQueue::PropagationQueue(std::size_t num_propagators) :
    _queued(num_propagators, 0)
{
    _items.reserve(num_propagators);
}

auto PropagationQueue::push(PropagatorId p) -> void
{
    if (_queued[p.index])
        return;
    _queued[p.index] = 1;
    _items.push_back(p);
}

auto PropagationQueue::push_all() -> void
{
    for (std::size_t i = 0; i < _queued.size(); ++i)
        push(PropagatorId{i});
}

auto PropagationQueue::push_watchers(const Model & model, VarId v, std::optional<PropagatorId> except) -> void
{
    for (auto p : model.watchers(v))
        if (! except || p != *except)
            push(p);
}

auto PropagationQueue::pop() -> PropagatorId
{
    auto p = _items[_head++];
    _queued[p.index] = 0;
    if (_head == _items.size()) {
        _items.clear();
        _head = 0;
    }
    return p;
}

auto PropagationQueue::clear() -> void
{
    for (std::size_t i = _head; i < _items.size(); ++i)
        _queued[_items[i].index] = 0;
    _items.clear();
    _head = 0;
}

auto propagate_to_fixpoint(Store & store, Model & model, PropagationQueue & queue) -> PropagationResult
{
    thread_local std::vector<VarId> changed;
    store.take_changed(changed);
    for (auto v : changed)
        queue.push_watchers(model, v);

    while (! queue.empty()) {
        auto id = queue.pop();
        auto & p = model.propagator(id);
        if (! p.propagate(store)) {
            p.bump_weight();
            queue.clear();
            store.clear_changed();
            return Failure{id};
        }
        // Propagators are idempotent, so the one that just ran is not rescheduled.
        store.take_changed(changed);
        for (auto v : changed)
            queue.push_watchers(model, v, id);
    }
    return Fixpoint{};
}

auto make_branch(const Store & store, VarId var) -> Branch
{
    return Branch{var, store.domain(var).min()};
}

auto commit_left(Store & store, const Branch & b) -> bool
{
    return store.assign(b.var, b.value);
}

auto commit_right(Store & store, const Branch & b) -> bool
{
    return store.remove(b.var, b.value);
}

namespace {
    using Clock = std::chrono::steady_clock;

    class Search {
    public:
        Search(Model & model, HeuristicKind heuristic, const SearchLimits & limits, const SolutionCallback & on_solution) :
            _model(model),
            _heuristic(heuristic),
            _limits(limits),
            _on_solution(on_solution),
            _store(model.root_store()),
            _queue(model.num_propagators()),
            _start(Clock::now())
        {
        }

        auto run() -> SearchStats
        {
            if (_limits.node_limit && *_limits.node_limit == 0)
                _stats.timed_out = true;
            else if (root_consistent())
                descend();
            _stats.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - _start).count();
            return _stats;
        }

    private:
        auto root_consistent() -> bool
        {
            for (const auto & d : _store.domains())
                if (d.empty())
                    return false;
            _store.clear_changed();
            _queue.push_all();
            return ! is_failure(propagate_to_fixpoint(_store, _model, _queue));
        }

        auto limit_reached() -> bool
        {
            if (_limits.node_limit && _stats.nodes >= *_limits.node_limit)
                return true;
            if (_limits.time_limit && Clock::now() - _start >= *_limits.time_limit)
                return true;
            return false;
        }

        auto emit() -> void
        {
            Solution s;
            s.values.reserve(_store.num_vars());
            for (const auto & d : _store.domains())
                s.values.push_back(d.min());
            ++_stats.solutions;
            if (_on_solution)
                _on_solution(s);
        }

        auto descend() -> void
        {
            auto var = select_variable(_store, _model, _heuristic);
            if (! var) {
                emit();
                return;
            }

            auto branch = make_branch(_store, *var);
            for (bool left : {true, false}) {
                if (limit_reached()) {
                    _stats.timed_out = true;
                    return;
                }
                ++_stats.nodes;
                _store.mark();
                bool ok = left ? commit_left(_store, branch) : commit_right(_store, branch);
                if (ok)
                    ok = ! is_failure(propagate_to_fixpoint(_store, _model, _queue));
                if (ok)
                    descend();
                else
                    ++_stats.failures;
                _store.undo_to_mark();
                if (_stats.timed_out)
                    return;
            }
        }

        Model & _model;
        HeuristicKind _heuristic;
        const SearchLimits & _limits;
        const SolutionCallback & _on_solution;
        Store _store;
        PropagationQueue _queue;
        Clock::time_point _start;
        SearchStats _stats;
    };
}

auto search(Model & model, HeuristicKind heuristic, const SearchLimits & limits,
    const SolutionCallback & on_solution) -> SearchStats
{
    model.validate();
    model.reset_weights();
    return Search{model, heuristic, limits, on_solution}.run();
}

auto solve_all(Model & model, HeuristicKind heuristic, const SearchLimits & limits) -> SolveResult
{
    SolveResult result;
    result.stats = search(model, heuristic, limits,
        [&](const Solution & s) { result.solutions.push_back(s); });
    return result;
}

} // namespace langford
