#include <langford/heuristics.hpp>

#include <vector>

namespace langford {

namespace {
    auto is_active(const Store & store, const Propagator & p) -> bool
    {
        int unassigned = 0;
        for (auto v : p.scope())
            if (! store.is_assigned(v) && ++unassigned >= 2)
                return true;
        return false;
    }

    auto active_flags(const Store & store, const Model & model) -> std::vector<char>
    {
        std::vector<char> active(model.num_propagators(), 0);
        for (std::size_t i = 0; i < model.num_propagators(); ++i)
            active[i] = is_active(store, model.propagator(PropagatorId{i}));
        return active;
    }

    auto score(const Model & model, const std::vector<char> & active, VarId v) -> std::uint64_t
    {
        std::uint64_t s = 0;
        for (auto p : model.watchers(v))
            if (active[p.index])
                s += model.propagator(p).weight();
        return s;
    }
}

auto weighted_degree(const Store & store, const Model & model, VarId v) -> std::uint64_t
{
    std::uint64_t s = 0;
    for (auto p : model.watchers(v))
        if (is_active(store, model.propagator(p)))
            s += model.propagator(p).weight();
    return s;
}

auto select_variable(const Store & store, const Model & model, HeuristicKind kind) -> std::optional<VarId>
{
    const auto & order = model.branch_order();

    if (kind == HeuristicKind::Static) {
        for (auto v : order)
            if (! store.is_assigned(v))
                return v;
        return std::nullopt;
    }

    std::vector<char> active;
    if (kind == HeuristicKind::Wdeg || kind == HeuristicKind::DomOverWdeg)
        active = active_flags(store, model);

    std::optional<VarId> best;
    std::uint64_t best_dom = 0, best_score = 0;

    for (auto v : order) {
        if (store.is_assigned(v))
            continue;
        std::uint64_t dom = store.domain(v).size();
        std::uint64_t sc = active.empty() ? 0 : score(model, active, v);

        bool better = false;
        if (! best)
            better = true;
        else
            switch (kind) {
            case HeuristicKind::SDF: better = dom < best_dom; break;
            case HeuristicKind::Wdeg: better = sc > best_score; break;
            case HeuristicKind::DomOverWdeg: {
                auto s = sc == 0 ? 1 : sc;
                auto bs = best_score == 0 ? 1 : best_score;
                better = dom * bs < best_dom * s;
                break;
            }
            case HeuristicKind::Static: break;
            }

        if (better) {
            best = v;
            best_dom = dom;
            best_score = sc;
        }
    }
    return best;
}

} // namespace langford
