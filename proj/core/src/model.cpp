#include <langford/model.hpp>

#include <algorithm>

namespace langford {

auto Model::add_variable(std::string name, int lower, int upper, VarRole role) -> VarId
{
    return add_variable(std::move(name), DomainSet{lower, upper}, role);
}

auto Model::add_variable(std::string name, DomainSet initial, VarRole role) -> VarId
{
    VarId id{_variables.size()};
    _variables.push_back({std::move(name), std::move(initial), role});
    _watchers.emplace_back();
    if (! _explicit_order) {
        _branch_order.push_back(id);
        _rank.push_back(id.index);
    }
    else
        _rank.push_back(_variables.size() + _branch_order.size());
    return id;
}

auto Model::post(std::unique_ptr<Propagator> p) -> PropagatorId
{
    PropagatorId id{_propagators.size()};
    for (auto v : p->scope())
        if (v.index < _watchers.size()) {
            auto & w = _watchers[v.index];
            if (w.empty() || w.back() != id)
                w.push_back(id);
        }
    _propagators.push_back(std::move(p));
    return id;
}

auto Model::find_variable(std::string_view name) const -> std::optional<VarId>
{
    for (std::size_t i = 0; i < _variables.size(); ++i)
        if (_variables[i].name == name)
            return VarId{i};
    return std::nullopt;
}

auto Model::count(PropagatorKind kind) const -> std::size_t
{
    return static_cast<std::size_t>(std::count_if(_propagators.begin(), _propagators.end(),
        [&](const auto & p) { return p->kind() == kind; }));
}

auto Model::branch_order() const -> const std::vector<VarId> &
{
    return _branch_order;
}

auto Model::set_branch_order(std::vector<VarId> order) -> void
{
    _explicit_order = true;
    _branch_order = std::move(order);
    _rank.assign(_variables.size(), _variables.size() + _branch_order.size());
    for (std::size_t i = 0; i < _branch_order.size(); ++i)
        if (_branch_order[i].index < _rank.size())
            _rank[_branch_order[i].index] = std::min(_rank[_branch_order[i].index], i);
}

auto Model::branch_rank(VarId v) const -> std::size_t
{
    return _rank[v.index];
}

auto Model::reset_weights() -> void
{
    for (auto & p : _propagators)
        p->reset_weight();
}

auto Model::root_store() const -> Store
{
    std::vector<DomainSet> domains;
    domains.reserve(_variables.size());
    for (const auto & v : _variables)
        domains.push_back(v.initial);
    return Store{std::move(domains)};
}

auto Model::validate() const -> void
{
    for (std::size_t p = 0; p < _propagators.size(); ++p)
        for (auto v : _propagators[p]->scope())
            if (v.index >= _variables.size())
                throw MalformedModel("propagator " + std::to_string(p) + " (" + to_string(_propagators[p]->kind())
                    + ") references undeclared variable " + std::to_string(v.index));

    if (_branch_order.size() != _variables.size())
        throw MalformedModel("branching order must list every variable exactly once");
    std::vector<char> seen(_variables.size(), 0);
    for (auto v : _branch_order) {
        if (v.index >= _variables.size() || seen[v.index])
            throw MalformedModel("branching order must list every variable exactly once");
        seen[v.index] = 1;
    }
}

auto Model::sequence_of(std::span<const int> assignment) const -> std::vector<int>
{
    std::vector<int> result;
    if (! seq_vars.empty()) {
        for (auto v : seq_vars)
            result.push_back(assignment[v.index]);
        return result;
    }
    if (! instance)
        return result;
    result.assign(static_cast<std::size_t>(instance->seq_length()), 0);
    for (std::size_t m = 0; m < pos_vars.size(); ++m)
        for (auto v : pos_vars[m]) {
            int p = assignment[v.index];
            if (p >= 1 && p <= instance->seq_length())
                result[static_cast<std::size_t>(p - 1)] = static_cast<int>(m) + 1;
        }
    return result;
}

auto Model::positions_of(std::span<const int> assignment) const -> std::vector<int>
{
    std::vector<int> result;
    if (! pos_vars.empty()) {
        for (const auto & row : pos_vars)
            for (auto v : row)
                result.push_back(assignment[v.index]);
        return result;
    }
    if (! instance)
        return result;
    for (int m = 1; m <= instance->n; ++m)
        for (std::size_t i = 0; i < seq_vars.size(); ++i)
            if (assignment[seq_vars[i].index] == m)
                result.push_back(static_cast<int>(i) + 1);
    return result;
}

} // namespace langford
