#include <langford/store.hpp>

#include <algorithm>
#include <utility>

namespace langford {

Store::Store(std::vector<DomainSet> domains) :
    _domains(std::move(domains)),
    _is_changed(_domains.size(), 0)
{
}

auto Store::all_assigned() const -> bool
{
    return std::all_of(_domains.begin(), _domains.end(), [](const DomainSet & d) { return d.assigned(); });
}

auto Store::erase_and_record(VarId v, int value) -> void
{
    if (! _domains[v.index].erase(value))
        return;
    _trail.push_back({v, value});
    ++_removals;
    if (! _is_changed[v.index]) {
        _is_changed[v.index] = 1;
        _changed.push_back(v);
    }
}

auto Store::remove(VarId v, int value) -> bool
{
    erase_and_record(v, value);
    return ! _domains[v.index].empty();
}

auto Store::assign(VarId v, int value) -> bool
{
    auto & d = _domains[v.index];
    if (! d.contains(value)) {
        while (! d.empty())
            erase_and_record(v, d.min());
        return false;
    }
    while (d.min() != value)
        erase_and_record(v, d.min());
    while (d.max() != value)
        erase_and_record(v, d.max());
    return true;
}

auto Store::remove_below(VarId v, int bound) -> bool
{
    auto & d = _domains[v.index];
    while (! d.empty() && d.min() < bound)
        erase_and_record(v, d.min());
    return ! d.empty();
}

auto Store::remove_above(VarId v, int bound) -> bool
{
    auto & d = _domains[v.index];
    while (! d.empty() && d.max() > bound)
        erase_and_record(v, d.max());
    return ! d.empty();
}

auto Store::undo_to_mark() -> void
{
    auto target = _marks.back();
    _marks.pop_back();
    while (_trail.size() > target) {
        auto [var, value] = _trail.back();
        _trail.pop_back();
        _domains[var.index].insert(value);
    }
    clear_changed();
}

auto Store::take_changed() -> std::vector<VarId>
{
    std::vector<VarId> result;
    result.swap(_changed);
    for (auto v : result)
        _is_changed[v.index] = 0;
    return result;
}

auto Store::take_changed(std::vector<VarId> & into) -> void
{
    into.clear();
    into.swap(_changed);
    for (auto v : into)
        _is_changed[v.index] = 0;
}

auto Store::clear_changed() -> void
{
    for (auto v : _changed)
        _is_changed[v.index] = 0;
    _changed.clear();
}

} // namespace langford
