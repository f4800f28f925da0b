#include <langford/propagators.hpp>

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace langford {

auto to_string(PropagatorKind k) -> std::string
{
    switch (k) {
    case PropagatorKind::EqOffset: return "eq_offset";
    case PropagatorKind::LessThan: return "less_than";
    case PropagatorKind::SumLeq: return "sum_leq";
    case PropagatorKind::AllDifferent: return "all_different";
    case PropagatorKind::ElementOffsetConst: return "element_offset_const";
    case PropagatorKind::Occurrence: return "occurrence";
    case PropagatorKind::InverseChannel: return "inverse_channel";
    }
    return "unknown";
}

Propagator::Propagator(std::vector<VarId> scope) :
    _scope(std::move(scope))
{
    if (_scope.empty())
        throw std::invalid_argument("propagator scope must be non-empty");
}

namespace {
    auto value_of(std::span<const int> assignment, VarId v) -> int
    {
        return assignment[v.index];
    }

    auto any_empty(const Store & store, std::initializer_list<VarId> vars) -> bool
    {
        return std::any_of(vars.begin(), vars.end(), [&](VarId v) { return store.domain(v).empty(); });
    }
}

// eq_offset

EqOffset::EqOffset(VarId x, VarId y, int c) :
    Propagator({x, y}),
    _x(x),
    _y(y),
    _c(c)
{
}

auto EqOffset::propagate(Store & store) const -> bool
{
    if (! store.remove_if(_x, [&](int a) { return ! store.domain(_y).contains(a - _c); }))
        return false;
    return store.remove_if(_y, [&](int b) { return ! store.domain(_x).contains(b + _c); });
}

auto EqOffset::check(std::span<const int> a) const -> bool
{
    return value_of(a, _x) == value_of(a, _y) + _c;
}

// less_than

LessThan::LessThan(VarId x, VarId y) :
    Propagator({x, y}),
    _x(x),
    _y(y)
{
}

auto LessThan::propagate(Store & store) const -> bool
{
    if (any_empty(store, {_x, _y}))
        return false;
    if (! store.remove_above(_x, store.domain(_y).max() - 1))
        return false;
    return store.remove_below(_y, store.domain(_x).min() + 1);
}

auto LessThan::check(std::span<const int> a) const -> bool
{
    return value_of(a, _x) < value_of(a, _y);
}

// sum_leq

SumLeq::SumLeq(VarId x, VarId y, int c) :
    Propagator({x, y}),
    _x(x),
    _y(y),
    _c(c)
{
}

auto SumLeq::propagate(Store & store) const -> bool
{
    if (any_empty(store, {_x, _y}))
        return false;
    if (! store.remove_above(_x, _c - store.domain(_y).min()))
        return false;
    return store.remove_above(_y, _c - store.domain(_x).min());
}

auto SumLeq::check(std::span<const int> a) const -> bool
{
    return value_of(a, _x) + value_of(a, _y) <= _c;
}

// all_different

AllDifferent::AllDifferent(std::vector<VarId> vars) :
    Propagator(std::move(vars))
{
    if (scope().size() < 2)
        throw std::invalid_argument("all_different needs at least two variables");
}

auto AllDifferent::propagate(Store & store) const -> bool
{
    const auto & vars = scope();
    std::vector<char> done(vars.size(), 0);

    bool progress = true;
    while (progress) {
        progress = false;
        for (std::size_t i = 0; i < vars.size(); ++i) {
            const auto & d = store.domain(vars[i]);
            if (d.empty())
                return false;
            if (done[i] || ! d.assigned())
                continue;
            done[i] = 1;
            progress = true;
            int v = d.min();
            for (std::size_t j = 0; j < vars.size(); ++j)
                if (j != i && ! store.remove(vars[j], v))
                    return false;
        }
    }

    int lo = store.domain(vars.front()).min(), hi = store.domain(vars.front()).max();
    for (auto v : vars) {
        lo = std::min(lo, store.domain(v).min());
        hi = std::max(hi, store.domain(v).max());
    }
    std::vector<char> seen(static_cast<std::size_t>(hi - lo) + 1, 0);
    std::size_t distinct = 0;
    for (auto v : vars)
        store.domain(v).for_each([&](int value) {
            auto & s = seen[static_cast<std::size_t>(value - lo)];
            if (! s) {
                s = 1;
                ++distinct;
            }
        });
    return distinct >= vars.size();
}

auto AllDifferent::check(std::span<const int> a) const -> bool
{
    std::vector<int> values;
    for (auto v : scope())
        values.push_back(value_of(a, v));
    std::sort(values.begin(), values.end());
    return std::adjacent_find(values.begin(), values.end()) == values.end();
}

// element_offset_const

namespace {
    auto with_index(std::vector<VarId> array, VarId index) -> std::vector<VarId>
    {
        array.push_back(index);
        return array;
    }
}

ElementOffsetConst::ElementOffsetConst(std::vector<VarId> array, VarId index, int offset, int c) :
    Propagator(with_index(array, index)),
    _array(std::move(array)),
    _index(index),
    _offset(offset),
    _c(c)
{
}

auto ElementOffsetConst::cell_for(int p) const -> const VarId *
{
    auto pos = static_cast<long long>(p) + _offset;
    if (pos < 1 || pos > static_cast<long long>(_array.size()))
        return nullptr;
    return &_array[static_cast<std::size_t>(pos - 1)];
}

auto ElementOffsetConst::propagate(Store & store) const -> bool
{
    bool ok = store.remove_if(_index, [&](int p) {
        auto cell = cell_for(p);
        return cell == nullptr || ! store.domain(*cell).contains(_c);
    });
    if (! ok)
        return false;
    if (store.is_assigned(_index))
        return store.assign(*cell_for(store.value(_index)), _c);
    return true;
}

auto ElementOffsetConst::check(std::span<const int> a) const -> bool
{
    auto cell = cell_for(value_of(a, _index));
    return cell && value_of(a, *cell) == _c;
}

// occurrence

Occurrence::Occurrence(std::vector<VarId> vars, int value, int count) :
    Propagator(std::move(vars)),
    _value(value),
    _count(count)
{
    if (count < 0)
        throw std::invalid_argument("occurrence count must be non-negative");
}

auto Occurrence::propagate(Store & store) const -> bool
{
    int assigned = 0, possible = 0;
    for (auto v : scope()) {
        const auto & d = store.domain(v);
        if (d.empty())
            return false;
        if (d.contains(_value)) {
            ++possible;
            if (d.assigned())
                ++assigned;
        }
    }
    if (assigned > _count || possible < _count)
        return false;

    if (assigned == _count && possible > assigned) {
        for (auto v : scope())
            if (! store.is_assigned(v) && ! store.remove(v, _value))
                return false;
    }
    else if (possible == _count && assigned < possible) {
        for (auto v : scope())
            if (store.domain(v).contains(_value) && ! store.assign(v, _value))
                return false;
    }
    return true;
}

auto Occurrence::check(std::span<const int> a) const -> bool
{
    auto hits = std::count_if(scope().begin(), scope().end(), [&](VarId v) { return value_of(a, v) == _value; });
    return hits == _count;
}

// inverse_channel

namespace {
    auto channel_scope(const std::vector<std::vector<VarId>> & pos, const std::vector<VarId> & seq) -> std::vector<VarId>
    {
        std::vector<VarId> result;
        for (const auto & row : pos)
            result.insert(result.end(), row.begin(), row.end());
        result.insert(result.end(), seq.begin(), seq.end());
        return result;
    }
}

InverseChannel::InverseChannel(std::vector<std::vector<VarId>> pos, std::vector<VarId> seq) :
    Propagator(channel_scope(pos, seq)),
    _pos(std::move(pos)),
    _seq(std::move(seq))
{
}

auto InverseChannel::one_pass(Store & store) const -> bool
{
    const int length = static_cast<int>(_seq.size());
    const int numbers = static_cast<int>(_pos.size());

    for (int i = 1; i <= length; ++i) {
        auto cell = _seq[static_cast<std::size_t>(i - 1)];
        bool ok = store.remove_if(cell, [&](int m) {
            if (m < 1 || m > numbers)
                return true;
            const auto & row = _pos[static_cast<std::size_t>(m - 1)];
            return std::none_of(row.begin(), row.end(), [&](VarId p) { return store.domain(p).contains(i); });
        });
        if (! ok)
            return false;

        if (store.is_assigned(cell)) {
            const auto & row = _pos[static_cast<std::size_t>(store.value(cell) - 1)];
            const VarId * only = nullptr;
            int supports = 0;
            for (const auto & p : row)
                if (store.domain(p).contains(i)) {
                    ++supports;
                    only = &p;
                }
            if (supports == 1 && ! store.assign(*only, i))
                return false;
        }
    }

    for (int m = 1; m <= numbers; ++m)
        for (auto p : _pos[static_cast<std::size_t>(m - 1)]) {
            bool ok = store.remove_if(p, [&](int i) {
                return i < 1 || i > length || ! store.domain(_seq[static_cast<std::size_t>(i - 1)]).contains(m);
            });
            if (! ok)
                return false;
            if (store.is_assigned(p) && ! store.assign(_seq[static_cast<std::size_t>(store.value(p) - 1)], m))
                return false;
        }

    return true;
}

auto InverseChannel::propagate(Store & store) const -> bool
{
    for (auto v : scope())
        if (store.domain(v).empty())
            return false;

    auto before = store.removals();
    do {
        before = store.removals();
        if (! one_pass(store))
            return false;
    } while (store.removals() != before);
    return true;
}

auto InverseChannel::check(std::span<const int> a) const -> bool
{
    const int length = static_cast<int>(_seq.size());
    const int numbers = static_cast<int>(_pos.size());

    for (int m = 1; m <= numbers; ++m)
        for (auto p : _pos[static_cast<std::size_t>(m - 1)]) {
            int i = value_of(a, p);
            if (i < 1 || i > length || value_of(a, _seq[static_cast<std::size_t>(i - 1)]) != m)
                return false;
        }

    for (int i = 1; i <= length; ++i) {
        int m = value_of(a, _seq[static_cast<std::size_t>(i - 1)]);
        if (m < 1 || m > numbers)
            return false;
        const auto & row = _pos[static_cast<std::size_t>(m - 1)];
        if (std::none_of(row.begin(), row.end(), [&](VarId p) { return value_of(a, p) == i; }))
            return false;
    }
    return true;
}

} // namespace langford
