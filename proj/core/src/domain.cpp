#include <langford/domain.hpp>

#include <algorithm>
#include <ostream>

namespace langford {

DomainSet::DomainSet(int lower, int upper) :
    _lower(lower),
    _upper(upper)
{
    if (lower > upper)
        return;
    auto width = static_cast<std::size_t>(upper - lower) + 1;
    _words.assign((width + 63) / 64, ~std::uint64_t{0});
    if (auto tail = width % 64; tail != 0)
        _words.back() = (std::uint64_t{1} << tail) - 1;
    _size = width;
    _min = lower;
    _max = upper;
}

auto DomainSet::from_values(const std::vector<int> & values) -> DomainSet
{
    if (values.empty())
        return DomainSet{};
    auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    DomainSet result{*lo, *hi};
    for (int v = *lo; v <= *hi; ++v)
        if (std::find(values.begin(), values.end(), v) == values.end())
            result.erase(v);
    return result;
}

auto DomainSet::rescan_min() -> void
{
    while (_min <= _max && ! bit(_min))
        ++_min;
}

auto DomainSet::rescan_max() -> void
{
    while (_max >= _min && ! bit(_max))
        --_max;
}

auto DomainSet::erase(int v) -> bool
{
    if (! contains(v))
        return false;
    auto off = static_cast<std::size_t>(v - _lower);
    _words[off / 64] &= ~(std::uint64_t{1} << (off % 64));
    --_size;
    if (_size == 0) {
        _min = _lower;
        _max = _lower - 1;
        return true;
    }
    if (v == _min)
        rescan_min();
    if (v == _max)
        rescan_max();
    return true;
}

auto DomainSet::insert(int v) -> void
{
    if (v < _lower || v > _upper)
        return;
    auto off = static_cast<std::size_t>(v - _lower);
    auto mask = std::uint64_t{1} << (off % 64);
    if (_words[off / 64] & mask)
        return;
    _words[off / 64] |= mask;
    if (_size == 0) {
        _min = _max = v;
    }
    else {
        _min = std::min(_min, v);
        _max = std::max(_max, v);
    }
    ++_size;
}

auto DomainSet::values() const -> std::vector<int>
{
    std::vector<int> result;
    result.reserve(_size);
    for_each([&](int v) { result.push_back(v); });
    return result;
}

auto operator<<(std::ostream & s, const DomainSet & d) -> std::ostream &
{
    s << "{";
    bool first = true;
    d.for_each([&](int v) {
        s << (first ? "" : ",") << v;
        first = false;
    });
    return s << "}";
}

auto operator==(const DomainSet & a, const DomainSet & b) -> bool
{
    if (a._size != b._size)
        return false;
    if (a._size == 0)
        return true;
    if (a._min != b._min || a._max != b._max)
        return false;
    for (int v = a._min; v <= a._max; ++v)
        if (a.bit(v) != b.bit(v))
            return false;
    return true;
}

} // namespace langford
