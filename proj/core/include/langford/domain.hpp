#ifndef LANGFORD_DOMAIN_HPP
#define LANGFORD_DOMAIN_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

namespace langford {

/// A finite set of integers drawn from a fixed range [lower, upper], stored as
/// a bit vector. Removing an absent value is a no-op. The cached min/max always
/// agree with the membership bits.
class DomainSet {
public:
    DomainSet() = default;
    /// Full range [lower, upper]. An inverted range yields an empty set.
    DomainSet(int lower, int upper);
    static auto from_values(const std::vector<int> & values) -> DomainSet;

    auto lower() const -> int { return _lower; }
    auto upper() const -> int { return _upper; }

    auto size() const -> std::size_t { return _size; }
    auto empty() const -> bool { return _size == 0; }
    auto assigned() const -> bool { return _size == 1; }
    auto contains(int v) const -> bool
    {
        if (_size == 0 || v < _min || v > _max)
            return false;
        return bit(v);
    }

    /// Precondition: non-empty.
    auto min() const -> int { return _min; }
    auto max() const -> int { return _max; }

    /// Returns true if the value was present.
    auto erase(int v) -> bool;
    /// Re-inserts a value inside [lower, upper]; used when unwinding the trail.
    auto insert(int v) -> void;

    auto values() const -> std::vector<int>;

    template <typename F>
    auto for_each(F && f) const -> void
    {
        if (_size == 0)
            return;
        for (int v = _min; v <= _max; ++v)
            if (contains(v))
                f(v);
    }

    /// Set equality; the underlying ranges may differ.
    friend auto operator==(const DomainSet & a, const DomainSet & b) -> bool;

private:
    auto bit(int v) const -> bool
    {
        auto off = static_cast<std::size_t>(v - _lower);
        return (_words[off / 64] >> (off % 64)) & 1U;
    }
    auto rescan_min() -> void;
    auto rescan_max() -> void;

    int _lower = 1;
    int _upper = 0;
    std::vector<std::uint64_t> _words;
    std::size_t _size = 0;
    int _min = 1;
    int _max = 0;
};

auto operator<<(std::ostream &, const DomainSet &) -> std::ostream &;

} // namespace langford

#endif
