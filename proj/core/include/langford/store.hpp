#ifndef LANGFORD_STORE_HPP
#define LANGFORD_STORE_HPP

#include <langford/domain.hpp>
#include <langford/ids.hpp>

#include <cstdint>
#include <vector>

namespace langford {

/// Trail-based domain store. Every removal is recorded as (variable, value);
/// undo_to_mark() re-inserts values until the trail is back at the most recent
/// mark, which restores each domain bit-exactly.
///
/// Mutators return false when they leave the domain empty. The empty domain is
/// kept on the trail like any other state, so the caller only has to unwind.
class Store {
public:
    explicit Store(std::vector<DomainSet> domains);

    auto num_vars() const -> std::size_t { return _domains.size(); }
    auto domain(VarId v) const -> const DomainSet & { return _domains[v.index]; }
    auto domains() const -> const std::vector<DomainSet> & { return _domains; }

    auto is_assigned(VarId v) const -> bool { return _domains[v.index].assigned(); }
    auto all_assigned() const -> bool;
    /// Precondition: is_assigned(v).
    auto value(VarId v) const -> int { return _domains[v.index].min(); }

    [[nodiscard]] auto remove(VarId v, int value) -> bool;
    [[nodiscard]] auto assign(VarId v, int value) -> bool;
    [[nodiscard]] auto remove_below(VarId v, int bound) -> bool;
    [[nodiscard]] auto remove_above(VarId v, int bound) -> bool;

    template <typename Pred>
    [[nodiscard]] auto remove_if(VarId v, Pred && pred) -> bool
    {
        const auto & d = _domains[v.index];
        if (d.empty())
            return false;
        for (int value = d.min(), hi = d.max(); value <= hi; ++value)
            if (d.contains(value) && pred(value))
                erase_and_record(v, value);
        return ! d.empty();
    }

    auto mark() -> void { _marks.push_back(_trail.size()); }
    /// Pops the most recent mark and restores the domains to their state at it.
    auto undo_to_mark() -> void;
    auto depth() const -> std::size_t { return _marks.size(); }

    /// Total number of removals ever performed; never decreases on undo.
    auto removals() const -> std::uint64_t { return _removals; }

    /// Variables whose domain changed since the last call, each listed once.
    auto take_changed() -> std::vector<VarId>;
    /// As take_changed(), reusing the storage of `into`.
    auto take_changed(std::vector<VarId> & into) -> void;
    auto clear_changed() -> void;

private:
    auto erase_and_record(VarId v, int value) -> void;

    struct TrailEntry
    {
        VarId var;
        int value;
    };

    std::vector<DomainSet> _domains;
    std::vector<TrailEntry> _trail;
    std::vector<std::size_t> _marks;
    std::vector<VarId> _changed;
    std::vector<char> _is_changed;
    std::uint64_t _removals = 0;
};

} // namespace langford

#endif
