#ifndef LANGFORD_PROPAGATORS_HPP
#define LANGFORD_PROPAGATORS_HPP

#include <langford/ids.hpp>
#include <langford/store.hpp>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace langford {

enum class PropagatorKind
{
    EqOffset,
    LessThan,
    SumLeq,
    AllDifferent,
    ElementOffsetConst,
    Occurrence,
    InverseChannel
};

auto to_string(PropagatorKind) -> std::string;

/// A constraint with a filtering rule and a ground semantic check.
///
/// propagate() is idempotent: a second call straight after a successful first
/// call removes nothing. It returns false on a domain wipeout (or any other
/// detected inconsistency); the store is then left for the caller to unwind.
///
/// check() takes a total assignment indexed by VarId.
///
/// The weight is the failure counter used by the weighted-degree heuristics.
/// It starts at 1 and is bumped by the engine each time this propagator fails.
class Propagator {
public:
    virtual ~Propagator() = default;

    virtual auto kind() const -> PropagatorKind = 0;
    [[nodiscard]] virtual auto propagate(Store & store) const -> bool = 0;
    virtual auto check(std::span<const int> assignment) const -> bool = 0;

    auto scope() const -> const std::vector<VarId> & { return _scope; }

    auto weight() const -> std::uint64_t { return _weight; }
    auto bump_weight() -> void { ++_weight; }
    auto set_weight(std::uint64_t w) -> void { _weight = w; }
    auto reset_weight() -> void { _weight = 1; }

protected:
    explicit Propagator(std::vector<VarId> scope);

private:
    std::vector<VarId> _scope;
    std::uint64_t _weight = 1;
};

/// x = y + c, domain consistent.
class EqOffset final : public Propagator {
public:
    EqOffset(VarId x, VarId y, int c);

    auto kind() const -> PropagatorKind override { return PropagatorKind::EqOffset; }
    [[nodiscard]] auto propagate(Store &) const -> bool override;
    auto check(std::span<const int>) const -> bool override;

    auto x() const -> VarId { return _x; }
    auto y() const -> VarId { return _y; }
    auto offset() const -> int { return _c; }

private:
    VarId _x, _y;
    int _c;
};

/// x < y, bounds consistent.
class LessThan final : public Propagator {
public:
    LessThan(VarId x, VarId y);

    auto kind() const -> PropagatorKind override { return PropagatorKind::LessThan; }
    [[nodiscard]] auto propagate(Store &) const -> bool override;
    auto check(std::span<const int>) const -> bool override;

    auto x() const -> VarId { return _x; }
    auto y() const -> VarId { return _y; }

private:
    VarId _x, _y;
};

/// x + y <= c, bounds consistent.
class SumLeq final : public Propagator {
public:
    SumLeq(VarId x, VarId y, int c);

    auto kind() const -> PropagatorKind override { return PropagatorKind::SumLeq; }
    [[nodiscard]] auto propagate(Store &) const -> bool override;
    auto check(std::span<const int>) const -> bool override;

    auto x() const -> VarId { return _x; }
    auto y() const -> VarId { return _y; }
    auto bound() const -> int { return _c; }

private:
    VarId _x, _y;
    int _c;
};

/// Pairwise distinct values. Forward checking on assigned variables plus a
/// pigeonhole test on the union of the domains; not GAC.
class AllDifferent final : public Propagator {
public:
    explicit AllDifferent(std::vector<VarId> vars);

    auto kind() const -> PropagatorKind override { return PropagatorKind::AllDifferent; }
    [[nodiscard]] auto propagate(Store &) const -> bool override;
    auto check(std::span<const int>) const -> bool override;
};

/// array[index + offset] = c with 1-based indexing into array. Domain
/// consistent on index; assigns the addressed cell once index is fixed.
class ElementOffsetConst final : public Propagator {
public:
    ElementOffsetConst(std::vector<VarId> array, VarId index, int offset, int c);

    auto kind() const -> PropagatorKind override { return PropagatorKind::ElementOffsetConst; }
    [[nodiscard]] auto propagate(Store &) const -> bool override;
    auto check(std::span<const int>) const -> bool override;

    auto array() const -> const std::vector<VarId> & { return _array; }
    auto index() const -> VarId { return _index; }
    auto offset() const -> int { return _offset; }
    auto value() const -> int { return _c; }

    /// The array cell addressed by index value p, if p + offset is in range.
    auto cell_for(int p) const -> const VarId *;

private:
    std::vector<VarId> _array;
    VarId _index;
    int _offset;
    int _c;
};

/// Exactly `count` of vars take value v.
class Occurrence final : public Propagator {
public:
    Occurrence(std::vector<VarId> vars, int value, int count);

    auto kind() const -> PropagatorKind override { return PropagatorKind::Occurrence; }
    [[nodiscard]] auto propagate(Store &) const -> bool override;
    auto check(std::span<const int>) const -> bool override;

    auto value() const -> int { return _value; }
    auto count() const -> int { return _count; }

private:
    int _value;
    int _count;
};

/// Two-way channel between a positional matrix pos[m][j] (number m, repetition
/// j, both 1-based) and a sequence seq[i] (1-based). The relation is
///
///   for all m, j:  seq[pos[m][j]] = m
///   for all i:     pos[seq[i]][j] = i for some j
///
/// Filtering rules:
///   (a) no pos[m][*] can take i       => remove m from seq[i]
///   (b) m not in seq[i]               => remove i from every pos[m][*]
///   (c) pos[m][j] = i                 => seq[i] = m
///   (d) seq[i] = m, one pos[m][j] left that can take i => pos[m][j] = i
class InverseChannel final : public Propagator {
public:
    InverseChannel(std::vector<std::vector<VarId>> pos, std::vector<VarId> seq);

    auto kind() const -> PropagatorKind override { return PropagatorKind::InverseChannel; }
    [[nodiscard]] auto propagate(Store &) const -> bool override;
    auto check(std::span<const int>) const -> bool override;

    auto pos() const -> const std::vector<std::vector<VarId>> & { return _pos; }
    auto seq() const -> const std::vector<VarId> & { return _seq; }

private:
    auto one_pass(Store &) const -> bool;

    std::vector<std::vector<VarId>> _pos;
    std::vector<VarId> _seq;
};

} // namespace langford

#endif
