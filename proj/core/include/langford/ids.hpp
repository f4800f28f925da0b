#ifndef LANGFORD_IDS_HPP
#define LANGFORD_IDS_HPP

#include <compare>
#include <cstddef>

namespace langford {

/// Dense variable index, assigned in model-construction order.
struct VarId
{
    std::size_t index;

    friend auto operator<=>(const VarId &, const VarId &) = default;
};

struct PropagatorId
{
    std::size_t index;

    friend auto operator<=>(const PropagatorId &, const PropagatorId &) = default;
};

} // namespace langford

#endif
