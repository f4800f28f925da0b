#ifndef LANGFORD_HEURISTICS_HPP
#define LANGFORD_HEURISTICS_HPP

#include <langford/ids.hpp>
#include <langford/model.hpp>
#include <langford/store.hpp>
#include <langford/variant.hpp>

#include <cstdint>
#include <optional>

namespace langford {

/// Sum of the weights of the propagators on v that still have at least two
/// unassigned variables in scope.
auto weighted_degree(const Store & store, const Model & model, VarId v) -> std::uint64_t;

/// Picks the next branching variable, or nullopt once everything is assigned.
///
///   Static       first unassigned variable in branching order
///   SDF          smallest domain
///   Wdeg         largest weighted degree
///   DomOverWdeg  smallest |D| / wdeg, with wdeg floored at 1
///
/// Ties go to the variable that comes first in the branching order.
auto select_variable(const Store & store, const Model & model, HeuristicKind kind) -> std::optional<VarId>;

} // namespace langford

#endif
