#ifndef LANGFORD_MODELS_HPP
#define LANGFORD_MODELS_HPP

#include <langford/model.hpp>
#include <langford/variant.hpp>

namespace langford {

/// Sequence viewpoint: seq[1..kn] over 1..n plus one first-occurrence
/// variable per number. For each number m and repetition t in 0..k-1,
///
///     seq[firstOcc[m] + t * (m + 1)] = m
///
/// Symmetry breaking is seq[1] < seq[kn]; the implied constraints say every
/// number occurs exactly k times. Branching order: seq, then firstOcc.
auto build_direct(const Instance & instance, bool sym, bool implied = true) -> Model;

/// Positional viewpoint: pos[m][j] over 1..kn, all different, with
/// pos[m][j] = pos[m][j-1] + m + 1. Symmetry breaking is
/// pos[1][1] + pos[1][k] <= kn. Branching order: (m, j) lexicographic.
auto build_positional(const Instance & instance, bool sym) -> Model;

/// Both viewpoints linked by element and inverse channels plus ordering
/// pos[m][j-1] < pos[m][j]. The problem constraints of each side are kept
/// according to cfg.cons and exactly one symmetry break according to cfg.sym.
auto build_channelled(const Instance & instance, const VariantConfig & cfg) -> Model;

/// Dispatches on cfg.model after validating cfg.
auto build_model(const Instance & instance, const VariantConfig & cfg) -> Model;

} // namespace langford

#endif
