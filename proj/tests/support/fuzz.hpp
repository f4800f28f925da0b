#ifndef LANGFORD_TESTS_FUZZ_HPP
#define LANGFORD_TESTS_FUZZ_HPP

#include <langford/domain.hpp>
#include <langford/propagators.hpp>

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

namespace langford::testing {

/// A propagator over variables 0..domains.size()-1 with starting domains.
struct FuzzCase
{
    std::vector<DomainSet> domains;
    std::unique_ptr<Propagator> propagator;
};

auto random_case(PropagatorKind kind, std::mt19937 & rng) -> FuzzCase;

/// Values of each variable that take part in at least one satisfying
/// assignment, found by enumerating the whole product of the domains.
auto supported_values(const Propagator & p, const std::vector<DomainSet> & domains) -> std::vector<DomainSet>;

struct FuzzReport
{
    PropagatorKind kind = PropagatorKind::EqOffset;
    int cases = 0;
    int soundness = 0;
    int agreement = 0;
    int monotonicity = 0;
    int idempotence = 0;
    std::string first_violation;

    auto violations() const -> int { return soundness + agreement + monotonicity + idempotence; }
};

/// Per case: soundness against supported_values(), checker/filter agreement on
/// a random total assignment, monotonicity against a random sub-store and
/// idempotence of a second propagate() call.
auto fuzz(PropagatorKind kind, int cases, std::uint32_t seed) -> FuzzReport;

auto all_kinds() -> std::vector<PropagatorKind>;

} // namespace langford::testing

#endif
