#ifndef LANGFORD_SATGEN_HPP
#define LANGFORD_SATGEN_HPP

#include <langford/ids.hpp>
#include <langford/model.hpp>

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace langford::sat {

class DimacsError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class GuardViolation : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Largest formula allsat_tiny() accepts.
inline constexpr int max_allsat_vars = 4096;

/// Boolean variable `index` is true iff CSP variable `var` takes `value`.
struct LiteralEntry
{
    VarId var;
    int value;
    int index;
};

/// A CNF formula over DIMACS variables 1..num_vars. The value literals come
/// first (indices 1..literals.size(), in VarId then value order for encoded
/// models); anything above them is a cardinality auxiliary.
struct Cnf
{
    int num_vars = 0;
    std::vector<std::vector<int>> clauses;
    std::vector<LiteralEntry> literals;
    /// Names indexed by VarId.
    std::vector<std::string> var_names;

    /// DIMACS index of [var = value], or 0 if the value was never in the domain.
    auto literal(VarId var, int value) const -> int;
};

/// Direct (sparse) encoding of a model from its initial domains:
///   - at-least-one and pairwise at-most-one per CSP variable
///   - conflict clauses over disallowed value pairs for the binary constraints
///     (eq_offset, less_than, sum_leq) and pairwise disequality for all_different
///   - implications for element_offset_const and both directions of inverse_channel
///   - a sequential counter with exact-count semantics for occurrence
auto encode(const Model & model) -> Cnf;

/// DIMACS text: `c map <varname> <value> <index>` lines, the `p cnf` header,
/// then one zero-terminated clause per line.
auto write_dimacs(const Cnf & cnf, std::ostream & out) -> void;
/// Throws DimacsError if the file cannot be written.
auto write_dimacs(const Cnf & cnf, const std::filesystem::path & path) -> void;

/// Parses DIMACS including the map comments. Variable ids are assigned in order
/// of first appearance in the map. Throws DimacsError with the line number.
auto read_dimacs(std::istream & in) -> Cnf;
/// As above, but resolves map names against the model so the ids match it.
auto read_dimacs(std::istream & in, const Model & model) -> Cnf;

/// Model bits indexed by DIMACS variable; entry 0 is unused.
using Assignment = std::vector<bool>;

/// CSP value of every variable named in the map, indexed by VarId. Variables
/// without a true literal get 0.
auto decode(const Cnf & cnf, const Assignment & bits) -> std::vector<int>;

struct AllSatResult
{
    std::vector<Assignment> models;
    /// The limit stopped the enumeration while at least one more model existed.
    bool truncated = false;
};

/// Chronological DPLL with unit propagation. Decisions set a value literal of
/// the CSP variable with the fewest values left, auxiliaries only once every
/// CSP variable is fixed. Each model found adds a blocking clause over its true value
/// literals, so models that only differ on auxiliaries are reported once.
/// Throws GuardViolation above max_allsat_vars.
auto allsat_tiny(const Cnf & cnf, std::optional<std::size_t> limit = std::nullopt) -> AllSatResult;

} // namespace langford::sat

#endif
