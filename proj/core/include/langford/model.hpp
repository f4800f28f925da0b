#ifndef LANGFORD_MODEL_HPP
#define LANGFORD_MODEL_HPP

#include <langford/domain.hpp>
#include <langford/ids.hpp>
#include <langford/propagators.hpp>
#include <langford/store.hpp>
#include <langford/variant.hpp>

#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace langford {

class MalformedModel : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class VarRole
{
    Seq,
    Pos,
    FirstOcc,
    Other
};

struct VariableInfo
{
    std::string name;
    DomainSet initial;
    VarRole role = VarRole::Other;
};

/// Variables, propagators and a branching order. Models built by the Langford
/// builders also carry the instance, the variant and the role tables
/// (seq / pos / firstOcc); generic models leave those empty.
class Model {
public:
    Model() = default;
    Model(Model &&) noexcept = default;
    auto operator=(Model &&) noexcept -> Model & = default;

    auto add_variable(std::string name, int lower, int upper, VarRole role = VarRole::Other) -> VarId;
    auto add_variable(std::string name, DomainSet initial, VarRole role = VarRole::Other) -> VarId;

    auto post(std::unique_ptr<Propagator> p) -> PropagatorId;

    template <typename P, typename... Args>
    auto post(Args &&... args) -> PropagatorId
    {
        return post(std::make_unique<P>(std::forward<Args>(args)...));
    }

    auto num_vars() const -> std::size_t { return _variables.size(); }
    auto variable(VarId v) const -> const VariableInfo & { return _variables[v.index]; }
    auto variables() const -> const std::vector<VariableInfo> & { return _variables; }
    auto find_variable(std::string_view name) const -> std::optional<VarId>;

    auto num_propagators() const -> std::size_t { return _propagators.size(); }
    auto propagator(PropagatorId p) const -> const Propagator & { return *_propagators[p.index]; }
    auto propagator(PropagatorId p) -> Propagator & { return *_propagators[p.index]; }
    auto propagators() const -> const std::vector<std::unique_ptr<Propagator>> & { return _propagators; }
    auto count(PropagatorKind kind) const -> std::size_t;

    /// Propagators whose scope contains v.
    auto watchers(VarId v) const -> const std::vector<PropagatorId> & { return _watchers[v.index]; }

    /// Defaults to construction order when never set.
    auto branch_order() const -> const std::vector<VarId> &;
    auto set_branch_order(std::vector<VarId> order) -> void;
    /// Position of v in the branching order; used for tie-breaking.
    auto branch_rank(VarId v) const -> std::size_t;

    auto reset_weights() -> void;

    /// Fresh store over the initial domains.
    auto root_store() const -> Store;

    /// Throws MalformedModel if a scope references an undeclared variable or
    /// the branching order is not a permutation of the variables.
    auto validate() const -> void;

    std::optional<Instance> instance;
    std::optional<VariantConfig> variant;
    std::vector<VarId> seq_vars;
    std::vector<std::vector<VarId>> pos_vars;
    std::vector<VarId> first_occ_vars;

    /// The Langford sequence represented by a total assignment, read from the
    /// seq variables when present and otherwise induced from the pos variables.
    auto sequence_of(std::span<const int> assignment) const -> std::vector<int>;
    /// The positional matrix flattened in (m, j) order, or induced from seq.
    auto positions_of(std::span<const int> assignment) const -> std::vector<int>;

private:
    std::vector<VariableInfo> _variables;
    std::vector<std::unique_ptr<Propagator>> _propagators;
    std::vector<std::vector<PropagatorId>> _watchers;
    std::vector<VarId> _branch_order;
    std::vector<std::size_t> _rank;
    bool _explicit_order = false;
};

} // namespace langford

#endif
