#ifndef LANGFORD_VARIANT_HPP
#define LANGFORD_VARIANT_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace langford {

class InvalidVariant : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// L(k, n): k copies of each number 1..n, copies of m exactly m + 1 apart.
struct Instance
{
    int k = 2;
    int n = 1;

    /// Throws InvalidVariant unless k >= 2, n >= 1 and k * n fits comfortably in an int.
    static auto make(int k, int n) -> Instance;

    auto seq_length() const -> int { return k * n; }
    /// Zero-padded "kk_nn", e.g. "02_06".
    auto label() const -> std::string;

    friend auto operator<=>(const Instance &, const Instance &) = default;
};

enum class ModelKind
{
    Direct,
    Positional,
    Channelled
};

enum class Viewpoint
{
    D,
    P
};

enum class Symmetry
{
    None,
    D,
    P
};

enum class ConsSet
{
    Both,
    D,
    P
};

enum class HeuristicKind
{
    Static,
    SDF,
    Wdeg,
    DomOverWdeg
};

/// One point of the model x heuristic matrix. `branch` and `cons` only apply
/// to channelled models and must be empty otherwise.
struct VariantConfig
{
    ModelKind model = ModelKind::Channelled;
    std::optional<Viewpoint> branch;
    Symmetry sym = Symmetry::None;
    std::optional<ConsSet> cons;
    HeuristicKind heuristic = HeuristicKind::Static;
    bool implied = true;

    /// Throws InvalidVariant on inapplicable or incompatible fields.
    auto validate() const -> void;

    /// e.g. "channelled branch:D sym:P cons:Both static". Round-trips through parse().
    auto label() const -> std::string;
    /// Accepts the label format; tokens may be separated by spaces or commas.
    /// Missing channelled fields default to branch:D and cons:Both.
    static auto parse(std::string_view text) -> VariantConfig;

    friend auto operator==(const VariantConfig &, const VariantConfig &) -> bool = default;
};

// Lower-case tokens as used in the CSV and on the command line.
auto to_string(ModelKind) -> std::string;
auto to_string(Viewpoint) -> std::string;
auto to_string(Symmetry) -> std::string;
auto to_string(ConsSet) -> std::string;
auto to_string(HeuristicKind) -> std::string;

auto parse_model_kind(std::string_view) -> ModelKind;
auto parse_viewpoint(std::string_view) -> Viewpoint;
auto parse_symmetry(std::string_view) -> Symmetry;
auto parse_cons_set(std::string_view) -> ConsSet;
auto parse_heuristic(std::string_view) -> HeuristicKind;

} // namespace langford

#endif
