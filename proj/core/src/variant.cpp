#include <langford/variant.hpp>

#include <algorithm>
#include <cctype>
#include <climits>
#include <cstdio>
#include <vector>

namespace langford {

auto Instance::make(int k, int n) -> Instance
{
    if (k < 2)
        throw InvalidVariant("k must be at least 2, got " + std::to_string(k));
    if (n < 1)
        throw InvalidVariant("n must be at least 1, got " + std::to_string(n));
    if (static_cast<long long>(k) * n > INT_MAX / 4)
        throw InvalidVariant("k * n overflows the integer width");
    return Instance{k, n};
}

auto Instance::label() const -> std::string
{
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%02d_%02d", k, n);
    return buf;
}

namespace {
    auto lower(std::string_view s) -> std::string
    {
        std::string r(s);
        std::transform(r.begin(), r.end(), r.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
        return r;
    }

    auto upper_first(std::string s) -> std::string
    {
        if (! s.empty())
            s[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
        return s;
    }

    auto split_tokens(std::string_view text) -> std::vector<std::string>
    {
        std::vector<std::string> result;
        std::string current;
        for (char c : text) {
            if (c == ' ' || c == ',' || c == '\t') {
                if (! current.empty())
                    result.push_back(std::move(current));
                current.clear();
            }
            else
                current.push_back(c);
        }
        if (! current.empty())
            result.push_back(std::move(current));
        return result;
    }
}

auto to_string(ModelKind m) -> std::string
{
    switch (m) {
    case ModelKind::Direct: return "direct";
    case ModelKind::Positional: return "positional";
    case ModelKind::Channelled: return "channelled";
    }
    return "?";
}

auto to_string(Viewpoint v) -> std::string { return v == Viewpoint::D ? "d" : "p"; }

auto to_string(Symmetry s) -> std::string
{
    switch (s) {
    case Symmetry::None: return "none";
    case Symmetry::D: return "d";
    case Symmetry::P: return "p";
    }
    return "?";
}

auto to_string(ConsSet c) -> std::string
{
    switch (c) {
    case ConsSet::Both: return "both";
    case ConsSet::D: return "d";
    case ConsSet::P: return "p";
    }
    return "?";
}

auto to_string(HeuristicKind h) -> std::string
{
    switch (h) {
    case HeuristicKind::Static: return "static";
    case HeuristicKind::SDF: return "sdf";
    case HeuristicKind::Wdeg: return "wdeg";
    case HeuristicKind::DomOverWdeg: return "domoverwdeg";
    }
    return "?";
}

auto parse_model_kind(std::string_view s) -> ModelKind
{
    auto t = lower(s);
    if (t == "direct")
        return ModelKind::Direct;
    if (t == "positional")
        return ModelKind::Positional;
    if (t == "channelled" || t == "channeled")
        return ModelKind::Channelled;
    throw InvalidVariant("unknown model '" + std::string(s) + "'");
}

auto parse_viewpoint(std::string_view s) -> Viewpoint
{
    auto t = lower(s);
    if (t == "d")
        return Viewpoint::D;
    if (t == "p")
        return Viewpoint::P;
    throw InvalidVariant("unknown viewpoint '" + std::string(s) + "'");
}

auto parse_symmetry(std::string_view s) -> Symmetry
{
    auto t = lower(s);
    if (t == "none")
        return Symmetry::None;
    if (t == "d")
        return Symmetry::D;
    if (t == "p")
        return Symmetry::P;
    throw InvalidVariant("unknown symmetry '" + std::string(s) + "'");
}

auto parse_cons_set(std::string_view s) -> ConsSet
{
    auto t = lower(s);
    if (t == "both")
        return ConsSet::Both;
    if (t == "d")
        return ConsSet::D;
    if (t == "p")
        return ConsSet::P;
    throw InvalidVariant("unknown constraint set '" + std::string(s) + "'");
}

auto parse_heuristic(std::string_view s) -> HeuristicKind
{
    auto t = lower(s);
    if (t == "static")
        return HeuristicKind::Static;
    if (t == "sdf")
        return HeuristicKind::SDF;
    if (t == "wdeg")
        return HeuristicKind::Wdeg;
    if (t == "domoverwdeg" || t == "dom-wdeg" || t == "domwdeg")
        return HeuristicKind::DomOverWdeg;
    throw InvalidVariant("unknown heuristic '" + std::string(s) + "'");
}

auto VariantConfig::validate() const -> void
{
    switch (model) {
    case ModelKind::Direct:
        if (branch || cons)
            throw InvalidVariant("branch and cons only apply to channelled models");
        if (sym == Symmetry::P)
            throw InvalidVariant("sym:P needs the positional variables");
        break;
    case ModelKind::Positional:
        if (branch || cons)
            throw InvalidVariant("branch and cons only apply to channelled models");
        if (sym == Symmetry::D)
            throw InvalidVariant("sym:D needs the sequence variables");
        if (! implied)
            throw InvalidVariant("the implied occurrence constraints only exist in models with direct constraints");
        break;
    case ModelKind::Channelled:
        if (! branch || ! cons)
            throw InvalidVariant("channelled models need both branch and cons");
        if (! implied && *cons == ConsSet::P)
            throw InvalidVariant("the implied occurrence constraints only exist in models with direct constraints");
        break;
    }
}

auto VariantConfig::label() const -> std::string
{
    std::string r = to_string(model);
    if (branch)
        r += " branch:" + upper_first(to_string(*branch));
    r += " sym:" + (sym == Symmetry::None ? std::string("None") : upper_first(to_string(sym)));
    if (cons)
        r += " cons:" + upper_first(to_string(*cons));
    r += " " + to_string(heuristic);
    if (! implied)
        r += " no-implied";
    return r;
}

auto VariantConfig::parse(std::string_view text) -> VariantConfig
{
    auto tokens = split_tokens(text);
    if (tokens.empty())
        throw InvalidVariant("empty variant");

    VariantConfig cfg;
    cfg.model = parse_model_kind(tokens.front());
    for (std::size_t i = 1; i < tokens.size(); ++i) {
        const auto & t = tokens[i];
        auto colon = t.find(':');
        if (colon == std::string::npos) {
            if (lower(t) == "no-implied")
                cfg.implied = false;
            else
                cfg.heuristic = parse_heuristic(t);
            continue;
        }
        auto key = lower(t.substr(0, colon));
        auto value = std::string_view(t).substr(colon + 1);
        if (key == "branch")
            cfg.branch = parse_viewpoint(value);
        else if (key == "sym")
            cfg.sym = parse_symmetry(value);
        else if (key == "cons")
            cfg.cons = parse_cons_set(value);
        else
            throw InvalidVariant("unknown variant field '" + key + "'");
    }
    if (cfg.model == ModelKind::Channelled) {
        if (! cfg.branch)
            cfg.branch = Viewpoint::D;
        if (! cfg.cons)
            cfg.cons = ConsSet::Both;
    }
    cfg.validate();
    return cfg;
}

} // namespace langford
