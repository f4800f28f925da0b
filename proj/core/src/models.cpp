#include <langford/models.hpp>

#include <string>

namespace langford {

namespace {
    auto add_seq_vars(Model & model, const Instance & inst) -> void
    {
        for (int i = 1; i <= inst.seq_length(); ++i)
            model.seq_vars.push_back(model.add_variable("seq[" + std::to_string(i) + "]", 1, inst.n, VarRole::Seq));
    }

    auto add_pos_vars(Model & model, const Instance & inst) -> void
    {
        for (int m = 1; m <= inst.n; ++m) {
            auto & row = model.pos_vars.emplace_back();
            for (int j = 1; j <= inst.k; ++j)
                row.push_back(model.add_variable(
                    "pos[" + std::to_string(m) + "][" + std::to_string(j) + "]", 1, inst.seq_length(), VarRole::Pos));
        }
    }

    // Apartness via the first occurrence of each number, plus the optional
    // exactly-k occurrence constraints.
    auto post_direct_constraints(Model & model, const Instance & inst, bool implied) -> void
    {
        for (int m = 1; m <= inst.n; ++m) {
            int last_start = inst.seq_length() - (inst.k - 1) * (m + 1);
            model.first_occ_vars.push_back(
                model.add_variable("firstOcc[" + std::to_string(m) + "]", 1, last_start, VarRole::FirstOcc));
        }
        for (int m = 1; m <= inst.n; ++m)
            for (int t = 0; t < inst.k; ++t)
                model.post<ElementOffsetConst>(model.seq_vars, model.first_occ_vars[static_cast<std::size_t>(m - 1)], t * (m + 1), m);
        if (implied)
            for (int m = 1; m <= inst.n; ++m)
                model.post<Occurrence>(model.seq_vars, m, inst.k);
    }

    auto post_positional_constraints(Model & model, const Instance & inst) -> void
    {
        std::vector<VarId> all;
        for (const auto & row : model.pos_vars)
            all.insert(all.end(), row.begin(), row.end());
        model.post<AllDifferent>(std::move(all));
        for (int m = 1; m <= inst.n; ++m) {
            const auto & row = model.pos_vars[static_cast<std::size_t>(m - 1)];
            for (int j = 1; j < inst.k; ++j)
                model.post<EqOffset>(row[static_cast<std::size_t>(j)], row[static_cast<std::size_t>(j - 1)], m + 1);
        }
    }

    auto post_direct_symmetry(Model & model) -> void
    {
        model.post<LessThan>(model.seq_vars.front(), model.seq_vars.back());
    }

    // pos[1][1] - 1 < kn - pos[1][k]  <=>  pos[1][1] + pos[1][k] <= kn
    auto post_positional_symmetry(Model & model, const Instance & inst) -> void
    {
        const auto & ones = model.pos_vars.front();
        model.post<SumLeq>(ones.front(), ones.back(), inst.seq_length());
    }

    auto flat(const std::vector<std::vector<VarId>> & m) -> std::vector<VarId>
    {
        std::vector<VarId> r;
        for (const auto & row : m)
            r.insert(r.end(), row.begin(), row.end());
        return r;
    }
}

auto build_direct(const Instance & instance, bool sym, bool implied) -> Model
{
    auto inst = Instance::make(instance.k, instance.n);
    Model model;
    model.instance = inst;
    VariantConfig cfg;
    cfg.model = ModelKind::Direct;
    cfg.sym = sym ? Symmetry::D : Symmetry::None;
    cfg.implied = implied;
    model.variant = cfg;

    add_seq_vars(model, inst);
    post_direct_constraints(model, inst, implied);
    if (sym)
        post_direct_symmetry(model);
    return model;
}

auto build_positional(const Instance & instance, bool sym) -> Model
{
    auto inst = Instance::make(instance.k, instance.n);
    Model model;
    model.instance = inst;
    VariantConfig cfg;
    cfg.model = ModelKind::Positional;
    cfg.sym = sym ? Symmetry::P : Symmetry::None;
    model.variant = cfg;

    add_pos_vars(model, inst);
    post_positional_constraints(model, inst);
    if (sym)
        post_positional_symmetry(model, inst);
    return model;
}

auto build_channelled(const Instance & instance, const VariantConfig & cfg) -> Model
{
    if (cfg.model != ModelKind::Channelled)
        throw InvalidVariant("build_channelled needs a channelled variant");
    cfg.validate();
    auto inst = Instance::make(instance.k, instance.n);

    Model model;
    model.instance = inst;
    model.variant = cfg;

    add_seq_vars(model, inst);
    add_pos_vars(model, inst);

    for (int m = 1; m <= inst.n; ++m)
        for (auto p : model.pos_vars[static_cast<std::size_t>(m - 1)])
            model.post<ElementOffsetConst>(model.seq_vars, p, 0, m);
    model.post<InverseChannel>(model.pos_vars, model.seq_vars);
    for (const auto & row : model.pos_vars)
        for (std::size_t j = 1; j < row.size(); ++j)
            model.post<LessThan>(row[j - 1], row[j]);

    if (*cfg.cons != ConsSet::P)
        post_direct_constraints(model, inst, cfg.implied);
    if (*cfg.cons != ConsSet::D)
        post_positional_constraints(model, inst);

    if (cfg.sym == Symmetry::D)
        post_direct_symmetry(model);
    else if (cfg.sym == Symmetry::P)
        post_positional_symmetry(model, inst);

    auto pos = flat(model.pos_vars);
    std::vector<VarId> order;
    if (*cfg.branch == Viewpoint::D) {
        order = model.seq_vars;
        order.insert(order.end(), pos.begin(), pos.end());
    }
    else {
        order = pos;
        order.insert(order.end(), model.seq_vars.begin(), model.seq_vars.end());
    }
    order.insert(order.end(), model.first_occ_vars.begin(), model.first_occ_vars.end());
    model.set_branch_order(std::move(order));
    return model;
}

auto build_model(const Instance & instance, const VariantConfig & cfg) -> Model
{
    cfg.validate();
    Model model;
    switch (cfg.model) {
    case ModelKind::Direct: model = build_direct(instance, cfg.sym == Symmetry::D, cfg.implied); break;
    case ModelKind::Positional: model = build_positional(instance, cfg.sym == Symmetry::P); break;
    case ModelKind::Channelled: model = build_channelled(instance, cfg); break;
    }
    model.variant = cfg;
    return model;
}

} // namespace langford
