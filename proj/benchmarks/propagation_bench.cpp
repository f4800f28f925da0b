#include <langford/engine.hpp>
#include <langford/models.hpp>

#include <benchmark/benchmark.h>

using namespace langford;

namespace {

// Root propagation of a freshly built model.
void BM_RootFixpoint(benchmark::State & state)
{
    auto inst = Instance::make(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
    auto model = build_model(inst, VariantConfig::parse("channelled branch:D sym:D cons:Both"));
    PropagationQueue queue(model.num_propagators());
    for (auto _ : state) {
        auto store = model.root_store();
        queue.push_all();
        benchmark::DoNotOptimize(propagate_to_fixpoint(store, model, queue));
    }
}
BENCHMARK(BM_RootFixpoint)->Args({2, 8})->Args({3, 9})->Args({3, 12});

void BM_InverseChannel(benchmark::State & state)
{
    auto inst = Instance::make(3, static_cast<int>(state.range(0)));
    auto model = build_model(inst, VariantConfig::parse("channelled branch:D sym:None cons:P"));
    const Propagator * channel = nullptr;
    for (std::size_t i = 0; i < model.num_propagators(); ++i)
        if (model.propagator(PropagatorId{i}).kind() == PropagatorKind::InverseChannel)
            channel = &model.propagator(PropagatorId{i});
    for (auto _ : state) {
        auto store = model.root_store();
        (void) store.assign(model.seq_vars.front(), 2);
        benchmark::DoNotOptimize(channel->propagate(store));
    }
}
BENCHMARK(BM_InverseChannel)->Arg(9)->Arg(12);

} // namespace
