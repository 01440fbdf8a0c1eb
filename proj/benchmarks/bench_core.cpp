#include <benchmark/benchmark.h>

#include <memory>
#include <thread>

#include "zka/graph.hpp"
#include "zka/modmath.hpp"
#include "zka/rng.hpp"
#include "zka/scheme_coloring.hpp"
#include "zka/scheme_graph_iso.hpp"
#include "zka/scheme_modexp.hpp"
#include "zka/scheme_subgraph_iso.hpp"
#include "zka/schemes.hpp"
#include "zka/sigma.hpp"
#include "zka/wire.hpp"

using namespace zka;

namespace {

void BM_GraphIsoKeygen(benchmark::State& state) {
    auto n = static_cast<std::uint32_t>(state.range(0));
    Rng rng(1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(graph_iso::keygen(n, 0.5, rng));
    }
}
BENCHMARK(BM_GraphIsoKeygen)->Arg(8)->Arg(32)->Arg(128);

// One full round: commit, answer both challenges, verify both answers.
template <typename Contract>
void run_round(const Contract& scheme, Rng& rng) {
    auto [commitment, eph] = scheme.commit(rng);
    for (std::uint8_t bit : {0, 1}) {
        Challenge c{bit};
        benchmark::DoNotOptimize(scheme.verify_round(commitment, c, scheme.respond(eph, c)));
    }
}

void BM_GraphIsoRound(benchmark::State& state) {
    auto n = static_cast<std::uint32_t>(state.range(0));
    Rng rng(2);
    graph_iso::Scheme scheme(graph_iso::keygen(n, 0.5, rng));
    for (auto _ : state) run_round(scheme, rng);
}
BENCHMARK(BM_GraphIsoRound)->Arg(8)->Arg(32)->Arg(128);

void BM_SubgraphIsoRound(benchmark::State& state) {
    auto n = static_cast<std::uint32_t>(state.range(0));
    Rng rng(3);
    subgraph_iso::Scheme scheme(subgraph_iso::keygen(n, 2 * n, rng));
    for (auto _ : state) run_round(scheme, rng);
}
BENCHMARK(BM_SubgraphIsoRound)->Arg(8)->Arg(32);

void BM_ColoringRound(benchmark::State& state) {
    auto n = static_cast<std::uint32_t>(state.range(0));
    Rng rng(4);
    coloring::Scheme scheme(coloring::keygen(n, 3, rng));
    for (auto _ : state) run_round(scheme, rng);
}
BENCHMARK(BM_ColoringRound)->Arg(8)->Arg(32)->Arg(128);

void BM_ModExpRound(benchmark::State& state) {
    Rng rng(5);
    BigInt p = state.range(0) == 0 ? BigInt(1009) : (BigInt(1) << 61) - 1;
    modexp::Scheme scheme(modexp::keygen(p, rng));
    for (auto _ : state) run_round(scheme, rng);
}
BENCHMARK(BM_ModExpRound)->Arg(0)->Arg(1);

void BM_ModPow(benchmark::State& state) {
    BigInt p = (BigInt(1) << 127) - 1;
    Rng rng(6);
    BigInt base = random_below(p - 2, rng) + 2;
    BigInt exponent = random_below(p - 1, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(mod_pow(base, exponent, p));
    }
}
BENCHMARK(BM_ModPow);

void BM_GraphSerialize(benchmark::State& state) {
    auto n = static_cast<std::uint32_t>(state.range(0));
    Rng rng(7);
    Graph g = Graph::random(n, 0.5, rng);
    for (auto _ : state) {
        Bytes data = g.serialize();
        benchmark::DoNotOptimize(Graph::deserialize(data));
    }
}
BENCHMARK(BM_GraphSerialize)->Arg(32)->Arg(256)->Arg(1024);

void BM_FrameCodec(benchmark::State& state) {
    Rng rng(8);
    Message m{Tag::Response, Bytes(static_cast<std::size_t>(state.range(0)))};
    for (auto& b : m.payload) b = static_cast<std::uint8_t>(rng.below(256));
    for (auto _ : state) {
        Bytes encoded = encode_message(m);
        std::size_t consumed = 0;
        benchmark::DoNotOptimize(decode_message(encoded, consumed));
    }
}
BENCHMARK(BM_FrameCodec)->Arg(64)->Arg(4096);

// Whole authenticated session over the in-memory transport, both endpoints.
void BM_LoopbackSession(benchmark::State& state) {
    auto rounds = static_cast<std::uint32_t>(state.range(0));
    Rng keygen_rng(9);
    graph_iso::Scheme scheme(graph_iso::keygen(8, 0.5, keygen_rng));
    SessionConfig config{SchemeId::GraphIso, rounds, 5000};
    for (auto _ : state) {
        LoopbackPair pair;
        std::thread prover([&] {
            Rng rng(10);
            prover_endpoint(pair.a(), scheme, config, rng);
        });
        Rng rng(11);
        bool accepted = verifier_endpoint(pair.b(), make_verifier_contract,
                                          scheme.statement_bytes(), config, rng);
        prover.join();
        if (!accepted) state.SkipWithError("honest session rejected");
    }
}
BENCHMARK(BM_LoopbackSession)->Arg(1)->Arg(32);

}  // namespace

BENCHMARK_MAIN();
