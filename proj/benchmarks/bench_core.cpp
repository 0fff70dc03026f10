#include <benchmark/benchmark.h>

#include <random>

#include "lpcalc/factorization.hpp"
#include "lpcalc/invariants.hpp"

using namespace lpcalc;

namespace {

// the (t_a t_b)^6 pencil on the extended one-holed torus
struct Toy {
    TwistSystem sys{1, 1, true};
    Factorization fact;

    Toy() {
        const Surface& s = sys.surface();
        Letter A = s.a(1), B = s.b(1), XD = s.xD();
        RelHomologyModel rm(s);
        std::vector<std::int64_t> relA(rm.rank(), 0), relB(rm.rank(), 0);
        relA[rm.A(1)] = 1;
        relB[rm.B(1)] = 1;
        CurveId ca = sys.add_curve("a", Word::one_letter(A), relA);
        CurveId cb = sys.add_curve("b", Word::one_letter(B), relB);
        auto mk = [&](std::vector<Word> fwd, std::vector<Word> inv) {
            std::vector<Word> arcs(1);
            return MappingClass::from_images(s, std::move(fwd), std::move(inv), std::move(arcs),
                                             {0, 1});
        };
        sys.register_twist(ca, mk({Word::one_letter(A), Word({B, A}), Word::one_letter(XD)},
                                  {Word::one_letter(A), Word({B, -A}), Word::one_letter(XD)}));
        sys.register_twist(cb, mk({Word({A, -B}), Word::one_letter(B), Word::one_letter(XD)},
                                  {Word({A, B}), Word::one_letter(B), Word::one_letter(XD)}));
        fact.target = {sys.boundary_curve(1)};
        for (int k = 0; k < 6; ++k) {
            fact.twists.push_back(cb);
            fact.twists.push_back(ca);
        }
    }
};

IMat random_matrix(int n, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> d(-9, 9);
    IMat m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = d(rng);
    return m;
}

void bm_word_product(benchmark::State& state) {
    Toy t;
    Word w = t.sys.curve(t.sys.curve_id("delta1")).word;
    Word acc;
    for (auto _ : state) {
        acc = acc * w;
        if (acc.size() > 4096) acc = Word();
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(bm_word_product);

void bm_twist_compose(benchmark::State& state) {
    Toy t;
    MappingClass ta = t.sys.twist(t.sys.curve_id("a"));
    MappingClass tb = t.sys.twist(t.sys.curve_id("b"));
    for (auto _ : state) {
        MappingClass p = ta.compose(tb).compose(ta.inverted());
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(bm_twist_compose);

void bm_verify_toy(benchmark::State& state) {
    Toy t;
    for (auto _ : state) benchmark::DoNotOptimize(verify(t.sys, t.fact));
}
BENCHMARK(bm_verify_toy);

void bm_elementary_transformation(benchmark::State& state) {
    Toy t;
    int i = 1;
    for (auto _ : state) {
        Factorization f = elementary_transformation(t.sys, t.fact, 1 + (i++ % 11));
        benchmark::DoNotOptimize(f);
    }
}
BENCHMARK(bm_elementary_transformation);

void bm_smith_normal_form(benchmark::State& state) {
    IMat m = random_matrix(static_cast<int>(state.range(0)), 7u);
    for (auto _ : state) {
        SmithForm sf = smith_normal_form(m);
        benchmark::DoNotOptimize(sf);
    }
}
BENCHMARK(bm_smith_normal_form)->Arg(8)->Arg(16)->Arg(32);

void bm_homology_pipeline(benchmark::State& state) {
    Toy t;
    ChainComplex cc = build_chain_complex(t.sys, t.fact);
    for (auto _ : state) {
        H2Result r = homology_h2_with_fiber(cc);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(bm_homology_pipeline);

}  // namespace

BENCHMARK_MAIN();
