// Copyright 2026 The revertcf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <benchmark/benchmark.h>

#include <revertcf/catalog.hpp>
#include <revertcf/contfrac.hpp>
#include <revertcf/mpoly.hpp>
#include <revertcf/series.hpp>

namespace
{

using namespace revertcf;

Series<Rational> jacobsthal(std::size_t order)
{
    return expand_rational(RationalGF<Rational>{{Rational(1)}, {Rational(1), Rational(-1), Rational(-2)}}, order);
}

Series<MPoly> symbolic_family(std::size_t order)
{
    const MPoly a = MPoly::variable("a"), b = MPoly::variable("b"), c = MPoly::variable("c");
    return expand_rational(RationalGF<MPoly>{{MPoly(1), a}, {MPoly(1), b, c}}, order);
}

void BM_RevertRational(benchmark::State &state)
{
    const auto g = jacobsthal(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(revert_transform(g));
    }
}
BENCHMARK(BM_RevertRational)->Arg(16)->Arg(64)->Arg(256);

void BM_LagrangeOracleRational(benchmark::State &state)
{
    const auto g = jacobsthal(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(catalog::lagrange_revert_oracle(g));
    }
}
BENCHMARK(BM_LagrangeOracleRational)->Arg(16)->Arg(64);

void BM_RevertSymbolic(benchmark::State &state)
{
    const auto g = symbolic_family(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(revert_transform(g));
    }
}
BENCHMARK(BM_RevertSymbolic)->Arg(6)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_JacobiExpandSymbolic(benchmark::State &state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    const MPoly a = MPoly::variable("a"), b = MPoly::variable("b"), c = MPoly::variable("c");
    const auto J = revert_jacobi_params(a, b, c, depth_for_order(n));
    for (auto _ : state) {
        benchmark::DoNotOptimize(jacobi_expand(J, n));
    }
}
BENCHMARK(BM_JacobiExpandSymbolic)->Arg(6)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_MPolyMultiply(benchmark::State &state)
{
    const MPoly a = MPoly::variable("a"), b = MPoly::variable("b"), c = MPoly::variable("c");
    const auto e = static_cast<unsigned>(state.range(0));
    const MPoly p = (a + b + c + MPoly(1)).pow(e);
    const MPoly q = (a - b * c + MPoly(2)).pow(e);
    for (auto _ : state) {
        benchmark::DoNotOptimize(p * q);
    }
    state.counters["terms"] = static_cast<double>(p.terms().size());
}
BENCHMARK(BM_MPolyMultiply)->Arg(4)->Arg(8)->Arg(12);

void BM_ThronExpandQuad(benchmark::State &state)
{
    const auto cf = thron_params(Rational(0), Rational(-1), Rational(-1), Branch::plus);
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(thron_expand(cf, n));
    }
}
BENCHMARK(BM_ThronExpandQuad)->Arg(16)->Arg(64);

} // namespace

BENCHMARK_MAIN();
