// Copyright 2026 The cvtele Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "cvtele/atmosphere.h"

#include "benchmark/benchmark.h"

namespace {

void BM_aperture_transmittance(benchmark::State &state) {
    const auto d = cvtele::derive_params(cvtele::EllipticBeamParams::erlangen(1.5e-14));
    std::uint64_t i = 0;
    for (auto _ : state) {
        cvtele::PhiloxStream rng(1, i++, 0);
        const cvtele::BeamSample s = cvtele::sample_beam(d, rng);
        benchmark::DoNotOptimize(cvtele::aperture_transmittance(s, d, 0.04));
    }
}
BENCHMARK(BM_aperture_transmittance);

// Arg: worker threads.
void BM_sample_ensemble(benchmark::State &state) {
    const auto p = cvtele::EllipticBeamParams::erlangen(1.5e-14);
    const auto threads = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(cvtele::sample_transmittance_ensemble(p, 100000, 1, 0, threads).mean());
    }
    state.SetItemsProcessed(state.iterations() * 100000);
}
BENCHMARK(BM_sample_ensemble)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace
