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


#include "cvtele/strategies.h"

#include "benchmark/benchmark.h"

namespace {

const cvtele::TransmittanceEnsemble &ensemble(std::uint32_t stream) {
    static const auto b = cvtele::sample_transmittance_ensemble(cvtele::EllipticBeamParams::erlangen(1.5e-14),
                                                                100000, 1, 0);
    static const auto a = cvtele::sample_transmittance_ensemble(cvtele::EllipticBeamParams::erlangen(1.5e-14),
                                                                100000, 1, 1);
    return stream == 0 ? b : a;
}

void BM_mean_fidelity_single(benchmark::State &state) {
    cvtele::SchemeSpec scheme;
    scheme.postselect_threshold = 0.6;
    ensemble(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(cvtele::mean_fidelity_single(1.0, ensemble(0), scheme).mean_fidelity);
    }
}
BENCHMARK(BM_mean_fidelity_single)->Unit(benchmark::kMillisecond);

void BM_mean_fidelity_dual(benchmark::State &state) {
    cvtele::SchemeSpec scheme;
    scheme.mode = cvtele::SchemeMode::kAdaptiveDual;
    ensemble(1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(cvtele::mean_fidelity_dual(1.0, ensemble(1), ensemble(0), scheme).mean_fidelity);
    }
}
BENCHMARK(BM_mean_fidelity_dual)->Unit(benchmark::kMillisecond);

void BM_min_map_ks_distance(benchmark::State &state) {
    ensemble(1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(cvtele::min_map_ks_distance(ensemble(1), ensemble(0)));
    }
}
BENCHMARK(BM_min_map_ks_distance)->Unit(benchmark::kMillisecond);

}  // namespace
