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


#include "cvtele/specfun.h"

#include "benchmark/benchmark.h"

namespace {

void BM_bessel_i0e(benchmark::State &state) {
    double x = 0.1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(cvtele::specfun::bessel_i0e(x));
        x = x < 40.0 ? x * 1.07 : 0.1;
    }
}
BENCHMARK(BM_bessel_i0e);

void BM_one_minus_i0e(benchmark::State &state) {
    double z = 1e-6;
    for (auto _ : state) {
        benchmark::DoNotOptimize(cvtele::specfun::one_minus_i0e(z));
        z = z < 5.0 ? z * 1.3 : 1e-6;
    }
}
BENCHMARK(BM_one_minus_i0e);

void BM_lambert_w0_of_exp(benchmark::State &state) {
    double l = -5.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(cvtele::specfun::lambert_w0_of_exp(l));
        l = l < 900.0 ? l + 3.7 : -5.0;
    }
}
BENCHMARK(BM_lambert_w0_of_exp);

}  // namespace
