// Copyright 2026 The pfcodes Authors
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

// Serial reference kernels against their OpenMP twins. The thread count is
// the benchmark argument; 0 means the serial twin.

#include <benchmark/benchmark.h>

#include "pfcodes/builders.hpp"
#include "pfcodes/search.hpp"

using namespace pfcodes;

namespace {

const PfCode& embedded_five_qutrit() {
    static const PfCode code = embed_qudit_code(five_qudit_code(3));
    return code;
}

void BM_Distance(benchmark::State& state) {
    const PfCode& code = embedded_five_qutrit();
    const int threads = static_cast<int>(state.range(0));
    DistanceOptions opts;
    opts.threads = threads;
    std::uint64_t candidates = 0;
    for (auto _ : state) {
        const auto r = threads == 0 ? distance_serial(code, opts) : distance(code, opts);
        candidates = r.candidates;
        benchmark::DoNotOptimize(r.distance);
    }
    state.counters["candidates"] = static_cast<double>(candidates);
}
BENCHMARK(BM_Distance)->Arg(0)->Arg(1)->Arg(2)->Arg(4)->UseRealTime()->Unit(benchmark::kMillisecond);

SearchSpec spec_for(Residue d, std::size_t modes) {
    SearchSpec s;
    s.modulus = d;
    s.num_modes = modes;
    s.target_k = 1;
    s.target_d = 3;
    return s;
}

void run_search(benchmark::State& state, SearchSpec spec) {
    const int threads = static_cast<int>(state.range(0));
    spec.threads = threads == 0 ? 1 : threads;
    std::uint64_t evaluated = 0;
    for (auto _ : state) {
        const auto r = threads == 0 ? find_codes_serial(spec) : find_codes(spec);
        evaluated = r.certificate.evaluated;
        benchmark::DoNotOptimize(r.hits.size());
    }
    state.counters["evaluated"] = static_cast<double>(evaluated);
}

void BM_SearchD7(benchmark::State& state) { run_search(state, spec_for(7, 6)); }
BENCHMARK(BM_SearchD7)->Arg(0)->Arg(1)->Arg(2)->Arg(4)->UseRealTime()->Unit(benchmark::kMillisecond);

void BM_SearchD3Modes8(benchmark::State& state) { run_search(state, spec_for(3, 8)); }
BENCHMARK(BM_SearchD3Modes8)->Arg(0)->Arg(1)->Arg(2)->Arg(4)->UseRealTime()->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
