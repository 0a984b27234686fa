// Copyright 2026 The qcorr Authors
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

#pragma once

#include <type_traits>

namespace qcorr {

/// Execution policy for independent work items (optimizer restarts, suite
/// trials). Serial is the reference path; Parallel runs the same iterations
/// under OpenMP. Bodies must write results into per-index slots so both
/// policies produce identical output.
enum class Exec { Serial, Parallel };

namespace detail {
// Runs body(ctx, i) for i in [0, n) under an OpenMP parallel for; captures
// the lowest-index exception and rethrows it after the loop completes.
void omp_for_each(int n, void* ctx, void (*body)(void*, int));
}  // namespace detail

template <typename F>
void for_each_index(int n, Exec exec, F&& fn) {
  if (exec == Exec::Serial) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  using Fn = std::remove_reference_t<F>;
  detail::omp_for_each(n, &fn, [](void* raw, int i) {
    (*static_cast<Fn*>(raw))(i);
  });
}

}  // namespace qcorr
