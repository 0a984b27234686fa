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

#include "qcorr/parallel.hpp"

#include <exception>

namespace qcorr::detail {

void omp_for_each(int n, void* ctx, void (*body)(void*, int)) {
  std::exception_ptr error;
  int error_index = n;
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < n; ++i) {
    try {
      body(ctx, i);
    } catch (...) {
#pragma omp critical(qcorr_parallel_error)
      {
        if (!error || i < error_index) {
          error = std::current_exception();
          error_index = i;
        }
      }
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace qcorr::detail
