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
//
// JSON wire formats. Complex numbers are two-element [re, im] arrays.
// States: {"dims": [...], "matrix": [[...rows of pairs...]]}.
// Channels: {"dim": d, "kraus": [flat row-major pair arrays]}.
// Emitted numbers are rounded to 12 significant digits so output is
// deterministic and self-reproducing.

#pragma once

#include "json.hpp"
#include "qcorr/measures.hpp"
#include "qcorr/repro.hpp"

namespace qcorr {

using Json = nlohmann::ordered_json;

/// Rounds to 12 significant digits; non-finite values become strings.
Json json_number(double value);

Json to_json(const CMatrix& m);                 // nested rows of [re, im]
Json to_json_flat(const CMatrix& m);            // flat row-major pairs
CMatrix matrix_from_json(const Json& j);        // accepts either shape

Json to_json(const DensityMatrix& rho);
DensityMatrix density_from_json(const Json& j, const Tolerances& tol = {});

Json to_json(const KrausChannel& ch);
KrausChannel channel_from_json(const Json& j, const Tolerances& tol = {});

Json to_json(const BlochVector& v);
Json to_json(const ChannelClass& cls);
Json to_json(const ProductBasis& basis);
ProductBasis product_basis_from_json(const Json& j);
Json to_json(const ClassicalityVerdict& verdict);
Json to_json(const CCState& cc);
CCState cc_state_from_json(const Json& j);
Json to_json(const MeasureResult& result);
Json to_json(const ReproReport& report);

/// Human-readable rendering of a report payload (--format table).
std::string to_table(const Json& payload);

}  // namespace qcorr
