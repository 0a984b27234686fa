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

#include <cmath>
#include <stdexcept>
#include <string>

namespace qcorr {

enum class ErrorKind {
  NotHermitian,
  NotPositive,
  TraceNotOne,
  DimensionMismatch,
  IndexOutOfRange,
  NotQubit,
  BlochNormExceeded,
  NotNormalized,
  BadParameter,
  NotTracePreserving,
  EmptyKrausList,
  ChannelCannotCreate,
  WitnessSearchExhausted,
  ParseError,
};

const char* error_kind_name(ErrorKind kind);

/// Validation / precondition failure. `defect` carries the measured magnitude
/// of the violated invariant when one is meaningful (NaN otherwise).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail,
        double defect = std::nan(""))
      : std::runtime_error(format(kind, detail, defect)),
        kind_(kind),
        defect_(defect) {}

  ErrorKind kind() const { return kind_; }
  double defect() const { return defect_; }

 private:
  static std::string format(ErrorKind kind, const std::string& detail,
                            double defect);

  ErrorKind kind_;
  double defect_;
};

}  // namespace qcorr
