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

#include "qcorr/errors.hpp"

#include <sstream>

namespace qcorr {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::NotPositive: return "NotPositive";
    case ErrorKind::TraceNotOne: return "TraceNotOne";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::NotQubit: return "NotQubit";
    case ErrorKind::BlochNormExceeded: return "BlochNormExceeded";
    case ErrorKind::NotNormalized: return "NotNormalized";
    case ErrorKind::BadParameter: return "BadParameter";
    case ErrorKind::NotTracePreserving: return "NotTracePreserving";
    case ErrorKind::EmptyKrausList: return "EmptyKrausList";
    case ErrorKind::ChannelCannotCreate: return "ChannelCannotCreate";
    case ErrorKind::WitnessSearchExhausted: return "WitnessSearchExhausted";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

std::string Error::format(ErrorKind kind, const std::string& detail,
                          double defect) {
  std::ostringstream out;
  out << error_kind_name(kind) << ": " << detail;
  if (!std::isnan(defect)) out << " (defect " << defect << ")";
  return out.str();
}

}  // namespace qcorr
