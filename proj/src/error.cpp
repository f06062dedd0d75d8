// Copyright 2026 The fsusy Authors
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

#include "fsusy/error.hpp"

namespace fsusy {

const char *error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::kInvalidOrder: return "invalid-order";
        case ErrorKind::kDivisionDegenerate: return "division-degenerate";
        case ErrorKind::kDegenerateSpace: return "degenerate-space";
        case ErrorKind::kRepresentationInvalid: return "representation-invalid";
        case ErrorKind::kInvalidGrading: return "invalid-grading";
        case ErrorKind::kWindowTooSmall: return "window-too-small";
        case ErrorKind::kOutOfDomain: return "out-of-domain";
        case ErrorKind::kFactorizationInvalid: return "factorization-invalid";
        case ErrorKind::kDimensionMismatch: return "dimension-mismatch";
        case ErrorKind::kInvalidVariant: return "invalid-variant";
        case ErrorKind::kMissingReplica: return "missing-replica";
        case ErrorKind::kConfig: return "config";
        case ErrorKind::kIo: return "io";
    }
    return "unknown";
}

}  // namespace fsusy
