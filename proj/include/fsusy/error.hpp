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

#pragma once

#include <stdexcept>
#include <string>

namespace fsusy {

enum class ErrorKind {
    kInvalidOrder,
    kDivisionDegenerate,
    kDegenerateSpace,
    kRepresentationInvalid,
    kInvalidGrading,
    kWindowTooSmall,
    kOutOfDomain,
    kFactorizationInvalid,
    kDimensionMismatch,
    kInvalidVariant,
    kMissingReplica,
    kConfig,
    kIo,
};

const char *error_kind_name(ErrorKind kind);

/// Every failure raised by the library carries a machine-readable kind so the
/// CLI can map it onto an exit code and a report entry.
class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string &what) : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

   private:
    ErrorKind kind_;
};

}  // namespace fsusy
