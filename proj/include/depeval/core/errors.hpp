// Copyright 2026 the depeval authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace depeval {

enum class Errc {
  kDimensionMismatch,
  kEmptyGroundTruth,
  kEmptyDomain,
  kNoLabeledPixels,
  kUnmappedClass,
  kIoError,
  kBadFormat,
  kUnknownLabel,
  kTooSparse,
  kDegenerateFit,
  kDegenerateImage,
  kEmptyCatalog,
  kZeroTotal,
  kUnknownModel,
  kEmptyDataset,
  kBadConfig,
};

const char* errc_name(Errc code);

/// Common exception type; `code()` identifies the contract that was violated.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace depeval
