// Copyright 2026 The Hypergram Authors
//
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

#ifndef HYPERGRAM_ERRORS_HPP
#define HYPERGRAM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hypergram {

// Machine-readable reasons for domain-level failures. Anything that is a
// plain contract violation (bad sizes, bad arguments) throws
// std::invalid_argument instead.
enum class Err {
    NonIdentityProduct,
    ImaginaryPhase,
    NonCommutingInput,
    NotAssignable,
    OddRank,
    InvalidContext,
    DuplicateObservable,
    IdentityObservable,
    MissingValue,
    VertexSetMismatch,
    ThresholdExceeded,
    TooLarge,
};

const char *err_name(Err code);

class DomainError : public std::runtime_error {
  public:
    DomainError(Err code, const std::string &message);
    Err code() const {
        return code_;
    }

  private:
    Err code_;
};

}  // namespace hypergram

#endif
